#!/usr/bin/env python3
"""Reference stems for the stemmer test, from NLTK's port of Martin Porter's C
implementation (MARTIN_EXTENSIONS mode).

    pip install nltk && python3 scripts/make_porter_fixture.py [extra text files...]

Words come from the toy corpus, any files given on the command line and a
list of classic stemmer examples.
"""
import os
import re
import sys

from nltk.stem.porter import PorterStemmer

here = os.path.dirname(os.path.abspath(__file__))
repo = os.path.dirname(here)
words = set()
for path in sys.argv[1:]:
    words.update(re.findall(r"[a-z]+", open(path, encoding="utf-8").read().lower()))
for root, _, files in os.walk(os.path.join(repo, "data")):
    for f in files:
        if f.endswith(".txt"):
            words.update(re.findall(r"[a-z]+", open(os.path.join(root, f), encoding="utf-8").read().lower()))
# Classic examples that exercise every step.
words.update("""caresses ponies ties caress cats feed agreed plastered bled motoring sing conflated troubled
sized hopping tanned falling hissing fizzed failing filing happy sky relational conditional rational valenci
hesitanci digitizer conformabli radicalli differentli vileli analogousli vietnamization predication operator
feudalism decisiveness hopefulness callousness formaliti sensitiviti sensibiliti triplicate formative
formalize electriciti electrical hopeful goodness revival allowance inference airliner gyroscopic adjustable
defensible irritant replacement adjustment dependent adoption homologou communism activate angulariti
homologous effective bowdlerize probate rate cease controll roll generalizations oscillators""".split())

stemmer = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)
out = os.path.join(repo, "tests", "fixtures", "porter_vocab.tsv")
with open(out, "w") as f:
    for w in sorted(words):
        f.write("%s\t%s\n" % (w, stemmer.stem(w)))
print(len(words), "words ->", out)
