#!/usr/bin/env python3
"""Writes the synthetic toy topic bundles under data/toy.

Trees are written by hand with a tiny builder; the sentence text is read off
the tree leaves so docs/ and parses/ always agree.

    python3 scripts/make_toy_corpus.py [out_dir]
"""
import json
import os
import re
import shutil
import sys


def N(label, *parts):
    """Tree node. A part is either a subtree or 'TAG:word TAG:word ...'."""
    kids = []
    for p in parts:
        if p.startswith("("):
            kids.append(p)
            continue
        for item in p.split():
            tag, word = item.split(":", 1)
            kids.append("(%s %s)" % (tag, word))
    return "(%s %s)" % (label, " ".join(kids))


def S(np, vp):
    return "(ROOT (S %s %s (. .)))" % (np, vp)


def NP(*parts):
    return N("NP", *parts)


def VP(*parts):
    return N("VP", *parts)


def PP(*parts):
    return N("PP", *parts)


def leaves(tree):
    return re.findall(r"\(([^()\s]+) ([^()\s]+)\)", tree)


def text_of(tree):
    out = ""
    for tag, word in leaves(tree):
        if tag in (".", ",") or word == "'s":
            out += word
        else:
            out += (" " if out else "") + word
    return out


# ---------------------------------------------------------------------------
# topic1: earthquake

def topic1():
    n1 = [[
        S(NP("DT:A JJ:powerful NN:earthquake"),
          VP(VP("VBD:struck", NP("JJ:central NNP:Nepal"), PP("IN:on", NP("NNP:Saturday NN:morning"))),
             "CC:and",
             VP("VBD:killed", NP(N("QP", "JJR:more IN:than CD:1,000"), "NNS:people"),
                PP("IN:across", NP("DT:the JJ:mountain NN:region"))))),
        S(NP("NNP:Prime NNP:Minister NNP:Sushil NNP:Koirala"),
          VP("VBD:declared", NP(NP("DT:a NN:state"), PP("IN:of", NP("NN:emergency"))),
             PP("IN:in", NP("DT:the NN:capital NNP:Kathmandu")), PP("IN:on", NP("NNP:Sunday")))),
    ], [
        S(NP(NP("NN:Rescue NNS:teams"), PP("IN:from", NP("DT:the NNP:United NNPS:Nations"))),
          VP("VBD:searched", NP(NP("DT:the JJ:collapsed NNS:buildings"), PP("IN:of", NP("NNP:Kathmandu"))),
             PP("IN:for", NP("NNS:survivors")))),
        S(NP(NP("DT:The JJ:old NNS:temples"), PP("IN:in", NP("NNP:Durbar NNP:Square"))),
          VP("VBD:were", VP("VBN:destroyed", PP("IN:by", NP("DT:the JJ:strong NN:shaking")),
                            PP("IN:during", NP("DT:the JJ:first NNS:minutes"))))),
    ]]
    n2 = [[
        S(NP(NP("JJ:Many NNS:residents"), PP("IN:of", NP("DT:the JJ:remote NN:mountain NNS:villages"))),
          VP("VBD:spent", NP("DT:the JJ:cold NN:night"), N("ADVP", "RB:outside"), PP("IN:in", NP("JJ:small NNS:tents")),
             PP("IN:near", NP("PRP$:their JJ:damaged NNS:homes")))),
        S(NP("DT:The NN:earthquake"),
          VP(VP("VBD:killed", NP(N("QP", "JJR:more IN:than CD:1,000"), "NNS:people")),
             "CC:and",
             VP("VBD:injured", NP("NNS:thousands"), PP("IN:in", NP("NNP:Nepal")),
                PP("IN:on", NP("NNP:Saturday"))))),
    ], [
        S(NP("NNP:Koirala"),
          VP("VBD:asked", NP("JJ:foreign NNS:governments"),
             PP("IN:for", NP(NP("JJ:urgent NN:help"), PP("IN:with", NP("DT:the NN:rescue NN:effort")))))),
        S(NP("PRP:He"),
          VP("VBD:said", N("SBAR", "IN:that", N("S", NP("DT:the NN:death NN:toll"),
                                                  VP("MD:would", VP("VB:rise", PP("IN:in", NP("DT:the JJ:coming NNS:days")))))))),
    ]]
    n3 = [[
        S(NP("DT:The NNP:United NNPS:Nations"),
          VP("VBD:sent", NP("NN:rescue NNS:teams CC:and JJ:medical NNS:supplies"),
             PP("IN:to", NP("NNP:Kathmandu")), PP("IN:on", NP("NNP:Monday")))),
        S(NP("NN:Aid NNS:workers"),
          VP("VBD:warned", N("SBAR", "IN:that", N("S", NP(NP("NNS:survivors"), PP("IN:in", NP("JJ:remote NNS:villages"))),
                                                   VP("VBD:needed", NP("JJ:clean NN:water CC:and NN:shelter")))))),
    ], [
        S(NP(NP("DT:The JJ:powerful NN:earthquake"),
             N("SBAR", N("WHNP", "WDT:that"), N("S", VP("VBD:struck", NP("NNP:Nepal"), PP("IN:on", NP("NNP:Saturday")))))),
          VP("VBD:was", NP(NP("DT:the JJS:worst NN:disaster"), PP("IN:in", NP("DT:the NN:country")),
                           PP("IN:in", NP("CD:eighty NNS:years"))))),
    ]]
    comments = [
        "The earthquake in Nepal is a terrible tragedy for so many people.",
        "More than 1,000 people killed by one earthquake is heartbreaking.",
        "I hope the rescue teams find more survivors in Kathmandu.",
        "The United Nations must send more rescue teams to Nepal now.",
        "Koirala declared a state of emergency, which was the right call.",
        "The powerful earthquake struck Nepal and killed so many people.",
        "My family in Kathmandu is safe but the old temples are gone.",
    ]
    gold = [
        "A powerful earthquake struck central Nepal on Saturday and killed more than 1,000 people. "
        "Prime Minister Sushil Koirala declared a state of emergency. "
        "United Nations rescue teams searched Kathmandu for survivors.",
        "An earthquake in Nepal killed more than 1,000 people on Saturday. "
        "Koirala declared a state of emergency and asked foreign governments for help. "
        "The United Nations sent rescue teams to Kathmandu.",
    ]
    entities = [
        {"type": "PERSON", "surfaces": ["Prime Minister Sushil Koirala", "Sushil Koirala", "Koirala"]},
        {"type": "LOCATION", "surfaces": ["Nepal"]},
        {"type": "LOCATION", "surfaces": ["Kathmandu"]},
        {"type": "ORGANIZATION", "surfaces": ["United Nations"]},
    ]
    return {"id": "topic1", "docs": [("n1", 1429946000, n1), ("n2", 1430030000, n2), ("n3", 1430120000, n3)],
            "comments": comments, "gold": gold, "entities": entities, "L": 40}


# ---------------------------------------------------------------------------
# topic2: school shooting (the first sentence is the classic example tree)

FIG2 = ("(ROOT (S (NP (DT An) (JJ armed) (NN man)) (VP (VP (VBD walked) (PP (IN into) (NP (DT an) (JJ Amish) (NN school)))) "
        "(, ,) (VP (VBD sent) (NP (DT the) (NNS boys)) (ADVP (RB outside))) (CC and) (VP (VP (VBD tied) (PRT (RP up))) "
        "(CC and) (VP (VBD shot) (NP (DT the) (NNS girls)) (, ,) (S (VP (VBG killing) (NP (NP (CD three)) "
        "(PP (IN of) (NP (PRP them))))))))) (. .)))")


def topic2():
    n1 = [[
        FIG2,
        S(NP("DT:The NN:gunman"),
          VP("VBD:was", VP("VBN:identified", PP("IN:as", NP("NNP:Charles NNP:Carl NNP:Roberts"))),
             "CC:and", VP("VBN:described", PP("IN:as", NP("DT:a JJ:local NN:milk NN:truck NN:driver"))))),
    ], [
        S(NP("NNP:Roberts"),
          VP("VBD:killed", NP("PRP:himself"), PP("IN:as", NP("NN:police")),
             PP("IN:from", NP("NNP:Lancaster NNP:County")), N("S", VP("VBG:stormed", NP("DT:the NN:building"))))),
    ]]
    n2 = [[
        S(NP(NP("DT:The JJ:quiet NN:village"), PP("IN:of", NP("NNP:Nickel NNP:Mines"))),
          VP("VBD:woke", "RP:up", PP("IN:to", NP("DT:a JJ:sunny NN:morning")),
             PP("IN:with", NP("JJ:children VBG:walking")), PP("IN:to", NP("NN:school")), PP("IN:along", NP("DT:the NN:road")))),
        S(NP("DT:The NN:gunman"),
          VP(VP("VBD:shot", NP("CD:ten NNS:girls"), PP("IN:inside", NP("DT:the JJ:Amish NN:school"))),
             "CC:and", VP("VBD:killed", NP("CD:five"), PP("IN:before", N("S", VP("VBG:killing", NP("PRP:himself"))))))),
    ], [
        S(NP("NN:Police"),
          VP("VBD:said", N("SBAR", "IN:that", N("S", NP("NNP:Roberts"),
                                                 VP("VBD:had", VP("VBN:planned", NP("DT:the NN:attack"),
                                                                  PP("IN:for", NP("JJ:several NNS:days")))))))),
    ]]
    n3 = [[
        S(NP(NP("DT:The JJ:Amish NN:community"), PP("IN:in", NP("NNP:Lancaster NNP:County"))),
          VP(VP("VBD:mourned", NP("DT:the JJ:five NNS:girls")),
             "CC:and", VP("VBD:forgave", NP(NP("DT:the NN:family"), PP("IN:of", NP("DT:the NN:gunman")))))),
        S(NP("NNS:Neighbors"),
          VP("VBD:brought", NP("NN:food CC:and NNS:flowers"), PP("TO:to", NP("DT:the NNS:families")),
             PP("IN:in", NP("NNP:Nickel NNP:Mines")), PP("IN:during", NP("DT:the JJ:long NN:week")))),
    ]]
    comments = [
        "An armed man walked into an Amish school and shot the girls, how awful.",
        "The Amish community forgave the family of the gunman, that is amazing.",
        "Roberts killed five girls in the school, I can not understand it.",
        "The gunman shot ten girls inside the Amish school in Lancaster County.",
        "Forgiveness from the Amish community is a lesson for all of us.",
        "Praying for the families in Nickel Mines.",
    ]
    gold = [
        "An armed man walked into an Amish school in Lancaster County and shot ten girls, killing five. "
        "The gunman, Charles Carl Roberts, killed himself. The Amish community forgave the family of the gunman.",
        "Charles Carl Roberts shot ten girls inside an Amish school and killed five before killing himself. "
        "The Amish community mourned the girls and forgave the family of the gunman.",
    ]
    entities = [
        {"type": "PERSON", "surfaces": ["Charles Carl Roberts", "Roberts"]},
        {"type": "LOCATION", "surfaces": ["Lancaster County"]},
        {"type": "LOCATION", "surfaces": ["Nickel Mines"]},
    ]
    return {"id": "topic2", "docs": [("n1", 1159800000, n1), ("n2", 1159810000, n2), ("n3", 1159900000, n3)],
            "comments": comments, "gold": gold, "entities": entities, "L": 40}


# ---------------------------------------------------------------------------
# topic3: missing airliner

def topic3():
    n1 = [[
        S(NP(NP("DT:A NNP:Malaysia NNP:Airlines NN:flight"), PP("IN:with", NP("CD:239 NNS:people"), )),
          VP("VBD:disappeared", PP("IN:from", NP("NN:radar")), PP("IN:over", NP("DT:the NNP:South NNP:China NNP:Sea")),
             PP("IN:on", NP("NNP:Saturday")))),
        S(NP("DT:The NN:plane"),
          VP("VBD:was", VP("VBG:flying", PP("IN:from", NP("NNP:Kuala NNP:Lumpur")), PP("TO:to", NP("NNP:Beijing")),
                           PP("IN:with", NP("CD:227 NNS:passengers CC:and CD:12 NN:crew"))))),
    ], [
        S(NP(NP("NNS:Relatives"), PP("IN:of", NP("DT:the NNS:passengers"))),
          VP("VBD:waited", PP("IN:for", NP("NN:news")), PP("IN:at", NP("DT:a NN:hotel")), PP("IN:in", NP("NNP:Beijing")),
             PP("IN:through", NP("DT:the JJ:long NN:night")))),
    ]]
    n2 = [[
        S(NP(NP("NNS:Officials"), PP("IN:at", NP("DT:the NN:airport"))),
          VP("VBD:gave", NP("DT:a JJ:short NN:briefing"), PP("TO:to", NP("NNS:reporters")),
             PP("IN:in", NP("DT:a JJ:crowded NN:hall")), PP("IN:on", NP("NNP:Sunday NN:morning")))),
        S(NP("NNP:Prime NNP:Minister NNP:Najib NNP:Razak"),
          VP(VP("VBD:said", N("SBAR", "IN:that", N("S", NP("DT:the NN:search"), VP("MD:would", VP("VB:continue"))))),
             "CC:and", VP("VBD:asked", NP("JJ:neighboring NNS:countries"), PP("IN:for", NP("NN:help"))))),
    ], [
        S(NP(NP("NNS:Ships CC:and NNS:planes"), PP("IN:from", NP("CD:ten NNS:countries"))),
          VP("VBD:searched", NP("DT:the NNP:South NNP:China NNP:Sea"), PP("IN:for", NP("NN:debris")),
             PP("IN:from", NP("DT:the JJ:missing NN:plane")))),
    ]]
    n3 = [[
        S(NP("NNP:Malaysia NNP:Airlines"),
          VP("VBD:said", N("SBAR", "IN:that", N("S", NP("DT:the JJ:missing NN:flight"),
                                                 VP("VBD:carried", NP("CD:239 NNS:people"),
                                                    PP("IN:from", NP("CD:14 NNS:countries"))))))),
        S(NP("NNP:Najib"),
          VP("VBD:promised", NP("DT:the NNS:families"), N("S", VP("TO:to", VP("VB:share", NP("DT:every NN:piece"),
                                                                           PP("IN:of", NP("NN:news"))))))),
    ], [
        S(NP("NNS:Investigators"),
          VP("VBD:did", "RB:not", VP("VB:rule", N("PRT", "RP:out"), NP("DT:a NN:hijacking"),
                                     PP("IN:of", NP("DT:the NNP:Malaysia NNP:Airlines NN:plane"))))),
    ]]
    comments = [
        "How can a Malaysia Airlines plane with 239 people just disappear from radar?",
        "My thoughts are with the relatives of the passengers waiting in Beijing.",
        "The plane disappeared over the South China Sea, somebody must know something.",
        "Ships and planes from ten countries searched and found nothing.",
        "Najib should share every piece of news with the families.",
        "239 people do not simply vanish.",
    ]
    gold = [
        "A Malaysia Airlines flight from Kuala Lumpur to Beijing with 239 people disappeared from radar over the "
        "South China Sea. Ships and planes from ten countries searched for debris.",
        "A Malaysia Airlines plane carrying 239 people disappeared over the South China Sea on Saturday. "
        "Prime Minister Najib Razak asked neighboring countries for help with the search.",
    ]
    entities = [
        {"type": "ORGANIZATION", "surfaces": ["Malaysia Airlines"]},
        {"type": "PERSON", "surfaces": ["Prime Minister Najib Razak", "Najib Razak", "Najib"]},
        {"type": "LOCATION", "surfaces": ["South China Sea"]},
        {"type": "LOCATION", "surfaces": ["Beijing"]},
        {"type": "LOCATION", "surfaces": ["Kuala Lumpur"]},
    ]
    return {"id": "topic3", "docs": [("n1", 1394253000, n1), ("n2", 1394340000, n2), ("n3", 1394420000, n3)],
            "comments": comments, "gold": gold, "entities": entities, "L": 40}


# ---------------------------------------------------------------------------
# topic4: wildfire

def topic4():
    n1 = [[
        S(NP(NP("DT:A JJ:huge NN:wildfire"), PP("IN:in", NP("JJ:northern NNP:California"))),
          VP(VP("VBD:destroyed", NP(N("QP", "JJR:more IN:than CD:500"), "NNS:homes")),
             "CC:and", VP("VBD:forced", NP("CD:20,000 NNS:residents"), N("S", VP("TO:to", VP("VB:flee")))))),
        S(NP("DT:The NN:weather"),
          VP("VBD:was", N("ADJP", "JJ:hot CC:and JJ:dry"), PP("IN:for", NP("DT:the JJ:third JJ:straight NN:week")),
             PP("IN:across", NP("DT:the JJ:whole NN:state")))),
    ], [
        S(NP("NNP:Governor NNP:Jerry NNP:Brown"),
          VP("VBD:declared", NP(NP("DT:a NN:state"), PP("IN:of", NP("NN:emergency"))),
             PP("IN:in", NP("CD:three NNS:counties")), PP("IN:on", NP("NNP:Friday NN:night")))),
    ]]
    n2 = [[
        S(NP(NP("NNS:Thousands"), PP("IN:of", NP("NNS:firefighters"))),
          VP("VBD:battled", NP("DT:the NN:wildfire"), PP("IN:in", NP("JJ:strong NNS:winds")),
             PP("IN:through", NP("DT:the NN:night")))),
        S(NP("DT:The NN:fire"),
          VP("VBD:destroyed", NP(N("QP", "JJR:more IN:than CD:500"), "NNS:homes"),
             PP("IN:in", NP("DT:the NN:town")), PP("IN:of", NP("NNP:Paradise")))),
    ], [
        S(NP("NNP:Brown"),
          VP("VBD:asked", NP("DT:the JJ:federal NN:government"), PP("IN:for", NP("JJ:emergency NN:aid")),
             PP("IN:for", NP("DT:the JJ:burned NNS:towns")))),
    ]]
    n3 = [[
        S(NP(NP("NNS:Residents"), PP("IN:of", NP("DT:the JJ:nearby NN:town"))),
          VP("VBD:watched", NP("DT:the NN:smoke"), PP("IN:from", NP("DT:a JJ:safe NN:distance")),
             PP("IN:on", NP("DT:the NN:hill")), PP("IN:with", NP("JJ:great NN:worry")))),
        S(NP("NNS:Firefighters"),
          VP("VBD:contained", NP("DT:the NN:wildfire"), PP("IN:after", NP("CD:ten NNS:days")),
             PP("IN:with", NP(NP("DT:the NN:help"), PP("IN:of", NP("NN:rain")))))),
    ], [
        S(NP("DT:The NN:wildfire"),
          VP("VBD:was", NP(NP("DT:the JJS:worst NN:fire"), PP("IN:in", NP("NNP:California NN:history"))))),
    ]]
    comments = [
        "More than 500 homes destroyed, this wildfire is a disaster for California.",
        "Thank you to the firefighters who battled the wildfire all night.",
        "Brown was right to declare a state of emergency.",
        "20,000 residents forced to flee their homes, unbelievable.",
        "The firefighters contained the fire after ten days, what heroes.",
        "Climate change makes every wildfire in California worse.",
    ]
    gold = [
        "A huge wildfire in northern California destroyed more than 500 homes and forced 20,000 residents to flee. "
        "Governor Jerry Brown declared a state of emergency. Firefighters contained the wildfire after ten days.",
        "A wildfire in California destroyed more than 500 homes. Thousands of firefighters battled the fire and "
        "Brown declared a state of emergency in three counties.",
    ]
    entities = [
        {"type": "PERSON", "surfaces": ["Governor Jerry Brown", "Jerry Brown", "Brown"]},
        {"type": "LOCATION", "surfaces": ["California"]},
        {"type": "LOCATION", "surfaces": ["Paradise"]},
    ]
    return {"id": "topic4", "docs": [("n1", 1541750000, n1), ("n2", 1541840000, n2), ("n3", 1542600000, n3)],
            "comments": comments, "gold": gold, "entities": entities, "L": 40}


# ---------------------------------------------------------------------------
# topic5: product launch; ships explicit co-reference clusters

def topic5():
    n1 = [[
        S(NP(NP("NNS:Crowds"), PP("IN:of", NP("NNS:fans"))),
          VP("VBD:lined", "RP:up", PP("IN:outside", NP("DT:the NN:hall")), PP("IN:in", NP("NNP:San NNP:Francisco")),
             PP("IN:before", NP("NN:dawn")))),
        S(NP("NNP:Apple NN:chief NN:executive NNP:Tim NNP:Cook"),
          VP(VP("VBD:unveiled", NP("DT:a JJ:new NN:phone"), PP("IN:with", NP("DT:a JJR:larger NN:screen"))),
             "CC:and", VP("VBD:introduced", NP("DT:a JJ:smart NN:watch")))),
    ], [
        S(NP("PRP:He"),
          VP("VBD:said", N("SBAR", "IN:that", N("S", NP("DT:the NN:watch"),
                                                 VP("MD:would", VP("VB:go", PP("IN:on", NP("NN:sale")),
                                                                   PP("IN:in", NP("DT:the JJ:early NN:spring")))))))),
    ]]
    n2 = [[
        S(NP("DT:The NN:weather"),
          VP("VBD:was", N("ADJP", "JJ:cool CC:and JJ:cloudy"), PP("IN:in", NP("NNP:San NNP:Francisco")),
             PP("IN:for", NP("DT:the JJ:whole NN:day")))),
        S(NP("NNP:Apple"),
          VP("VBD:unveiled", NP("DT:a JJ:new NN:phone CC:and DT:a JJ:smart NN:watch"),
             PP("IN:at", NP("DT:a JJ:crowded NN:event")), PP("IN:on", NP("NNP:Tuesday")))),
    ], [
        S(NP("NNP:Cook"),
          VP("VBD:called", NP("DT:the NN:watch"), NP(NP("DT:the JJS:most JJ:personal NN:device"),
                                                       PP("IN:from", NP("NNP:Apple"))))),
    ]]
    n3 = [[
        S(NP("NNS:Analysts"),
          VP("VBD:said", N("SBAR", "IN:that", N("S", NP("DT:the JJ:new NN:phone"),
                                                 VP("MD:would", VP("VB:sell", NP("CD:ten CD:million NNS:units"),
                                                                   PP("IN:in", NP("DT:the JJ:first NN:week")))))))),
        S(NP(NP("NNS:Shares"), PP("IN:of", NP("NNP:Apple"))),
          VP("VBD:fell", NP("CD:one NN:percent"), PP("IN:after", NP("DT:the NN:event")),
             PP("IN:on", NP("NNP:Tuesday NN:afternoon")))),
    ]]
    comments = [
        "Apple unveiled a new phone with a larger screen, finally.",
        "The smart watch looks great but I will wait for the price.",
        "Cook did a good job at the event.",
        "A new phone with a larger screen is what everyone wanted from Apple.",
        "Ten million units in the first week sounds too optimistic.",
    ]
    gold = [
        "Apple chief executive Tim Cook unveiled a new phone with a larger screen and introduced a smart watch. "
        "Analysts said the new phone would sell ten million units in the first week.",
        "Apple unveiled a new phone and a smart watch on Tuesday. Cook said the watch would go on sale in the early "
        "spring. Shares of Apple fell one percent.",
    ]
    return {"id": "topic5", "docs": [("n1", 1410200000, n1), ("n2", 1410210000, n2), ("n3", 1410300000, n3)],
            "comments": comments, "gold": gold, "entities": [], "L": 40, "mentions": topic5_mentions}


def topic5_mentions(sentences):
    """Co-reference clusters for topic5 built from the leaf tokens."""
    def find(sid, words):
        toks = sentences[sid]
        for i in range(len(toks) - len(words) + 1):
            if toks[i:i + len(words)] == words:
                return i, i + len(words)
        raise KeyError((sid, words))

    def mention(sid, surface, pronoun=False):
        b, e = find(sid, surface.split())
        return {"sentence_id": sid, "start": b, "end": e, "surface": surface, "is_pronoun": pronoun}

    return [
        {"doc_id": "n1", "entity_type": "PERSON",
         "mentions": [mention("n1.1", "Tim Cook"), mention("n1.2", "He", True)]},
        {"doc_id": "n2", "entity_type": "PERSON", "mentions": [mention("n2.2", "Cook")]},
        {"doc_id": "n1", "entity_type": "ORGANIZATION", "mentions": [mention("n1.1", "Apple")]},
        {"doc_id": "n2", "entity_type": "ORGANIZATION",
         "mentions": [mention("n2.1", "Apple"), mention("n2.2", "Apple")]},
        {"doc_id": "n3", "entity_type": "ORGANIZATION", "mentions": [mention("n3.1", "Apple")]},
        {"doc_id": "n1", "entity_type": "LOCATION", "mentions": [mention("n1.0", "San Francisco")]},
        {"doc_id": "n2", "entity_type": "LOCATION", "mentions": [mention("n2.0", "San Francisco")]},
    ]


# ---------------------------------------------------------------------------
# comment_focus: readers talk almost only about the library closure

def comment_focus():
    n1 = [[
        S(NP(NP("DT:The NN:city NN:council"), PP("IN:of", NP("NNP:Springfield"))),
          VP("VBD:approved", NP("DT:a JJ:new NN:budget"), PP("IN:for", NP("DT:the NN:coming NN:year")),
             PP("IN:after", NP("DT:a JJ:long NN:debate")))),
        S(NP("DT:The NN:budget"),
          VP("VBD:raised", NP(NP("NN:spending"), PP("IN:on", NP("NNS:roads CC:and NNS:bridges"))),
             PP("IN:by", NP("CD:ten NN:percent")), PP("IN:over", NP("JJ:last NN:year")))),
    ], [
        S(NP("DT:The NN:council"),
          VP("VBD:voted", N("S", VP("TO:to", VP("VB:close", NP("DT:the JJ:old NN:public NN:library"),
                                                   PP("IN:on", NP("NNP:Main NNP:Street"))))))),
        S(NP("NNS:Taxes"),
          VP("MD:will", VP("VB:stay", N("ADJP", "JJ:flat"), PP("IN:for", NP("JJ:most NNS:homeowners")),
                           PP("IN:in", NP("DT:the NN:city")), PP("IN:next", NP("NN:year"))))),
    ]]
    comments = [
        "Closing the public library on Main Street is a terrible decision.",
        "The old library on Main Street is where my kids learned to read.",
        "Why close the public library when the council wastes money elsewhere?",
        "Save the Main Street library!",
        "The library vote is shameful, the council should be ashamed.",
        "I will miss the old public library on Main Street.",
    ]
    return {"id": "comment_focus", "docs": [("n1", 1600000000, n1)], "comments": comments, "gold": [],
            "entities": [], "L": 30, "focus": "n1.2"}


# ---------------------------------------------------------------------------

def write_topic(root, topic):
    path = os.path.join(root, topic["id"])
    shutil.rmtree(path, ignore_errors=True)
    os.makedirs(os.path.join(path, "docs"))
    os.makedirs(os.path.join(path, "parses"))
    leaves_by_sentence = {}
    for doc_id, _, paragraphs in topic["docs"]:
        text_blocks, trees = [], []
        pos = 0
        for paragraph in paragraphs:
            lines = []
            for tree in paragraph:
                sid = "%s.%d" % (doc_id, pos)
                leaves_by_sentence[sid] = [w for _, w in leaves(tree)]
                lines.append(text_of(tree))
                trees.append(tree)
                pos += 1
            text_blocks.append("\n".join(lines))
        with open(os.path.join(path, "docs", doc_id + ".txt"), "w") as f:
            f.write("\n\n".join(text_blocks) + "\n")
        with open(os.path.join(path, "parses", doc_id + ".ptb"), "w") as f:
            f.write("\n".join(trees) + "\n")
    meta = {
        "id": topic["id"],
        "length_budget_words": topic["L"],
        "documents": [{"id": d, "timestamp": ts} for d, ts, _ in topic["docs"]],
    }
    if topic["entities"]:
        meta["entities"] = topic["entities"]
    with open(os.path.join(path, "topic.json"), "w") as f:
        json.dump(meta, f, indent=2)
        f.write("\n")
    with open(os.path.join(path, "comments.txt"), "w") as f:
        f.write("\n".join(topic["comments"]) + "\n")
    if topic.get("mentions"):
        with open(os.path.join(path, "mentions.json"), "w") as f:
            json.dump(topic["mentions"](leaves_by_sentence), f, indent=2)
            f.write("\n")
    if topic["gold"]:
        os.makedirs(os.path.join(path, "gold"))
        for i, g in enumerate(topic["gold"]):
            with open(os.path.join(path, "gold", "ref%d.txt" % (i + 1)), "w") as f:
                f.write(g + "\n")


def write_missing_parses(root):
    """A bundle whose parse file stops one sentence short."""
    topic = topic1()
    topic["id"] = "missing_parses"
    write_topic(root, topic)
    ptb = os.path.join(root, "missing_parses", "parses", "n3.ptb")
    with open(ptb) as f:
        lines = f.read().splitlines()
    with open(ptb, "w") as f:
        f.write("\n".join(lines[:-1]) + "\n")


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    repo = os.path.dirname(here)
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(repo, "data", "toy")
    os.makedirs(out, exist_ok=True)
    for build in (topic1, topic2, topic3, topic4, topic5, comment_focus):
        write_topic(out, build())
    write_missing_parses(os.path.join(repo, "tests", "fixtures"))


if __name__ == "__main__":
    main()
