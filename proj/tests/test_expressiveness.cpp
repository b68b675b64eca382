#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ramds/error.hpp"
#include "ramds/expressiveness.hpp"
#include "sparse_oracle.hpp"
#include "support.hpp"

using namespace ramds;

using namespace testing;

TEST_CASE("position weights") {
  CHECK(position_weight(0, 0.8, 4) == 1.0);
  CHECK(position_weight(2, 0.8, 4) == doctest::Approx(0.64).epsilon(1e-15));
  CHECK(position_weight(7, 0.8, 4) == doctest::Approx(0.4096).epsilon(1e-15));
  CHECK(position_weight(4, 0.8, 4) == position_weight(40, 0.8, 4));
  CHECK(testing::error_of([] { position_weight(-1, 0.8, 4); }) == ErrorCode::InvalidArgument);
  CHECK(testing::error_of([] { position_weight(1, 1.0, 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("comment weight is the mean cosine to the news") {
  const std::vector<TermVector> one = {sparse({1, 2, 0})};
  CHECK(comment_weight(sparse({1, 2, 0}), one) == doctest::Approx(1.0));
  CHECK(comment_weight(sparse({0, 0, 5}), one) == 0.0);
  const std::vector<TermVector> axes = {sparse({1, 0, 0}), sparse({0, 1, 0})};
  CHECK(comment_weight(sparse({1, 1, 0}), axes) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  const std::vector<TermVector> with_zero = {sparse({1, 0, 0}), TermVector()};
  CHECK(comment_weight(sparse({1, 0, 0}), with_zero) == doctest::Approx(0.5));
  CHECK(testing::error_of([&] { comment_weight(TermVector(), one); }) == ErrorCode::ZeroVector);
}

TEST_CASE("loss at simple points") {
  SparseCodingModel model;
  model.dimension = 2;
  model.news = {sparse({1, 0})};
  model.rho = {1.0};
  const Dense one = {1.0};
  CHECK(loss(model, one) == doctest::Approx(model.params.lambda).epsilon(1e-15));

  model.news = {sparse({1, 0}), sparse({0, 2})};
  model.rho = {1.0, 0.5};
  model.comments = {sparse({3, 0})};
  model.tau = {0.4};
  const Dense zero = {0.0, 0.0};
  CHECK(loss(model, zero) == doctest::Approx((1.0 * 1 + 0.5 * 4) / 4.0 + 0.4 * 9 / 2.0).epsilon(1e-15));

  const Dense bad = {1.0};
  CHECK(testing::error_of([&] { loss(model, bad); }) == ErrorCode::DimensionMismatch);
  model.tau.clear();
  CHECK(testing::error_of([&] { loss(model, zero); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("loss matches a dense evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto model = random_model(rng, 12, 2 + trial % 5, trial % 4);
    Dense a(model.news.size());
    for (auto& x : a) x = u(rng);
    CHECK(loss(model, a) == doctest::Approx(oracle_loss(model, a)).epsilon(1e-12));
  }
}

TEST_CASE("gradient at zero and against central differences") {
  SparseCodingModel single;
  single.dimension = 2;
  single.news = {sparse({2, 0})};
  single.rho = {1.0};
  const Dense zero = {0.0};
  CHECK(gradient_coordinate(single, zero, 0) == doctest::Approx(-4.0));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.5);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto model = random_model(rng, 15, 3 + trial % 6, trial % 5);
    Dense a(model.news.size());
    for (auto& x : a) x = u(rng);
    const std::size_t k = static_cast<std::size_t>(trial) % a.size();
    const double h = 1e-6;
    Dense plus = a, minus = a;
    plus[k] += h;
    minus[k] -= h;
    const double fd = (smooth_loss(model, plus) - smooth_loss(model, minus)) / (2 * h);
    const double g = gradient_coordinate(model, a, k);
    CHECK(std::abs(g - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("gradient is the weighted residual overlap and vanishes for a zero basis vector") {
  SparseCodingModel model;
  model.dimension = 3;
  model.news = {sparse({1, 0, 0}), sparse({0, 2, 0}), TermVector()};
  model.rho = {1.0, 0.3, 1.0};
  model.comments = {sparse({4, 0, 0})};
  model.tau = {0.7};
  const Dense a = {1.0, 0.0, 0.0};
  // residuals: (0,0,0), (-1,2,0), (-1,0,0) for news, (3,0,0) for the comment
  CHECK(gradient_coordinate(model, a, 1) == doctest::Approx(-0.3 * 4.0 / 3.0));
  CHECK(gradient_coordinate(model, a, 0) == doctest::Approx((0.3 + 1.0) / 3.0 - 0.7 * 3.0));
  CHECK(gradient_coordinate(model, a, 2) == 0.0);  // a sentence with no dictionary terms
  const auto result = solve(model);
  CHECK(result.scores[2] == 0.0);
}

TEST_CASE("one vector converges to the closed-form minimizer") {
  SparseCodingModel model;
  model.dimension = 2;
  model.news = {sparse({2, 0})};
  model.rho = {1.0};
  const auto result = solve(model);
  const double expected = (4.0 - 0.005) / 4.0;  // minimizer of (1/2)(1-a)^2 * 4 + 0.005 a
  CHECK(result.scores[0] == doctest::Approx(expected).epsilon(1e-3));
  CHECK(result.scores[0] == doctest::Approx(0.99875).epsilon(1e-9));
  CHECK(result.converged);
  CHECK(result.loss_trace.size() == static_cast<std::size_t>(result.iterations_run) + 1);
}

TEST_CASE("loss never increases and scores stay non-negative") {
  std::mt19937_64 rng(2024);
  int instances = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto model = random_model(rng, 50, 20, 10);
    const auto result = solve(model);
    for (std::size_t t = 1; t < result.loss_trace.size(); ++t)
      REQUIRE(result.loss_trace[t] <= result.loss_trace[t - 1] + 1e-9);
    for (const double a : result.scores) REQUIRE(a >= 0.0);
    CHECK(result.loss_trace.back() == doctest::Approx(oracle_loss(model, result.scores)).epsilon(1e-10));
    ++instances;
  }
  CHECK(instances == 100);
}

TEST_CASE("iterates are non-negative at every step") {
  std::mt19937_64 rng(5);
  auto model = random_model(rng, 30, 12, 6);
  for (int T = 1; T <= 40; ++T) {
    model.params.max_iterations = T;
    model.params.epsilon = 0.0;
    const auto result = solve(model);
    CHECK(result.iterations_run == T);
    for (const double a : result.scores) CHECK(a >= 0.0);
  }
}

TEST_CASE("a penalty no smaller than every initial gradient keeps A at zero") {
  std::mt19937_64 rng(3);
  auto model = random_model(rng, 20, 8, 4);
  const Dense zero(model.news.size(), 0.0);
  double biggest = 0.0;
  for (std::size_t k = 0; k < zero.size(); ++k) biggest = std::max(biggest, std::abs(gradient_coordinate(model, zero, k)));
  model.params.lambda = biggest * model.params.eta;
  const auto result = solve(model);
  CHECK(nnz(result.scores) == 0);
}

TEST_CASE("a run that stops on a zero change is stuck on a blocked coordinate") {
  // The largest |dJ/da_k| can belong to a coefficient held at zero by the
  // clamp; the step then changes nothing and the loss change is exactly zero.
  std::mt19937_64 rng(5);
  int stalls = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto model = random_model(rng, 40, 15, 8);
    model.params.epsilon = 0.0;
    model.params.max_iterations = 20000;
    const auto r = solve(model);
    if (r.iterations_run == model.params.max_iterations) continue;
    REQUIRE(r.loss_trace.size() >= 2);
    CHECK(r.loss_trace.back() == r.loss_trace[r.loss_trace.size() - 2]);
    std::size_t k = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < r.scores.size(); ++j) {
      const double g = std::abs(gradient_coordinate(model, r.scores, j));
      if (g > best) best = g, k = j;
    }
    const double g = gradient_coordinate(model, r.scores, k);
    // blocked at zero by the clamp, or already optimal along k (g = -lambda)
    const double lambda = model.params.lambda;
    CHECK((r.scores[k] == 0.0 ? g >= -lambda : std::abs(g + lambda) <= 1e-6 * std::max(1.0, std::abs(g))));
    stalls += r.scores[k] == 0.0 && g > 0.0;
  }
  CHECK(stalls > 0);
}

TEST_CASE("news-only unit-weight problem equals plain self-reconstruction") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 25, m = 4 + trial % 8;
    std::vector<Dense> x;
    SparseCodingModel model;
    model.dimension = d;
    for (std::size_t i = 0; i < m; ++i) {
      x.push_back(random_vector(rng, d));
      model.news.push_back(sparse(x.back()));
      model.rho.push_back(1.0);
    }
    const auto got = solve(model);
    const auto& p = model.params;
    const auto want = plain_sparse_coding(x, p.lambda, p.eta, p.max_iterations, p.epsilon);
    REQUIRE(got.loss_trace.size() == want.trace.size());
    for (std::size_t t = 0; t < want.trace.size(); ++t)
      CHECK(got.loss_trace[t] == doctest::Approx(want.trace[t]).epsilon(1e-10));
    for (std::size_t j = 0; j < m; ++j) CHECK(got.scores[j] == doctest::Approx(want.a[j]).epsilon(1e-9));
  }
}

TEST_CASE("bad parameters and dimensions are rejected") {
  SparseCodingModel model;
  model.dimension = 1;
  CHECK(testing::error_of([&] { solve(model); }) == ErrorCode::InvalidArgument);
  model.news = {sparse({0, 1})};
  model.rho = {1.0};
  CHECK(testing::error_of([&] { solve(model); }) == ErrorCode::DimensionMismatch);
  model.dimension = 2;
  model.params.eta = 0.0;
  CHECK(testing::error_of([&] { solve(model); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("topic model: position weights per paragraph, comment weights, news-only mode") {
  const auto topic = load_topic(RAMDS_DATA_DIR "/toy/topic1");
  SparseCodingParams params;
  const auto with = build_sparse_coding_model(topic, params, true);
  const auto without = build_sparse_coding_model(topic, params, false);
  const auto news = topic.news_sentences();
  REQUIRE(with.news.size() == news.size());
  for (std::size_t i = 0; i < news.size(); ++i)
    CHECK(with.rho[i] == position_weight(news[i]->paragraph_index, 0.8, 4));
  CHECK_FALSE(with.comments.empty());
  CHECK(with.comments.size() == with.tau.size());
  for (std::size_t i = 0; i < with.comments.size(); ++i) {
    CHECK(with.tau[i] == doctest::Approx(comment_weight(with.comments[i], with.news)));
    CHECK(with.tau[i] >= 0.0);
    CHECK(with.tau[i] <= 1.0);
  }
  CHECK(without.comments.empty());
  CHECK(without.dimension == topic.dictionary.size());
}
