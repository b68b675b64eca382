#include "ramds/expressiveness.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ramds/error.hpp"

namespace ramds {
namespace {

void check_model(const SparseCodingModel& model) {
  if (model.rho.size() != model.news.size())
    throw Error(ErrorCode::DimensionMismatch, "rho must have one weight per news vector");
  if (model.tau.size() != model.comments.size())
    throw Error(ErrorCode::DimensionMismatch, "tau must have one weight per comment vector");
  auto check_columns = [&](const TermVector& v) {
    if (!v.is_zero() && static_cast<std::size_t>(v.entries().back().first) >= model.dimension)
      throw Error(ErrorCode::DimensionMismatch, "vector column exceeds model dimension");
  };
  for (const auto& v : model.news) check_columns(v);
  for (const auto& v : model.comments) check_columns(v);
}

std::vector<double> reconstruction(const SparseCodingModel& model, std::span<const double> scores) {
  std::vector<double> xbar(model.dimension, 0.0);
  for (std::size_t j = 0; j < model.news.size(); ++j) {
    if (scores[j] == 0.0) continue;
    for (const auto& [column, value] : model.news[j].entries()) xbar[column] += scores[j] * value;
  }
  return xbar;
}

double residual_sq(const TermVector& target, const std::vector<double>& xbar) {
  // |t - xbar|^2 = |xbar|^2 - 2 t.xbar + |t|^2, accumulated densely to keep it exact.
  std::vector<double> r = xbar;
  for (const auto& [column, value] : target.entries()) r[column] -= value;
  double sum = 0.0;
  for (const double v : r) sum += v * v;
  return sum;
}

double residual_dot(const TermVector& target, const std::vector<double>& xbar, const TermVector& basis) {
  double sum = 0.0;
  for (const auto& [column, value] : basis.entries()) sum += (target.at(column) - xbar[column]) * value;
  return sum;
}

// Precomputed inner products so that one iteration costs O(m).
//   J(A) = k0 - A.b + (c/2) A'GA + lambda |A|_1
class GramCache {
 public:
  explicit GramCache(const SparseCodingModel& model) : m_(model.news.size()) {
    const double inv_m = 1.0 / static_cast<double>(m_);
    const std::size_t n = model.comments.size();
    const double inv_n = n > 0 ? 1.0 / static_cast<double>(n) : 0.0;

    gram_.assign(m_ * m_, 0.0);
    for (std::size_t j = 0; j < m_; ++j) {
      for (std::size_t k = j; k < m_; ++k) {
        const double g = dot(model.news[j], model.news[k]);
        gram_[j * m_ + k] = g;
        gram_[k * m_ + j] = g;
      }
    }
    linear_.assign(m_, 0.0);
    for (std::size_t k = 0; k < m_; ++k) {
      double news_part = 0.0;
      for (std::size_t i = 0; i < m_; ++i) news_part += model.rho[i] * gram_[i * m_ + k];
      double comment_part = 0.0;
      for (std::size_t i = 0; i < n; ++i) comment_part += model.tau[i] * dot(model.comments[i], model.news[k]);
      linear_[k] = inv_m * news_part + inv_n * comment_part;
    }
    curvature_ = inv_m * std::accumulate(model.rho.begin(), model.rho.end(), 0.0) +
                 inv_n * std::accumulate(model.tau.begin(), model.tau.end(), 0.0);
    constant_ = 0.0;
    for (std::size_t i = 0; i < m_; ++i) constant_ += 0.5 * inv_m * model.rho[i] * gram_[i * m_ + i];
    for (std::size_t i = 0; i < n; ++i) {
      const double norm = model.comments[i].norm2();
      constant_ += 0.5 * inv_n * model.tau[i] * norm * norm;
    }
    lambda_ = model.params.lambda;
  }

  double gram(std::size_t j, std::size_t k) const { return gram_[j * m_ + k]; }
  double linear(std::size_t k) const { return linear_[k]; }
  double curvature() const { return curvature_; }

  // G*A, maintained incrementally by the solver.
  void add_column(std::vector<double>& ga, std::size_t k, double delta) const {
    for (std::size_t j = 0; j < m_; ++j) ga[j] += delta * gram_[j * m_ + k];
  }

  double gradient(const std::vector<double>& ga, std::size_t k) const {
    return -linear_[k] + curvature_ * ga[k];
  }

  double loss(const std::vector<double>& a, const std::vector<double>& ga) const {
    double quad = 0.0, lin = 0.0, l1 = 0.0;
    for (std::size_t j = 0; j < m_; ++j) {
      quad += a[j] * ga[j];
      lin += a[j] * linear_[j];
      l1 += std::abs(a[j]);
    }
    return constant_ - lin + 0.5 * curvature_ * quad + lambda_ * l1;
  }

 private:
  std::size_t m_;
  std::vector<double> gram_;
  std::vector<double> linear_;
  double curvature_ = 0.0;
  double constant_ = 0.0;
  double lambda_ = 0.0;
};

double soft_threshold(double value, double threshold) {
  const double magnitude = std::abs(value) - threshold;
  if (magnitude <= 0.0) return 0.0;
  return value > 0.0 ? magnitude : -magnitude;
}

}  // namespace

double position_weight(int paragraph, double base, int cap) {
  if (paragraph < 0) throw Error(ErrorCode::InvalidArgument, "paragraph index must be >= 0");
  if (!(base > 0.0 && base < 1.0)) throw Error(ErrorCode::InvalidArgument, "position base must lie in (0, 1)");
  return std::pow(base, paragraph < cap ? paragraph : cap);
}

double comment_weight(const TermVector& comment, std::span<const TermVector> news) {
  if (comment.is_zero()) throw Error(ErrorCode::ZeroVector, "comment vector is zero");
  if (news.empty()) throw Error(ErrorCode::InvalidArgument, "no news vectors");
  double sum = 0.0;
  for (const auto& x : news) sum += cosine(comment, x);
  return sum / static_cast<double>(news.size());
}

double smooth_loss(const SparseCodingModel& model, std::span<const double> scores) {
  check_model(model);
  if (scores.size() != model.news.size())
    throw Error(ErrorCode::DimensionMismatch, "score vector length differs from news count");
  const auto xbar = reconstruction(model, scores);
  double news_term = 0.0;
  for (std::size_t i = 0; i < model.news.size(); ++i) news_term += model.rho[i] * residual_sq(model.news[i], xbar);
  double total = news_term / (2.0 * static_cast<double>(model.news.size()));
  if (!model.comments.empty()) {
    double comment_term = 0.0;
    for (std::size_t i = 0; i < model.comments.size(); ++i)
      comment_term += model.tau[i] * residual_sq(model.comments[i], xbar);
    total += comment_term / (2.0 * static_cast<double>(model.comments.size()));
  }
  return total;
}

double loss(const SparseCodingModel& model, std::span<const double> scores) {
  double l1 = 0.0;
  for (const double a : scores) l1 += std::abs(a);
  return smooth_loss(model, scores) + model.params.lambda * l1;
}

double gradient_coordinate(const SparseCodingModel& model, std::span<const double> scores, std::size_t k) {
  check_model(model);
  if (scores.size() != model.news.size())
    throw Error(ErrorCode::DimensionMismatch, "score vector length differs from news count");
  if (k >= model.news.size()) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
  const auto xbar = reconstruction(model, scores);
  const TermVector& basis = model.news[k];
  double news_term = 0.0;
  for (std::size_t i = 0; i < model.news.size(); ++i) news_term += model.rho[i] * residual_dot(model.news[i], xbar, basis);
  double grad = -news_term / static_cast<double>(model.news.size());
  if (!model.comments.empty()) {
    double comment_term = 0.0;
    for (std::size_t i = 0; i < model.comments.size(); ++i)
      comment_term += model.tau[i] * residual_dot(model.comments[i], xbar, basis);
    grad -= comment_term / static_cast<double>(model.comments.size());
  }
  return grad;
}

ExpressivenessResult solve(const SparseCodingModel& model) {
  check_model(model);
  const std::size_t m = model.news.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "sparse coding needs at least one news vector");
  const auto& params = model.params;
  if (!(params.lambda >= 0.0) || !(params.eta > 0.0))
    throw Error(ErrorCode::InvalidArgument, "lambda must be >= 0 and eta > 0");

  const GramCache cache(model);
  ExpressivenessResult result;
  std::vector<double> a(m, 0.0);
  std::vector<double> ga(m, 0.0);
  double current = cache.loss(a, ga);
  result.loss_trace.push_back(current);

  double change = HUGE_VAL;
  int t = 0;
  while (t < params.max_iterations && std::abs(change) > params.epsilon) {
    std::size_t best = 0;
    double best_magnitude = -1.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double magnitude = std::abs(cache.gradient(ga, k));
      if (magnitude > best_magnitude) {
        best_magnitude = magnitude;
        best = k;
      }
    }

    const double grad = cache.gradient(ga, best);
    const double lipschitz = cache.curvature() * cache.gram(best, best);
    double updated = 0.0;
    if (lipschitz > 0.0) {
      const double step = params.eta / lipschitz;
      updated = std::max(0.0, soft_threshold(a[best] - step * grad, params.lambda * step));
    }
    // A zero basis vector never helps the reconstruction; the penalty keeps it at 0.
    const double delta = updated - a[best];
    a[best] = updated;
    if (delta != 0.0) cache.add_column(ga, best, delta);

    const double next = cache.loss(a, ga);
    if (!std::isfinite(next))
      throw Error(ErrorCode::NonFiniteLoss, "loss became non-finite at iteration " + std::to_string(t));
    change = next - current;
    current = next;
    result.loss_trace.push_back(current);
    ++t;
  }
  result.scores = std::move(a);
  result.iterations_run = t;
  result.converged = std::abs(change) <= params.epsilon;
  return result;
}

SparseCodingModel build_sparse_coding_model(const Topic& topic, const SparseCodingParams& params,
                                            bool use_comments) {
  SparseCodingModel model;
  model.params = params;
  model.dimension = topic.dictionary.size();
  for (const auto* sentence : topic.news_sentences()) {
    model.news.push_back(vectorize(*sentence, topic.dictionary));
    model.rho.push_back(position_weight(sentence->paragraph_index, params.position_base, params.paragraph_cap));
  }
  if (use_comments) {
    for (const auto& comment : topic.comment_sentences) {
      TermVector z = vectorize(comment, topic.dictionary);
      if (z.is_zero()) continue;
      model.tau.push_back(comment_weight(z, model.news));
      model.comments.push_back(std::move(z));
    }
  }
  return model;
}

}  // namespace ramds
