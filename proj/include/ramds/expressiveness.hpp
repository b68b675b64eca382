#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ramds/corpus.hpp"

namespace ramds {

struct SparseCodingParams {
  double lambda = 0.005;      // L1 penalty
  double eta = 1.0;           // step multiplier
  int max_iterations = 300;   // T
  double epsilon = 1e-4;      // stop when |J(t+1) - J(t)| <= epsilon
  double position_base = 0.8; // C
  int paragraph_cap = 4;      // p-bar
};

// Reconstruction problem over one topic: every news vector is a basis vector,
// and both news (weighted by rho) and comments (weighted by tau) are targets.
struct SparseCodingModel {
  std::vector<TermVector> news;      // X, m vectors
  std::vector<TermVector> comments;  // Z, n vectors (empty in news-only mode)
  std::vector<double> rho;           // m position weights
  std::vector<double> tau;           // n comment weights
  std::size_t dimension = 0;         // d
  SparseCodingParams params;
};

struct ExpressivenessResult {
  std::vector<double> scores;      // A*, one per news vector, all >= 0
  std::vector<double> loss_trace;  // J before the first step and after each step
  int iterations_run = 0;
  bool converged = false;
};

/// C^p for p < p_bar, else C^p_bar.
double position_weight(int paragraph, double base, int cap);

/// Mean cosine similarity of a comment vector with every news vector.
/// Throws Error{ZeroVector} for a zero comment vector.
double comment_weight(const TermVector& comment, std::span<const TermVector> news);

/// Global loss: weighted news and comment reconstruction errors plus lambda*|A|_1.
/// The comment term vanishes when there are no comments.
double loss(const SparseCodingModel& model, std::span<const double> scores);

/// Smooth part of the loss (reconstruction terms only).
double smooth_loss(const SparseCodingModel& model, std::span<const double> scores);

/// Partial derivative of the smooth loss with respect to scores[k].
double gradient_coordinate(const SparseCodingModel& model, std::span<const double> scores, std::size_t k);

/// Greedy coordinate descent from A = 0: each step recomputes the
/// reconstruction, picks the coordinate with the largest |dJ/da_k| (lowest
/// index on ties) and applies a soft-thresholded step clamped at zero. The step
/// along coordinate k is eta / L_k, where L_k is the curvature of the smooth
/// loss along that coordinate, so eta = 1 minimizes J exactly along k and the
/// loss never increases. Throws Error{NonFiniteLoss}.
ExpressivenessResult solve(const SparseCodingModel& model);

/// Builds X, Z, rho and tau for a topic. Zero comment vectors are dropped;
/// with `use_comments` false the model has n = 0.
SparseCodingModel build_sparse_coding_model(const Topic& topic, const SparseCodingParams& params,
                                            bool use_comments);

}  // namespace ramds
