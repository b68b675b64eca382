#pragma once

#include <cstddef>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

namespace ramds {

enum class Sense { LessEqual, GreaterEqual, Equal };

std::string_view to_string(Sense sense);

struct LinearRow {
  std::vector<std::pair<std::size_t, double>> terms;  // (variable, coefficient)
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;
};

// maximize c.x subject to rows and lower <= x <= upper (upper may be +inf).
struct LinearProgram {
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LinearRow> rows;

  std::size_t num_vars() const { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective = 0.0;
  int pivots = 0;
};

struct SimplexOptions {
  double tolerance = 1e-9;
  int max_pivots = 200000;
  // Consecutive degenerate pivots tolerated under largest-coefficient pricing
  // before switching to Bland's rule.
  int degenerate_switch = 50;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Two-phase bounded-variable simplex on a dense tableau. Lower bounds must be
/// finite. Throws Error{InvalidArgument} on malformed input.
LpResult solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace ramds
