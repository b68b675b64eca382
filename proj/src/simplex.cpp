#include "ramds/simplex.hpp"

#include <cmath>
#include <string>

#include "ramds/error.hpp"

namespace ramds {

std::string_view to_string(Sense sense) {
  switch (sense) {
    case Sense::LessEqual: return "<=";
    case Sense::GreaterEqual: return ">=";
    case Sense::Equal: return "=";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Dense tableau of B^-1 [A | slacks | artificials] for a minimization problem
// in shifted variables (every lower bound is 0).
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), t_(rows * cols, 0.0), beta_(rows, 0.0), basis_(rows, kNone),
        upper_(cols, kInfinity), at_upper_(cols, false), basic_(cols, false), d_(cols, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return t_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * n_ + j]; }

  void set_basic(std::size_t row, std::size_t col, double value) {
    basis_[row] = col;
    basic_[col] = true;
    beta_[row] = value;
  }

  void set_cost(const std::vector<double>& cost) {
    d_ = cost;
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      const double* row = &t_[i * n_];
      for (std::size_t j = 0; j < n_; ++j) d_[j] -= cb * row[j];
    }
  }

  // Runs primal simplex iterations on the current cost row.
  LpStatus optimize(const SimplexOptions& opt, int& pivots) {
    const double tol = opt.tolerance;
    int degenerate = 0;
    bool bland = false;
    while (true) {
      std::size_t enter = kNone;
      double best = 0.0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (basic_[j] || upper_[j] <= tol) continue;
        const double score = at_upper_[j] ? d_[j] : -d_[j];
        if (score <= tol) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (score > best) {
          best = score;
          enter = j;
        }
      }
      if (enter == kNone) return LpStatus::Optimal;
      if (pivots >= opt.max_pivots) return LpStatus::IterationLimit;

      const double dir = at_upper_[enter] ? -1.0 : 1.0;
      double step = upper_[enter];
      std::size_t leave_row = kNone;
      bool leave_at_upper = false;
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = at(i, enter);
        if (std::fabs(a) <= tol) continue;
        const double rate = -dir * a;
        double limit;
        bool hits_upper;
        if (rate < 0.0) {
          limit = beta_[i] / -rate;
          hits_upper = false;
        } else {
          const double ub = upper_[basis_[i]];
          if (std::isinf(ub)) continue;
          limit = (ub - beta_[i]) / rate;
          hits_upper = true;
        }
        if (limit < 0.0) limit = 0.0;
        const bool better = limit < step - tol ||
                            (leave_row != kNone && limit <= step + tol && basis_[i] < basis_[leave_row]);
        if (better) {
          step = limit;
          leave_row = i;
          leave_at_upper = hits_upper;
        }
      }
      if (std::isinf(step)) return LpStatus::Unbounded;

      for (std::size_t i = 0; i < m_; ++i) beta_[i] -= dir * step * at(i, enter);
      ++pivots;
      if (step <= tol) {
        if (++degenerate > opt.degenerate_switch) bland = true;
      } else {
        degenerate = 0;
        bland = false;
      }

      if (leave_row == kNone) {
        at_upper_[enter] = !at_upper_[enter];
        continue;
      }
      const double entered_value = at_upper_[enter] ? upper_[enter] - step : step;
      const std::size_t leaving = basis_[leave_row];
      pivot(leave_row, enter);
      basic_[leaving] = false;
      at_upper_[leaving] = leave_at_upper;
      at_upper_[enter] = false;
      set_basic(leave_row, enter, entered_value);
    }
  }

  double value(std::size_t col) const {
    if (!basic_[col]) return at_upper_[col] ? upper_[col] : 0.0;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] == col) return beta_[i];
    return 0.0;
  }

  std::vector<double>& upper() { return upper_; }
  std::vector<double>& beta() { return beta_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

 private:
  void pivot(std::size_t r, std::size_t c) {
    double* prow = &t_[r * n_];
    const double inv = 1.0 / prow[c];
    for (std::size_t j = 0; j < n_; ++j) prow[j] *= inv;
    prow[c] = 1.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &t_[i * n_];
      const double f = row[c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n_; ++j) row[j] -= f * prow[j];
      row[c] = 0.0;
    }
    const double f = d_[c];
    if (f != 0.0) {
      for (std::size_t j = 0; j < n_; ++j) d_[j] -= f * prow[j];
      d_[c] = 0.0;
    }
  }

  std::size_t m_, n_;
  std::vector<double> t_;
  std::vector<double> beta_;
  std::vector<std::size_t> basis_;
  std::vector<double> upper_;
  std::vector<bool> at_upper_;
  std::vector<bool> basic_;
  std::vector<double> d_;
};

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  if (lp.lower.size() != n || lp.upper.size() != n)
    throw Error(ErrorCode::InvalidArgument, "bound vectors do not match the objective length");
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(lp.objective[j])) throw Error(ErrorCode::InvalidArgument, "non-finite objective coefficient");
    if (!std::isfinite(lp.lower[j]) || std::isnan(lp.upper[j]) || lp.upper[j] < lp.lower[j])
      throw Error(ErrorCode::InvalidArgument, "bad bounds on variable " + std::to_string(j));
  }
  for (const auto& row : lp.rows) {
    if (!std::isfinite(row.rhs)) throw Error(ErrorCode::InvalidArgument, "non-finite right-hand side");
    for (const auto& [var, coef] : row.terms)
      if (var >= n || !std::isfinite(coef)) throw Error(ErrorCode::InvalidArgument, "bad row term");
  }
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  validate(lp);
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.rows.size();

  // Normalize every row to sum(a x) {<=,=} b' with shifted variables.
  struct NormRow {
    std::vector<double> coef;
    double rhs;
    bool equality;
    double slack_sign;  // 0 for equalities
    bool needs_artificial;
  };
  std::vector<NormRow> norm(m);
  std::size_t slacks = 0, artificials = 0;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = lp.rows[r];
    auto& out = norm[r];
    out.coef.assign(n, 0.0);
    double rhs = row.rhs;
    for (const auto& [var, coef] : row.terms) {
      out.coef[var] += coef;
      rhs -= coef * lp.lower[var];
    }
    double sign = row.sense == Sense::GreaterEqual ? -1.0 : 1.0;
    rhs *= sign;
    out.equality = row.sense == Sense::Equal;
    out.slack_sign = out.equality ? 0.0 : 1.0;
    if (rhs < 0.0) {
      sign = -sign;
      rhs = -rhs;
      out.slack_sign = -out.slack_sign;
    }
    if (sign < 0.0)
      for (auto& c : out.coef) c = -c;
    out.rhs = rhs;
    out.needs_artificial = out.equality || out.slack_sign < 0.0;
    if (!out.equality) ++slacks;
    if (out.needs_artificial) ++artificials;
  }

  const std::size_t cols = n + slacks + artificials;
  Tableau tab(m, cols);
  for (std::size_t j = 0; j < n; ++j) tab.upper()[j] = lp.upper[j] - lp.lower[j];
  std::size_t next_slack = n, next_art = n + slacks;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = norm[r];
    for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = row.coef[j];
    std::size_t basic_col = kNone;
    if (!row.equality) {
      tab.at(r, next_slack) = row.slack_sign;
      if (!row.needs_artificial) basic_col = next_slack;
      ++next_slack;
    }
    if (row.needs_artificial) {
      tab.at(r, next_art) = 1.0;
      basic_col = next_art++;
    }
    tab.set_basic(r, basic_col, row.rhs);
  }

  LpResult result;
  if (artificials > 0) {
    std::vector<double> cost(cols, 0.0);
    for (std::size_t j = n + slacks; j < cols; ++j) cost[j] = 1.0;
    tab.set_cost(cost);
    const auto status = tab.optimize(options, result.pivots);
    if (status == LpStatus::IterationLimit) {
      result.status = status;
      return result;
    }
    double infeasibility = 0.0, scale = 1.0;
    for (std::size_t j = n + slacks; j < cols; ++j) infeasibility += tab.value(j);
    for (const auto& row : norm) scale = std::max(scale, row.rhs);
    if (infeasibility > 1e-7 * scale) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Artificials stay in the tableau pinned at zero.
    for (std::size_t j = n + slacks; j < cols; ++j) tab.upper()[j] = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      if (tab.basis()[i] >= n + slacks) tab.beta()[i] = 0.0;
  }

  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = -lp.objective[j];
  tab.set_cost(cost);
  result.status = tab.optimize(options, result.pivots);
  if (result.status != LpStatus::Optimal) return result;

  result.x.resize(n);
  result.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double v = lp.lower[j] + tab.value(j);
    if (v < lp.lower[j]) v = lp.lower[j];
    if (v > lp.upper[j]) v = lp.upper[j];
    result.x[j] = v;
    result.objective += lp.objective[j] * v;
  }
  return result;
}

}  // namespace ramds
