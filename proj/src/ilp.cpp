#include "ramds/ilp.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <queue>
#include <sstream>

#include "ramds/error.hpp"

namespace ramds {

std::size_t BinaryProgram::add_var(std::string name, double objective, int lower, int upper) {
  vars.push_back({std::move(name), objective, lower, upper});
  return vars.size() - 1;
}

void BinaryProgram::add_constraint(std::string name, std::string family,
                                   std::vector<std::pair<std::size_t, double>> terms, Sense sense, double rhs) {
  constraints.push_back({std::move(name), std::move(family), LinearRow{std::move(terms), sense, rhs}});
}

std::string_view to_string(IlpStatus status) {
  switch (status) {
    case IlpStatus::Optimal: return "Optimal";
    case IlpStatus::FeasibleWithGap: return "FeasibleWithGap";
    case IlpStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

double evaluate_objective(const BinaryProgram& program, const std::vector<int>& assignment) {
  double total = 0.0;
  for (std::size_t j = 0; j < program.vars.size(); ++j) total += program.vars[j].objective * assignment.at(j);
  return total;
}

std::vector<std::string> check_assignment(const BinaryProgram& program, const std::vector<int>& assignment,
                                          double tolerance) {
  std::vector<std::string> violated;
  if (assignment.size() != program.vars.size()) {
    violated.push_back("<assignment size>");
    return violated;
  }
  for (std::size_t j = 0; j < program.vars.size(); ++j) {
    const auto& v = program.vars[j];
    if (assignment[j] < v.lower || assignment[j] > v.upper) violated.push_back("bound:" + v.name);
  }
  for (const auto& c : program.constraints) {
    double lhs = 0.0;
    for (const auto& [var, coef] : c.row.terms) lhs += coef * assignment[var];
    bool ok = true;
    switch (c.row.sense) {
      case Sense::LessEqual: ok = lhs <= c.row.rhs + tolerance; break;
      case Sense::GreaterEqual: ok = lhs >= c.row.rhs - tolerance; break;
      case Sense::Equal: ok = std::fabs(lhs - c.row.rhs) <= tolerance; break;
    }
    if (!ok) violated.push_back(c.name);
  }
  return violated;
}

namespace {

struct Node {
  std::vector<std::int8_t> fixed;  // -1 free, else the fixed value
  double bound;
  int depth;
  std::uint64_t seq;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    // priority_queue pops the "largest": higher bound, then deeper, then older.
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

struct NodeLp {
  LinearProgram lp;
  std::vector<std::size_t> columns;  // LP column -> program variable
  double constant = 0.0;
  bool infeasible = false;
};

// Substitutes fixed variables and drops rows that no longer mention a free one.
NodeLp restrict_program(const BinaryProgram& program, const std::vector<std::int8_t>& fixed, double tol) {
  NodeLp out;
  std::vector<std::size_t> column_of(program.vars.size(), static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < program.vars.size(); ++j) {
    if (fixed[j] >= 0) {
      out.constant += program.vars[j].objective * fixed[j];
      continue;
    }
    column_of[j] = out.columns.size();
    out.columns.push_back(j);
    out.lp.objective.push_back(program.vars[j].objective);
    out.lp.lower.push_back(0.0);
    out.lp.upper.push_back(1.0);
  }
  for (const auto& c : program.constraints) {
    LinearRow row;
    row.sense = c.row.sense;
    row.rhs = c.row.rhs;
    for (const auto& [var, coef] : c.row.terms) {
      if (fixed[var] >= 0) {
        row.rhs -= coef * fixed[var];
      } else if (coef != 0.0) {
        row.terms.emplace_back(column_of[var], coef);
      }
    }
    if (row.terms.empty()) {
      const bool ok = (row.sense == Sense::LessEqual && row.rhs >= -tol) ||
                      (row.sense == Sense::GreaterEqual && row.rhs <= tol) ||
                      (row.sense == Sense::Equal && std::fabs(row.rhs) <= tol);
      if (!ok) out.infeasible = true;
      continue;
    }
    out.lp.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace

IlpSolution solve_ilp(const BinaryProgram& program, const IlpOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = program.vars.size();
  const double neg_inf = -std::numeric_limits<double>::infinity();

  IlpSolution best;
  best.assignment.assign(n, 0);
  double incumbent = neg_inf;
  {
    std::vector<int> zero(n, 0);
    if (check_assignment(program, zero, options.tolerance).empty()) {
      incumbent = evaluate_objective(program, zero);
      best.assignment = zero;
    }
  }

  Node root;
  root.fixed.assign(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = program.vars[j];
    if (v.lower > v.upper || v.upper < 0 || v.lower > 1)
      throw Error(ErrorCode::InvalidArgument, "variable " + v.name + " has an empty binary domain");
    if (v.lower == v.upper) root.fixed[j] = static_cast<std::int8_t>(v.lower);
  }
  root.bound = std::numeric_limits<double>::infinity();
  root.depth = 0;
  root.seq = 0;

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  open.push(std::move(root));
  std::uint64_t seq = 1;
  bool timed_out = false;
  double open_bound = neg_inf;

  while (!open.empty()) {
    if (open.top().bound <= incumbent + options.tolerance) break;  // nothing left can improve
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > options.time_limit_seconds) {
      timed_out = true;
      open_bound = open.top().bound;
      break;
    }
    Node node = open.top();
    open.pop();
    ++best.nodes_explored;

    auto restricted = restrict_program(program, node.fixed, options.tolerance);
    if (restricted.infeasible) continue;
    double value = restricted.constant;
    std::vector<double> x(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      if (node.fixed[j] >= 0) x[j] = node.fixed[j];
    bool lp_ok = true;
    if (!restricted.columns.empty()) {
      const auto lp = solve_lp(restricted.lp, options.simplex);
      if (lp.status == LpStatus::Infeasible) continue;
      if (lp.status == LpStatus::Optimal) {
        value += lp.objective;
        for (std::size_t c = 0; c < restricted.columns.size(); ++c) x[restricted.columns[c]] = lp.x[c];
      } else {
        lp_ok = false;  // keep the parent's bound and branch blindly
        value = node.bound;
        for (std::size_t c = 0; c < restricted.columns.size(); ++c) x[restricted.columns[c]] = 0.5;
      }
    }
    if (value <= incumbent + options.tolerance) continue;

    std::size_t branch = n;
    double best_dist = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (node.fixed[j] >= 0) continue;
      const double frac = x[j] - std::floor(x[j]);
      if (frac <= options.integrality || frac >= 1.0 - options.integrality) continue;
      const double dist = std::fabs(frac - 0.5);
      if (dist < best_dist) {
        best_dist = dist;
        branch = j;
      }
    }

    if (branch == n && lp_ok) {
      std::vector<int> assignment(n);
      for (std::size_t j = 0; j < n; ++j) assignment[j] = static_cast<int>(std::lround(x[j]));
      if (check_assignment(program, assignment, options.tolerance).empty()) {
        const double obj = evaluate_objective(program, assignment);
        if (obj > incumbent + options.tolerance) {
          incumbent = obj;
          best.assignment = std::move(assignment);
        }
        continue;
      }
      // Rounding broke a row (numerical trouble); branch on the first free variable.
      for (std::size_t j = 0; j < n && branch == n; ++j)
        if (node.fixed[j] < 0) branch = j;
      if (branch == n) continue;
    }
    if (branch == n) continue;

    for (const std::int8_t v : {std::int8_t{1}, std::int8_t{0}}) {
      Node child;
      child.fixed = node.fixed;
      child.fixed[branch] = v;
      child.bound = value;
      child.depth = node.depth + 1;
      child.seq = seq++;
      open.push(std::move(child));
    }
  }

  if (incumbent == neg_inf) {
    best.status = timed_out ? IlpStatus::FeasibleWithGap : IlpStatus::Infeasible;
    best.objective = 0.0;
    best.gap = timed_out ? open_bound : 0.0;
    return best;
  }
  best.objective = incumbent;
  if (timed_out) {
    best.status = IlpStatus::FeasibleWithGap;
    best.gap = std::max(0.0, open_bound - incumbent);
  } else {
    best.status = IlpStatus::Optimal;
  }
  return best;
}

namespace {

void write_terms(std::ostream& out, const std::vector<std::pair<std::size_t, double>>& terms,
                 const BinaryProgram& program) {
  if (terms.empty()) {
    out << "0";
    return;
  }
  for (const auto& [var, coef] : terms) {
    out << (coef < 0 ? " -" : " +");
    out << std::fabs(coef) << ' ' << program.vars[var].name;
  }
}

}  // namespace

void write_lp_format(const BinaryProgram& program, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "/* objective */\nmax:";
  std::vector<std::pair<std::size_t, double>> objective;
  for (std::size_t j = 0; j < program.vars.size(); ++j)
    if (program.vars[j].objective != 0.0) objective.emplace_back(j, program.vars[j].objective);
  write_terms(out, objective, program);
  out << ";\n";

  std::string family;
  for (const auto& c : program.constraints) {
    if (c.family != family) {
      family = c.family;
      out << "\n/* " << family << " */\n";
    }
    out << c.name << ':';
    write_terms(out, c.row.terms, program);
    out << ' ' << to_string(c.row.sense) << ' ' << c.row.rhs << ";\n";
  }

  bool fixed_header = false;
  for (const auto& v : program.vars) {
    if (v.lower != v.upper) continue;
    if (!fixed_header) {
      out << "\n/* fixed */\n";
      fixed_header = true;
    }
    // Labelled, so lp_solve keeps it as a row rather than a bound the bin section would reset.
    out << "fix_" << v.name << ": +1 " << v.name << " = " << v.lower << ";\n";
  }

  out << "\nbin";
  for (std::size_t j = 0; j < program.vars.size(); ++j) out << (j == 0 ? " " : ", ") << program.vars[j].name;
  out << ";\n";
  out.precision(old_precision);
}

}  // namespace ramds
