#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ramds/simplex.hpp"

namespace ramds {

struct BinaryVariable {
  std::string name;
  double objective = 0.0;
  int lower = 0;  // a variable with lower == upper is fixed
  int upper = 1;
};

struct Constraint {
  std::string name;
  std::string family;  // grouping label used in dumps and diagnostics
  LinearRow row;
};

// maximize sum objective_j x_j over x in {0,1}^n subject to the constraints.
struct BinaryProgram {
  std::vector<BinaryVariable> vars;
  std::vector<Constraint> constraints;

  std::size_t add_var(std::string name, double objective, int lower = 0, int upper = 1);
  void add_constraint(std::string name, std::string family, std::vector<std::pair<std::size_t, double>> terms,
                      Sense sense, double rhs);
};

enum class IlpStatus { Optimal, FeasibleWithGap, Infeasible };

std::string_view to_string(IlpStatus status);

struct IlpSolution {
  std::vector<int> assignment;
  double objective = 0.0;
  IlpStatus status = IlpStatus::Infeasible;
  double gap = 0.0;  // best remaining bound minus incumbent, 0 when Optimal
  int nodes_explored = 0;
};

struct IlpOptions {
  double time_limit_seconds = 60.0;
  double tolerance = 1e-9;          // pruning and objective comparisons
  double integrality = 1e-6;        // |x - round(x)| accepted as integral
  SimplexOptions simplex;
};

/// Best-bound branch-and-bound over LP relaxations. Among open nodes of equal
/// bound the deepest is explored first, then the oldest. Branches on the most
/// fractional variable (lowest index on ties), the x = 1 child first. The
/// all-zero assignment seeds the incumbent when it is feasible.
IlpSolution solve_ilp(const BinaryProgram& program, const IlpOptions& options = {});

double evaluate_objective(const BinaryProgram& program, const std::vector<int>& assignment);

/// Names of constraints (and variable bounds) violated by the assignment.
std::vector<std::string> check_assignment(const BinaryProgram& program, const std::vector<int>& assignment,
                                          double tolerance = 1e-9);

/// lp_solve LP-format text of the program.
void write_lp_format(const BinaryProgram& program, std::ostream& out);

}  // namespace ramds
