#pragma once

#include <vector>

#include "nbts/linalg.hpp"

namespace nbts {

enum class Sense { Maximize, Minimize };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpConstraint {
  Vec coeffs;
  Relation rel = Relation::GreaterEq;
  Rational rhs;
};

/// A linear program over `num_vars` variables. Variables flagged in
/// `nonneg` are restricted to be >= 0; all others are free.
struct LpProblem {
  int num_vars = 0;
  std::vector<LpConstraint> rows;
  std::vector<bool> nonneg;  // empty means all free
  Vec objective;
  Sense sense = Sense::Maximize;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  Vec point;  // defined when status == Optimal; satisfies every row exactly
};

/// Two-phase primal simplex over exact rationals, Bland's anti-cycling rule
/// throughout. Terminates on every input.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace nbts
