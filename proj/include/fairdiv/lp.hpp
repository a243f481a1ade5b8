#pragma once

#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

enum class Relation { LessEq, Equal };

struct ConstraintRow {
  Vec coeffs;
  Relation rel = Relation::LessEq;
  Rational rhs;
};

/// Per-variable box; every program in this toolkit lives in a finite box.
struct VariableBounds {
  Rational lo;
  Rational hi;
};

/**
 * max objective . x  subject to the rows and bounds. All bounds are finite
 * by construction, so the feasible region is a (possibly empty) polytope
 * and unboundedness cannot occur.
 */
struct LinearProgram {
  Vec objective;
  std::vector<ConstraintRow> rows;
  std::vector<VariableBounds> bounds;
};

enum class LpStatus { Optimal, Infeasible };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Vec point;       // structural variable values when Optimal
  Rational value;  // objective . point
};

/**
 * Exact primal simplex on bounded variables.
 *
 * Two phases: phase one drives per-row artificials to zero (rows whose
 * slack already covers the residual get none), phase two optimizes the
 * real objective. Entering and leaving variables follow Bland's
 * smallest-index rule throughout, which makes the solver cycling-free and
 * fully deterministic: identical inputs give identical vertices.
 *
 * The returned point is verified against every row and bound by exact
 * substitution before it is handed back.
 *
 * @throws std::invalid_argument on malformed dimensions.
 * @throws std::logic_error if an unbounded ray is encountered (impossible
 *         for well-formed inputs; indicates a broken caller).
 */
LpSolution solve(const LinearProgram& lp);

/// Finds any exact feasible point of the system (zero objective).
LpSolution solve_feasibility(const std::vector<ConstraintRow>& rows,
                             const std::vector<VariableBounds>& bounds);

}  // namespace fairdiv
