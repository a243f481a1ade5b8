#pragma once

#include <optional>

#include "fairdiv/instance.hpp"
#include "fairdiv/lp.hpp"

namespace fairdiv {

struct PoVerdict {
  bool holds = false;
  std::optional<Allocation> dominator;
};

/**
 * Pareto-optimality via a single dominance LP: maximize the sum of
 * per-agent slacks delta_i >= 0 over feasible allocations y with
 * v_i(y_i) >= v_i(alloc_i) + delta_i. The allocation is Pareto-optimal iff
 * the optimum is exactly zero; otherwise the maximizing y is returned and
 * re-verified as a strict dominator before being handed back.
 *
 * @throws std::invalid_argument when alloc is infeasible.
 */
PoVerdict is_pareto_optimal(const Instance& inst, const Allocation& alloc);

/**
 * Exact maximizer of sum_i w_i * v_i(x_i) over the feasible region
 * (supply, budgets, box). Any maximizer is Pareto-optimal for strictly
 * positive w; the deterministic pivot rule canonically selects one vertex.
 * w need not be normalized.
 *
 * @throws std::invalid_argument unless every w_i > 0.
 */
Allocation max_weighted_welfare(const Instance& inst, const Vec& w);

/// The P1 feasibility polytope as LP rows over variables x(i,g) -> i*m+g.
LinearProgram allocation_polytope_lp(const Instance& inst);

}  // namespace fairdiv
