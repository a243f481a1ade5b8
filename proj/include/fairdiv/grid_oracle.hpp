#pragma once

#include <string>
#include <vector>

#include "fairdiv/fairness.hpp"

namespace fairdiv {

/**
 * Brute-force ground truth over the grid of allocations whose fractions
 * are multiples of 1/k. Enumeration covers exactly the feasible grid
 * points (per-good totals at most 1, per-agent budgets respected) in
 * row-major lexicographic order of the count tuples, so results are
 * deterministic. The shared cap (k+1)^(n*m) <= 10^7 applies.
 */
std::vector<Allocation> enumerate_feasible_grid(const Instance& inst, int k);

/// Grid points passing is_fef, in enumeration order; each is re-verified.
std::vector<Allocation> enumerate_fef_set(const Instance& inst, int k);

struct NonconvexityTriple {
  Allocation x;
  Allocation y;
  Allocation midpoint;
  FairnessVerdict midpoint_verdict;  // holds == false
};

/**
 * Scan unordered pairs of FEF grid points whose exact midpoint fails FEF.
 * Midpoints may leave the grid; their verdicts come from the exact
 * checker, never from grid membership.
 */
std::vector<NonconvexityTriple> nonconvexity_scan(const Instance& inst, int k);

/// Grid points passing is_pareto_optimal. A point with a usable charity
/// slice (positive value, positive budget slack) is rejected via that
/// explicit dominator without invoking the dominance LP; the output is
/// identical to the pure LP filter.
std::vector<Allocation> pareto_frontier(const Instance& inst, int k);

/// Value-space scatter (v_1(x_1), ..., v_n(x_n)) per allocation, one CSV
/// row each, decimal rendering for plotting.
std::string value_scatter_csv(const Instance& inst, const std::vector<Allocation>& points);

}  // namespace fairdiv
