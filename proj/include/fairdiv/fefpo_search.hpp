#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fairdiv/efficiency.hpp"
#include "fairdiv/fairness.hpp"

namespace fairdiv {

/**
 * The instance constant gamma that makes "much smaller weight" imply "no
 * envy" in weighted-welfare maxima, together with the derived weight floor
 * eps_floor = gamma^n / n and the value ceiling M = max_i sum_g v_i(g).
 *
 * gamma is half the minimum of three upper bounds:
 *   cond1 = 1/2;
 *   cond2 = min over ordered agent pairs i != h and goods g of
 *           v_i(g) / v_h(g);
 *   cond3 = 1/2 * min over i != h and good pairs with rho_i(g') > rho_i(g)
 *           of (v_i(g') - v_i(g) * s_i(g')/s_i(g)) / v_h(g').
 * Vacuous minima are absent (treated as +infinity). Halving the binding
 * bound keeps the strict inequalities strict exactly.
 */
struct GammaParams {
  Rational gamma;
  Rational eps_floor;
  Rational M;
  Rational cond1;
  std::optional<Rational> cond2;  // absent when the pair set is empty
  std::optional<Rational> cond3;
};

/**
 * @param all_pairs include i == h in the cond2/cond3 minima (a more
 *        conservative gamma; the default ordered-pairs form is what the
 *        no-envy lemma for distinct agents needs).
 * @throws std::invalid_argument when n >= 2, m >= 1 and some value is
 *         zero: cond2 would degenerate to zero or an undefined ratio.
 *         Perturb zero values to use the search.
 */
GammaParams compute_gamma(const Instance& inst, bool all_pairs = false);

/// The feasible-subset value matrix for the search; identical contract to
/// fairness::envy_matrix (column n is the charity).
inline Mat envy_matrix_p2(const Instance& inst, const Allocation& alloc) {
  return envy_matrix(inst, alloc);
}

/**
 * A weight vector for an acyclic envy graph: for every edge i -> h,
 * w_h <= gamma * w_i; sum w = 1; every w_i >= eps_floor. Built from
 * longest-path levels d(v): raw weight gamma^d(v), normalized. The result
 * is re-verified by exact substitution.
 *
 * @param lp_mode solve the constraint system with the exact LP engine
 *        instead (cross-check path; same contract).
 * @throws std::logic_error when the graph has a cycle — weighted-welfare
 *         maxima always have acyclic envy graphs, so a cyclic input means
 *         the caller broke that contract.
 */
Vec adjust_weights_p3(const EnvyGraph& g, const Rational& gamma, const Rational& eps_floor,
                      bool lp_mode = false);

struct SearchIteration {
  Vec weights;
  Allocation alloc;
  Mat envy;  // n x (n+1) feasible-subset values
  std::vector<std::pair<Index, Index>> envy_edges;
  Rational max_envy;
};

enum class SearchStatus { Certified, IterationCap };

struct SearchTrace {
  std::vector<SearchIteration> iterations;
  SearchStatus status = SearchStatus::IterationCap;
  Index best_iteration = 0;  // least max_envy, earliest among ties
};

struct SearchResult {
  Allocation alloc;
  SearchTrace trace;
};

/**
 * Iterative search for an allocation that is both feasible-envy-free and
 * Pareto-optimal: start from uniform weights, take the weighted-welfare
 * maximizer, and while any agent envies another, shrink the envied agents'
 * weights via adjust_weights_p3. Certification is always post-hoc — a
 * Certified result has passed is_fef and is_pareto_optimal — and
 * non-convergence within max_iters returns the best-seen allocation with
 * the full trace rather than failing.
 */
SearchResult find_fef_po(const Instance& inst, int max_iters = 200);

}  // namespace fairdiv
