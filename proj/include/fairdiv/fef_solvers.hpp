#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/fairness.hpp"

namespace fairdiv {

/// Upper bound on marginal value per unit fraction: max_{i,g} values(i,g).
/// Adding a d-fraction of any good adds at most d times this bound.
Rational lipschitz_bound(const Instance& inst);

struct PieceSplit {
  CountVec pieces_per_good;  // uniform K = max(1, ceil(L/eps))
  Rational lipschitz;
};

/**
 * Split every good into K identical pieces so that each piece is worth at
 * most eps to every agent.
 * @throws std::invalid_argument for eps <= 0; CapExceededError when K
 *         would exceed the enumeration cap.
 */
PieceSplit split_into_pieces(const Instance& inst, const Rational& eps);

struct MinimalEnviedSet {
  CountVec pieces;  // sub-multiset of the charity
  Index agent = 0;  // envies pieces (the whole set, which is feasible for her)
};

/**
 * A minimal envied subset of the charity: some agent's feasible strict
 * gain, no strict sub-multiset of which is envied by anyone. Found by
 * taking the lowest-index envious agent's best feasible charity subset and
 * greedily shrinking while any single-piece removal stays envied. Returns
 * nothing when no agent envies the charity.
 */
std::optional<MinimalEnviedSet> find_minimal_envied_set(const Instance& inst,
                                                        const DiscreteAllocation& da);

/**
 * Envy-cycle-free swap loop over pieces: start from everything at the
 * charity and repeatedly hand a minimal envied charity subset to the agent
 * that envies it, returning her previous pieces to the charity. The result
 * satisfies is_fefx; the sum of agent values strictly increases every
 * iteration (checked).
 */
DiscreteAllocation compute_fefx(const Instance& inst, const CountVec& pieces_per_good);

/**
 * eps-fair divisible allocation: split goods into pieces worth at most eps
 * each, run compute_fefx on the pieces, and return counts/K as fractions.
 * The output satisfies is_fef_eps(eps).
 */
Allocation compute_fef_eps(const Instance& inst, const Rational& eps);

struct ConvergenceStep {
  Rational eps;
  Allocation alloc;
  Rational max_envy;          // over agent pairs and the charity
  Rational distance_to_prev;  // Chebyshev distance, 0 for the first step
};

struct ConvergenceReport {
  std::vector<ConvergenceStep> steps;
  bool truncated = false;
  std::string truncation_reason;
};

/**
 * Run compute_fef_eps along a non-increasing positive eps schedule and
 * report per-step max envy and allocation movement. Each step's max envy
 * is checked against its eps. A cap overflow at small eps truncates the
 * run and is reported, not thrown.
 */
ConvergenceReport fef_convergence_study(const Instance& inst,
                                        const std::vector<Rational>& schedule);

}  // namespace fairdiv
