#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fairdiv/instance.hpp"

namespace fairdiv {

using CountVec = Eigen::VectorXi;

/// Thrown when a discrete search space exceeds the hard enumeration cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kEnumerationCap = 10'000'000;

/**
 * Goods of agent i ordered by density rho_i(g) = values(i,g)/sizes(i,g),
 * non-increasing, ties broken by lower good index.
 */
struct DensityOrder {
  std::vector<Index> goods;
};

DensityOrder density_order(const Instance& inst, Index i);

struct SubsetResult {
  Bundle take;     // y <= b, feasible for the agent
  Rational value;  // exactly v_i(take)
};

/**
 * Maximum-value feasible sub-bundle of b for agent i:
 * max v_i(y) s.t. 0 <= y <= b and size_i(y) <= B_i. Greedy in density
 * order, which is optimal for this fractional knapsack; zero-value goods
 * are never taken.
 */
SubsetResult max_feasible_subset(const Instance& inst, Index i, const Bundle& b);

/// Same, with a precomputed density order for hot loops.
SubsetResult max_feasible_subset(const Instance& inst, Index i, const Bundle& b,
                                 const DensityOrder& order);

/**
 * A multiset of identical pieces per good: good g was split into
 * pieces_per_good(g) pieces, of which counts(g) are present. A piece of
 * good g has value values(i,g)/pieces_per_good(g) and size
 * sizes(i,g)/pieces_per_good(g) for agent i.
 */
struct PieceMultiset {
  CountVec counts;
  CountVec pieces_per_good;
};

Rational piece_value(const Instance& inst, Index i, Index g, const PieceMultiset& pm);
Rational piece_size(const Instance& inst, Index i, Index g, const PieceMultiset& pm);

/// Value of a whole count vector for agent i at the multiset's granularity.
Rational counts_value(const Instance& inst, Index i, const CountVec& counts,
                      const CountVec& pieces_per_good);
Rational counts_size(const Instance& inst, Index i, const CountVec& counts,
                     const CountVec& pieces_per_good);

/**
 * Piece-level allocation: counts(i,g) pieces of good g held by agent i,
 * charity(g) pieces unassigned. For every good,
 * sum_i counts(i,g) + charity(g) == pieces_per_good(g).
 */
struct DiscreteAllocation {
  Eigen::MatrixXi counts;    // n x m
  CountVec charity;          // m
  CountVec pieces_per_good;  // m
};

/// Checks the count identities, non-negativity, and per-agent feasibility.
/// @throws std::invalid_argument on violation.
void validate_discrete_allocation(const Instance& inst, const DiscreteAllocation& da);

/// counts/K as a fractional Allocation.
Allocation to_fractional(const Instance& inst, const DiscreteAllocation& da);

struct DiscreteSubsetResult {
  CountVec take;
  Rational value;
};

/**
 * Optimal integral sub-multiset: maximize the value of t <= counts subject
 * to the agent's budget. Exhaustive over per-good counts (pieces of one
 * good are interchangeable), deterministic: the lexicographically smallest
 * maximizer is returned.
 *
 * @throws CapExceededError when prod(counts(g)+1) exceeds the cap; the
 *         message suggests a larger eps (fewer pieces).
 */
DiscreteSubsetResult max_feasible_discrete_subset(const Instance& inst, Index i,
                                                  const PieceMultiset& pieces);

}  // namespace fairdiv
