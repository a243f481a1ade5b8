#pragma once

#include "fairdiv/rational.hpp"

namespace fairdiv {

/// A fractional bundle: entry g is the fraction of good g held, in [0,1].
using Bundle = Vec;

/// A fractional allocation: row i is agent i's bundle. Column sums must not
/// exceed 1; the remainder of each good is implicitly held by the charity.
using Allocation = Mat;

/**
 * A fair-division instance under generalized assignment constraints:
 * values(i,g) >= 0 is agent i's value for all of good g, sizes(i,g) > 0 is
 * the agent-specific size of good g, and agent i may only hold bundles of
 * total size at most budgets(i).
 */
struct Instance {
  Mat values;   // n x m
  Mat sizes;    // n x m
  Vec budgets;  // n

  Index n() const { return values.rows(); }
  Index m() const { return values.cols(); }
};

/// Checks the Instance invariants (dimensions, v >= 0, s > 0, B >= 0).
/// @throws std::invalid_argument naming the offending field.
void validate_instance(const Instance& inst);

/// v_i(b) = sum_g b_g * values(i,g).
Rational bundle_value(const Instance& inst, Index i, const Bundle& b);

/// sum_g sizes(i,g) * b_g.
Rational bundle_size(const Instance& inst, Index i, const Bundle& b);

/// True iff bundle_size(inst, i, b) <= budgets(i).
bool is_feasible(const Instance& inst, Index i, const Bundle& b);

/**
 * The unassigned fraction of every good: componentwise 1 - sum_i x(i,g).
 * @throws std::invalid_argument if some good is over-allocated.
 */
Bundle charity_bundle(const Allocation& alloc);

/// Checks allocation shape against the instance, entries in [0,1], column
/// sums <= 1, and every bundle within its agent's budget.
/// @throws std::invalid_argument on violation.
void validate_allocation(const Instance& inst, const Allocation& alloc);

/// All-zero n x m allocation (everything at the charity).
Allocation empty_allocation(const Instance& inst);

}  // namespace fairdiv
