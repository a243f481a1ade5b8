#pragma once

#include "fairdiv/instance.hpp"

namespace fairdiv::testing {

// Two agents, two goods; the instance whose set of fair allocations is
// demonstrably non-convex. Agent 0 values the goods (2, 1) at unit sizes;
// agent 1 values them (1, 1) at sizes (1, 2); both budgets are 1.
inline Instance nonconvexity_instance() {
  Instance inst;
  inst.values = Mat(2, 2);
  inst.values << 2, 1, 1, 1;
  inst.sizes = Mat(2, 2);
  inst.sizes << 1, 1, 1, 2;
  inst.budgets = Vec::Constant(2, Rational(1));
  return inst;
}

// The two fair endpoints and their unfair midpoint on that instance.
inline Allocation nonconvex_alloc_x() {
  Allocation x(2, 2);
  x << 0, 1, Rational(1, 2), 0;
  return x;
}

inline Allocation nonconvex_alloc_y() {
  Allocation y(2, 2);
  y << Rational(1, 2), 0, Rational(1, 2), 0;
  return y;
}

inline Allocation nonconvex_alloc_z() {
  Allocation z(2, 2);
  z << Rational(1, 4), Rational(1, 2), Rational(1, 2), 0;
  return z;
}

}  // namespace fairdiv::testing
