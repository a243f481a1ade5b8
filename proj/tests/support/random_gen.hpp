#pragma once

#include <random>

#include "fairdiv/instance.hpp"
#include "fairdiv/lp.hpp"

namespace fairdiv::testing {

// Deterministic generators: every test fixes its own seed.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long seed) : eng(seed) {}

  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(eng);
  }

  // p/q with q <= max_den and value in [lo, hi] (numerator resampled from
  // the admissible range for the drawn denominator).
  Rational rational(int max_den, const Rational& lo, const Rational& hi) {
    int q = uniform(1, max_den);
    // Smallest and largest p with lo <= p/q <= hi.
    long long p_lo = static_cast<long long>(ceil_rational(lo * q));
    Rational hi_q = hi * q;
    long long p_hi = static_cast<long long>(numerator(hi_q) / denominator(hi_q));
    while (Rational(p_hi + 1) <= hi_q) ++p_hi;
    int p = uniform(static_cast<int>(p_lo), static_cast<int>(p_hi));
    return Rational(p, q);
  }
};

struct InstanceOptions {
  int max_agents = 3;
  int max_goods = 3;
  int max_den = 8;
  bool positive_values = false;  // required by the gamma machinery
};

inline Instance random_instance(Rng& rng, const InstanceOptions& opt) {
  Instance inst;
  const int n = rng.uniform(1, opt.max_agents);
  const int m = rng.uniform(1, opt.max_goods);
  inst.values = Mat(n, m);
  inst.sizes = Mat(n, m);
  inst.budgets = Vec(n);
  Rational vmin = opt.positive_values ? Rational(1, opt.max_den) : Rational(0);
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < m; ++g) {
      inst.values(i, g) = rng.rational(opt.max_den, vmin, Rational(2));
      inst.sizes(i, g) = rng.rational(opt.max_den, Rational(1, opt.max_den), Rational(2));
    }
    inst.budgets(i) = rng.rational(opt.max_den, Rational(0), Rational(2));
  }
  return inst;
}

inline Vec random_positive_weights(Rng& rng, Index n, int max_den = 8) {
  Vec w(n);
  for (Index i = 0; i < n; ++i) {
    w(i) = rng.rational(max_den, Rational(1, max_den), Rational(2));
  }
  return w;
}

inline Bundle random_bundle(Rng& rng, Index m, int max_den = 8) {
  Bundle b(m);
  for (Index g = 0; g < m; ++g) b(g) = rng.rational(max_den, Rational(0), Rational(1));
  return b;
}

// Small boxed LP for solver cross-checks: 2-4 variables, 1-4 rows, mixed
// relations, coefficients with denominators <= 4.
inline LinearProgram random_lp(Rng& rng) {
  LinearProgram lp;
  const int k = rng.uniform(2, 4);
  const int rows = rng.uniform(1, 4);
  lp.objective = Vec(k);
  for (int j = 0; j < k; ++j) {
    lp.objective(j) = rng.rational(4, Rational(-2), Rational(2));
  }
  for (int j = 0; j < k; ++j) {
    Rational lo = rng.uniform(0, 1) == 0 ? Rational(0) : Rational(-1);
    Rational width = rng.uniform(0, 1) == 0 ? Rational(1) : Rational(2);
    lp.bounds.push_back(VariableBounds{lo, lo + width});
  }
  for (int r = 0; r < rows; ++r) {
    ConstraintRow row;
    row.coeffs = Vec(k);
    for (int j = 0; j < k; ++j) row.coeffs(j) = rng.rational(4, Rational(-2), Rational(2));
    row.rel = rng.uniform(0, 4) == 0 ? Relation::Equal : Relation::LessEq;
    row.rhs = rng.rational(4, Rational(-2), Rational(3));
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

}  // namespace fairdiv::testing
