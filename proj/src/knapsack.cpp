#include "fairdiv/knapsack.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {

DensityOrder density_order(const Instance& inst, Index i) {
  DensityOrder order;
  order.goods.resize(static_cast<size_t>(inst.m()));
  std::iota(order.goods.begin(), order.goods.end(), Index{0});
  std::stable_sort(order.goods.begin(), order.goods.end(), [&](Index a, Index b) {
    // rho(a) > rho(b) <=> v_a * s_b > v_b * s_a (sizes positive)
    return inst.values(i, a) * inst.sizes(i, b) > inst.values(i, b) * inst.sizes(i, a);
  });
  return order;
}

SubsetResult max_feasible_subset(const Instance& inst, Index i, const Bundle& b) {
  return max_feasible_subset(inst, i, b, density_order(inst, i));
}

SubsetResult max_feasible_subset(const Instance& inst, Index i, const Bundle& b,
                                 const DensityOrder& order) {
  SubsetResult res;
  res.take = Bundle::Zero(inst.m());
  res.value = 0;
  Rational budget = inst.budgets(i);
  for (Index g : order.goods) {
    if (budget <= 0) break;
    if (inst.values(i, g) == 0 || b(g) <= 0) continue;
    Rational whole = inst.sizes(i, g) * b(g);
    Rational frac = whole <= budget ? b(g) : budget / inst.sizes(i, g);
    res.take(g) = frac;
    res.value += frac * inst.values(i, g);
    budget -= frac * inst.sizes(i, g);
  }
  return res;
}

Rational piece_value(const Instance& inst, Index i, Index g, const PieceMultiset& pm) {
  return inst.values(i, g) / pm.pieces_per_good(g);
}

Rational piece_size(const Instance& inst, Index i, Index g, const PieceMultiset& pm) {
  return inst.sizes(i, g) / pm.pieces_per_good(g);
}

Rational counts_value(const Instance& inst, Index i, const CountVec& counts,
                      const CountVec& pieces_per_good) {
  Rational v = 0;
  for (Index g = 0; g < inst.m(); ++g) {
    if (counts(g) != 0) v += inst.values(i, g) * counts(g) / pieces_per_good(g);
  }
  return v;
}

Rational counts_size(const Instance& inst, Index i, const CountVec& counts,
                     const CountVec& pieces_per_good) {
  Rational s = 0;
  for (Index g = 0; g < inst.m(); ++g) {
    if (counts(g) != 0) s += inst.sizes(i, g) * counts(g) / pieces_per_good(g);
  }
  return s;
}

void validate_discrete_allocation(const Instance& inst, const DiscreteAllocation& da) {
  const Index n = inst.n();
  const Index m = inst.m();
  if (da.counts.rows() != n || da.counts.cols() != m || da.charity.size() != m ||
      da.pieces_per_good.size() != m) {
    throw std::invalid_argument("discrete allocation: dimension mismatch with instance");
  }
  for (Index g = 0; g < m; ++g) {
    if (da.pieces_per_good(g) < 1) {
      throw std::invalid_argument("pieces_per_good[" + std::to_string(g) + "]: must be >= 1");
    }
    int total = da.charity(g);
    if (da.charity(g) < 0) {
      throw std::invalid_argument("charity[" + std::to_string(g) + "]: negative count");
    }
    for (Index i = 0; i < n; ++i) {
      if (da.counts(i, g) < 0) {
        throw std::invalid_argument("counts[" + std::to_string(i) + "][" + std::to_string(g) +
                                    "]: negative count");
      }
      total += da.counts(i, g);
    }
    if (total != da.pieces_per_good(g)) {
      throw std::invalid_argument("good " + std::to_string(g) +
                                  ": piece counts do not sum to pieces_per_good");
    }
  }
  for (Index i = 0; i < n; ++i) {
    CountVec row = da.counts.row(i).transpose();
    if (counts_size(inst, i, row, da.pieces_per_good) > inst.budgets(i)) {
      throw std::invalid_argument("counts[" + std::to_string(i) + "]: bundle exceeds budget");
    }
  }
}

Allocation to_fractional(const Instance& inst, const DiscreteAllocation& da) {
  Allocation x(inst.n(), inst.m());
  for (Index i = 0; i < inst.n(); ++i) {
    for (Index g = 0; g < inst.m(); ++g) {
      x(i, g) = Rational(da.counts(i, g), da.pieces_per_good(g));
    }
  }
  return x;
}

namespace {

void check_cap(const CountVec& counts) {
  long long space = 1;
  for (Index g = 0; g < counts.size(); ++g) {
    space *= counts(g) + 1;
    if (space > kEnumerationCap) {
      throw CapExceededError(
          "piece search space exceeds cap " + std::to_string(kEnumerationCap) +
          "; rerun with a larger eps (fewer pieces)");
    }
  }
}

struct DiscreteSearch {
  const Instance& inst;
  Index agent;
  const PieceMultiset& pm;
  std::vector<Rational> pv, ps;  // per-good piece value/size for the agent
  CountVec current;
  DiscreteSubsetResult best;

  // Depth-first over per-good counts, ascending, keeping the first (and
  // hence lexicographically smallest) strictly better solution.
  void descend(Index g, Rational budget, Rational value) {
    if (g == inst.m()) {
      if (value > best.value) {
        best.value = value;
        best.take = current;
      }
      return;
    }
    for (int t = 0; t <= pm.counts(g); ++t) {
      Rational spend = ps[static_cast<size_t>(g)] * t;
      if (spend > budget) break;
      current(g) = t;
      descend(g + 1, budget - spend, value + pv[static_cast<size_t>(g)] * t);
    }
    current(g) = 0;
  }
};

}  // namespace

DiscreteSubsetResult max_feasible_discrete_subset(const Instance& inst, Index i,
                                                  const PieceMultiset& pieces) {
  check_cap(pieces.counts);
  DiscreteSearch search{inst, i, pieces, {}, {}, CountVec::Zero(inst.m()), {}};
  search.best.take = CountVec::Zero(inst.m());
  search.best.value = 0;
  search.pv.reserve(static_cast<size_t>(inst.m()));
  search.ps.reserve(static_cast<size_t>(inst.m()));
  for (Index g = 0; g < inst.m(); ++g) {
    search.pv.push_back(piece_value(inst, i, g, pieces));
    search.ps.push_back(piece_size(inst, i, g, pieces));
  }
  search.descend(0, inst.budgets(i), Rational(0));
  return search.best;
}

}  // namespace fairdiv
