#include "fairdiv/fairness.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairdiv {

namespace {

Bundle target_bundle(const Instance& inst, const Allocation& alloc, Index target) {
  if (target == charity_target(inst)) return charity_bundle(alloc);
  if (target < 0 || target > inst.n()) {
    throw std::invalid_argument("target index out of range");
  }
  return alloc.row(target).transpose();
}

// Shared scan behind is_fef / is_fef_eps. Agent-pair envy is compared
// against pair_eps, charity envy against charity_eps.
FairnessVerdict fef_scan(const Instance& inst, const Allocation& alloc,
                         const Rational& pair_eps, const Rational& charity_eps) {
  validate_allocation(inst, alloc);
  const Index n = inst.n();
  std::vector<DensityOrder> orders;
  orders.reserve(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) orders.push_back(density_order(inst, i));

  Bundle charity = charity_bundle(alloc);
  for (Index i = 0; i < n; ++i) {
    Rational own = bundle_value(inst, i, alloc.row(i).transpose());
    for (Index target = 0; target <= n; ++target) {
      if (target == i) continue;  // own best sub-bundle never exceeds own value
      const bool is_charity = target == n;
      Bundle tb = is_charity ? charity : Bundle(alloc.row(target).transpose());
      SubsetResult best = max_feasible_subset(inst, i, tb, orders[static_cast<size_t>(i)]);
      Rational envy = best.value - own;
      const Rational& threshold = is_charity ? charity_eps : pair_eps;
      if (envy > threshold) {
        FairnessVerdict verdict;
        verdict.holds = false;
        verdict.witness = EnvyWitness{i, target, best.take, envy};
        return verdict;
      }
    }
  }
  return FairnessVerdict{true, std::nullopt};
}

}  // namespace

Mat envy_matrix(const Instance& inst, const Allocation& alloc) {
  const Index n = inst.n();
  Mat v(n, n + 1);
  Bundle charity = charity_bundle(alloc);
  for (Index i = 0; i < n; ++i) {
    DensityOrder order = density_order(inst, i);
    for (Index h = 0; h <= n; ++h) {
      Bundle tb = h == n ? charity : Bundle(alloc.row(h).transpose());
      v(i, h) = max_feasible_subset(inst, i, tb, order).value;
    }
  }
  return v;
}

Rational envy_value(const Instance& inst, const Allocation& alloc, Index i, Index target) {
  Bundle tb = target_bundle(inst, alloc, target);
  Rational best = max_feasible_subset(inst, i, tb).value;
  Rational own = bundle_value(inst, i, alloc.row(i).transpose());
  Rational envy = best - own;
  return envy > 0 ? envy : Rational(0);
}

FairnessVerdict is_fef(const Instance& inst, const Allocation& alloc) {
  return fef_scan(inst, alloc, Rational(0), Rational(0));
}

FairnessVerdict is_fef_eps(const Instance& inst, const Allocation& alloc, const Rational& eps,
                           bool strict_charity) {
  if (eps < 0) throw std::invalid_argument("eps must be non-negative");
  return fef_scan(inst, alloc, eps, strict_charity ? Rational(0) : eps);
}

EnvyGraph envy_graph(const Instance& inst, const Allocation& alloc) {
  const Index n = inst.n();
  EnvyGraph g;
  g.n = n;
  Mat v = envy_matrix(inst, alloc);
  for (Index i = 0; i < n; ++i) {
    Rational own = bundle_value(inst, i, alloc.row(i).transpose());
    for (Index h = 0; h < n; ++h) {
      if (h != i && v(i, h) > own) g.edges.emplace_back(i, h);
    }
  }
  return g;
}

AcyclicityResult is_acyclic(const EnvyGraph& g) {
  AcyclicityResult res;
  std::vector<int> indegree(static_cast<size_t>(g.n), 0);
  for (const auto& [from, to] : g.edges) indegree[static_cast<size_t>(to)]++;

  std::vector<bool> removed(static_cast<size_t>(g.n), false);
  for (Index step = 0; step < g.n; ++step) {
    // Lowest-index-first among current sources keeps the order canonical.
    Index next = -1;
    for (Index v = 0; v < g.n; ++v) {
      if (!removed[static_cast<size_t>(v)] && indegree[static_cast<size_t>(v)] == 0) {
        next = v;
        break;
      }
    }
    if (next < 0) break;
    removed[static_cast<size_t>(next)] = true;
    res.topo_order.push_back(next);
    for (const auto& [from, to] : g.edges) {
      if (from == next && !removed[static_cast<size_t>(to)]) {
        indegree[static_cast<size_t>(to)]--;
      }
    }
  }
  if (static_cast<Index>(res.topo_order.size()) == g.n) {
    res.acyclic = true;
    return res;
  }

  // Remaining nodes all lie on or feed cycles; walk until a repeat.
  res.acyclic = false;
  Index start = 0;
  while (removed[static_cast<size_t>(start)]) ++start;
  std::vector<Index> path;
  std::vector<int> seen_at(static_cast<size_t>(g.n), -1);
  Index cur = start;
  for (;;) {
    if (seen_at[static_cast<size_t>(cur)] >= 0) {
      path.erase(path.begin(), path.begin() + seen_at[static_cast<size_t>(cur)]);
      res.cycle = path;
      return res;
    }
    seen_at[static_cast<size_t>(cur)] = static_cast<int>(path.size());
    path.push_back(cur);
    Index succ = -1;
    for (const auto& [from, to] : g.edges) {
      if (from == cur && !removed[static_cast<size_t>(to)]) {
        succ = to;
        break;
      }
    }
    cur = succ;
  }
}

DiscreteFairnessVerdict is_fefx(const Instance& inst, const DiscreteAllocation& da) {
  validate_discrete_allocation(inst, da);
  const Index n = inst.n();
  const Index m = inst.m();
  for (Index i = 0; i < n; ++i) {
    CountVec own_counts = da.counts.row(i).transpose();
    Rational own = counts_value(inst, i, own_counts, da.pieces_per_good);
    for (Index target = 0; target <= n; ++target) {
      if (target == i) continue;
      CountVec tc = target == n ? da.charity : CountVec(da.counts.row(target).transpose());
      if (tc.sum() == 0) continue;  // no strict subsets of an empty bundle
      for (Index g = 0; g < m; ++g) {
        if (tc(g) == 0) continue;
        CountVec reduced = tc;
        reduced(g) -= 1;
        PieceMultiset pm{reduced, da.pieces_per_good};
        DiscreteSubsetResult best = max_feasible_discrete_subset(inst, i, pm);
        if (best.value > own) {
          DiscreteFairnessVerdict verdict;
          verdict.holds = false;
          verdict.witness = DiscreteEnvyWitness{i, target, best.take, best.value - own};
          return verdict;
        }
      }
    }
  }
  return DiscreteFairnessVerdict{true, std::nullopt};
}

}  // namespace fairdiv
