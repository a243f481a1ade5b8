#include "fairdiv/fefpo_search.hpp"

#include <stdexcept>

#include "fairdiv/lp.hpp"

namespace fairdiv {

GammaParams compute_gamma(const Instance& inst, bool all_pairs) {
  const Index n = inst.n();
  const Index m = inst.m();
  const bool pairs_exist = all_pairs ? (n >= 1 && m >= 1) : (n >= 2 && m >= 1);
  if (n >= 2 && m >= 1) {
    for (Index i = 0; i < n; ++i) {
      for (Index g = 0; g < m; ++g) {
        if (inst.values(i, g) == 0) {
          throw std::invalid_argument(
              "values[" + std::to_string(i) + "][" + std::to_string(g) +
              "] is zero: the pairwise value-ratio bound degenerates; perturb "
              "zero values to use the search");
        }
      }
    }
  }

  GammaParams gp;
  gp.cond1 = Rational(1, 2);

  if (pairs_exist) {
    std::optional<Rational> c2;
    for (Index i = 0; i < n; ++i) {
      for (Index h = 0; h < n; ++h) {
        if (i == h && !all_pairs) continue;
        for (Index g = 0; g < m; ++g) {
          Rational ratio = inst.values(i, g) / inst.values(h, g);
          if (!c2 || ratio < *c2) c2 = ratio;
        }
      }
    }
    gp.cond2 = c2;

    std::optional<Rational> worst;
    for (Index i = 0; i < n; ++i) {
      for (Index h = 0; h < n; ++h) {
        if (i == h && !all_pairs) continue;
        for (Index g = 0; g < m; ++g) {
          for (Index g2 = 0; g2 < m; ++g2) {
            // rho_i(g2) > rho_i(g), cross-multiplied (sizes positive).
            if (inst.values(i, g2) * inst.sizes(i, g) <= inst.values(i, g) * inst.sizes(i, g2)) {
              continue;
            }
            Rational num =
                inst.values(i, g2) - inst.values(i, g) * inst.sizes(i, g2) / inst.sizes(i, g);
            Rational term = num / inst.values(h, g2);
            if (!worst || term < *worst) worst = term;
          }
        }
      }
    }
    if (worst) gp.cond3 = *worst / 2;
  }

  Rational bound = gp.cond1;
  if (gp.cond2 && *gp.cond2 < bound) bound = *gp.cond2;
  if (gp.cond3 && *gp.cond3 < bound) bound = *gp.cond3;
  gp.gamma = bound / 2;

  gp.eps_floor = 1;
  for (Index i = 0; i < n; ++i) gp.eps_floor *= gp.gamma;
  gp.eps_floor /= n;

  gp.M = 0;
  for (Index i = 0; i < n; ++i) {
    Rational total = inst.values.row(i).sum();
    if (total > gp.M) gp.M = total;
  }
  return gp;
}

namespace {

Vec level_weights(const EnvyGraph& g, const AcyclicityResult& topo, const Rational& gamma) {
  std::vector<int> level(static_cast<size_t>(g.n), 0);
  for (Index v : topo.topo_order) {
    for (const auto& [from, to] : g.edges) {
      if (to == v && level[static_cast<size_t>(from)] + 1 > level[static_cast<size_t>(v)]) {
        level[static_cast<size_t>(v)] = level[static_cast<size_t>(from)] + 1;
      }
    }
  }
  Vec raw(g.n);
  for (Index v = 0; v < g.n; ++v) {
    Rational w = 1;
    for (int d = 0; d < level[static_cast<size_t>(v)]; ++d) w *= gamma;
    raw(v) = w;
  }
  return raw / raw.sum();
}

}  // namespace

Vec adjust_weights_p3(const EnvyGraph& g, const Rational& gamma, const Rational& eps_floor,
                      bool lp_mode) {
  AcyclicityResult topo = is_acyclic(g);
  if (!topo.acyclic) {
    throw std::logic_error(
        "envy graph has a cycle; weighted-welfare maxima always induce acyclic "
        "envy graphs, so the caller violated that contract");
  }

  Vec w;
  if (lp_mode) {
    std::vector<ConstraintRow> rows;
    ConstraintRow simplex{Vec::Ones(g.n), Relation::Equal, Rational(1)};
    rows.push_back(std::move(simplex));
    for (Index i = 0; i < g.n; ++i) {
      ConstraintRow floor{Vec::Zero(g.n), Relation::LessEq, -eps_floor};
      floor.coeffs(i) = -1;
      rows.push_back(std::move(floor));
    }
    for (const auto& [from, to] : g.edges) {
      ConstraintRow edge{Vec::Zero(g.n), Relation::LessEq, Rational(0)};
      edge.coeffs(to) = 1;
      edge.coeffs(from) = -gamma;
      rows.push_back(std::move(edge));
    }
    std::vector<VariableBounds> bounds(static_cast<size_t>(g.n),
                                       VariableBounds{Rational(0), Rational(1)});
    LpSolution sol = solve_feasibility(rows, bounds);
    if (sol.status != LpStatus::Optimal) {
      throw std::logic_error("weight program infeasible on an acyclic envy graph");
    }
    w = sol.point;
  } else {
    w = level_weights(g, topo, gamma);
  }

  // Exact substitution check of all three constraint families.
  if (w.sum() != 1) throw std::logic_error("weights do not sum to one");
  for (Index i = 0; i < g.n; ++i) {
    if (w(i) < eps_floor) throw std::logic_error("weight fell below the floor");
  }
  for (const auto& [from, to] : g.edges) {
    if (w(to) > gamma * w(from)) {
      throw std::logic_error("weight update violated an envy-edge inequality");
    }
  }
  return w;
}

SearchResult find_fef_po(const Instance& inst, int max_iters) {
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  GammaParams gp = compute_gamma(inst);
  const Index n = inst.n();

  Vec w = Vec::Constant(n, Rational(1, n));
  SearchTrace trace;
  for (int t = 0; t < max_iters; ++t) {
    Allocation x = max_weighted_welfare(inst, w);
    Mat v = envy_matrix_p2(inst, x);

    SearchIteration it;
    it.weights = w;
    it.alloc = x;
    it.envy = v;
    it.max_envy = 0;
    for (Index i = 0; i < n; ++i) {
      Rational own = bundle_value(inst, i, x.row(i).transpose());
      for (Index h = 0; h <= n; ++h) {
        if (h == i) continue;
        Rational envy = v(i, h) - own;
        if (envy > it.max_envy) it.max_envy = envy;
        if (envy > 0 && h < n) it.envy_edges.emplace_back(i, h);
        if (envy > 0 && h == n) {
          throw std::logic_error(
              "weighted-welfare maximizer shows charity envy, contradicting its "
              "Pareto-optimality");
        }
      }
    }
    trace.iterations.push_back(it);

    if (it.envy_edges.empty()) {
      // Post-hoc certification; never trusted from the loop logic alone.
      if (!is_fef(inst, x).holds || !is_pareto_optimal(inst, x).holds) {
        throw std::logic_error("search certification failed its own re-check");
      }
      trace.status = SearchStatus::Certified;
      trace.best_iteration = static_cast<Index>(trace.iterations.size()) - 1;
      return SearchResult{x, std::move(trace)};
    }

    EnvyGraph g;
    g.n = n;
    g.edges = it.envy_edges;
    w = adjust_weights_p3(g, gp.gamma, gp.eps_floor);
  }

  trace.status = SearchStatus::IterationCap;
  Index best = 0;
  for (Index t = 1; t < static_cast<Index>(trace.iterations.size()); ++t) {
    if (trace.iterations[static_cast<size_t>(t)].max_envy <
        trace.iterations[static_cast<size_t>(best)].max_envy) {
      best = t;
    }
  }
  trace.best_iteration = best;
  Allocation alloc = trace.iterations[static_cast<size_t>(best)].alloc;
  return SearchResult{std::move(alloc), std::move(trace)};
}

}  // namespace fairdiv
