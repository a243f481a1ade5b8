#include "fairdiv/grid_oracle.hpp"

#include <sstream>
#include <stdexcept>

#include "fairdiv/efficiency.hpp"

namespace fairdiv {

namespace {

void check_grid_cap(const Instance& inst, int k) {
  if (k < 1) throw std::invalid_argument("grid resolution k must be at least 1");
  long long space = 1;
  for (Index p = 0; p < inst.n() * inst.m(); ++p) {
    space *= k + 1;
    if (space > kEnumerationCap) {
      throw CapExceededError("grid space (k+1)^(n*m) exceeds cap " +
                             std::to_string(kEnumerationCap) + "; reduce k, n, or m");
    }
  }
}

// Row-major DFS over fraction numerators counts(i,g) in 0..k with supply
// and budget pruning. The visitor sees every feasible grid point as raw
// counts plus the DFS bookkeeping (per-good unallocated numerators,
// per-agent leftover budgets), in lexicographic count order.
template <typename Visit>
void for_each_grid_point(const Instance& inst, int k, Visit&& visit) {
  const Index n = inst.n();
  const Index m = inst.m();
  Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(n, m);
  std::vector<int> good_remaining(static_cast<size_t>(m), k);
  std::vector<Rational> budget_left(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) budget_left[static_cast<size_t>(i)] = inst.budgets(i);

  const Index total = n * m;
  std::vector<int> choice(static_cast<size_t>(total), -1);
  Index p = 0;
  while (p >= 0) {
    if (p == total) {
      visit(counts, good_remaining, budget_left);
      --p;
      if (p < 0) break;
    }
    const Index i = p / m;
    const Index g = p % m;
    int& c = choice[static_cast<size_t>(p)];
    if (c >= 0) {  // undo the previous choice at this position
      good_remaining[static_cast<size_t>(g)] += c;
      budget_left[static_cast<size_t>(i)] += inst.sizes(i, g) * c / k;
      counts(i, g) = 0;
    }
    int next = c + 1;
    // Sizes are positive, so cost grows with the numerator: the first
    // violation rules out all larger choices at this position.
    if (next <= good_remaining[static_cast<size_t>(g)]) {
      Rational spend = inst.sizes(i, g) * next / k;
      if (spend <= budget_left[static_cast<size_t>(i)]) {
        c = next;
        counts(i, g) = next;
        good_remaining[static_cast<size_t>(g)] -= next;
        budget_left[static_cast<size_t>(i)] -= spend;
        ++p;
        continue;
      }
    }
    c = -1;
    --p;
  }
}

Allocation counts_to_allocation(const Eigen::MatrixXi& counts, int k) {
  Allocation x(counts.rows(), counts.cols());
  for (Index i = 0; i < counts.rows(); ++i) {
    for (Index g = 0; g < counts.cols(); ++g) x(i, g) = Rational(counts(i, g), k);
  }
  return x;
}

bool grid_point_is_fef(const Instance& inst, const Allocation& x,
                       const std::vector<DensityOrder>& orders) {
  const Index n = inst.n();
  Bundle charity = charity_bundle(x);
  for (Index i = 0; i < n; ++i) {
    Rational own = bundle_value(inst, i, x.row(i).transpose());
    for (Index h = 0; h <= n; ++h) {
      if (h == i) continue;
      Bundle tb = h == n ? charity : Bundle(x.row(h).transpose());
      if (max_feasible_subset(inst, i, tb, orders[static_cast<size_t>(i)]).value > own) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Allocation> enumerate_feasible_grid(const Instance& inst, int k) {
  check_grid_cap(inst, k);
  std::vector<Allocation> out;
  for_each_grid_point(inst, k,
                      [&](const Eigen::MatrixXi& counts, const std::vector<int>&,
                          const std::vector<Rational>&) {
                        out.push_back(counts_to_allocation(counts, k));
                      });
  return out;
}

std::vector<Allocation> enumerate_fef_set(const Instance& inst, int k) {
  check_grid_cap(inst, k);
  std::vector<DensityOrder> orders;
  for (Index i = 0; i < inst.n(); ++i) orders.push_back(density_order(inst, i));
  std::vector<Allocation> out;
  for_each_grid_point(inst, k,
                      [&](const Eigen::MatrixXi& counts, const std::vector<int>&,
                          const std::vector<Rational>&) {
                        Allocation x = counts_to_allocation(counts, k);
                        if (grid_point_is_fef(inst, x, orders) && is_fef(inst, x).holds) {
                          out.push_back(std::move(x));
                        }
                      });
  return out;
}

std::vector<NonconvexityTriple> nonconvexity_scan(const Instance& inst, int k) {
  std::vector<Allocation> fef = enumerate_fef_set(inst, k);
  std::vector<NonconvexityTriple> out;
  for (size_t a = 0; a < fef.size(); ++a) {
    for (size_t b = a + 1; b < fef.size(); ++b) {
      Allocation mid = (fef[a] + fef[b]) / Rational(2);
      FairnessVerdict verdict = is_fef(inst, mid);
      if (!verdict.holds) {
        out.push_back(NonconvexityTriple{fef[a], fef[b], mid, verdict});
      }
    }
  }
  return out;
}

std::vector<Allocation> pareto_frontier(const Instance& inst, int k) {
  check_grid_cap(inst, k);
  const Index n = inst.n();
  const Index m = inst.m();
  std::vector<Allocation> out;
  for_each_grid_point(
      inst, k,
      [&](const Eigen::MatrixXi& counts, const std::vector<int>& good_remaining,
          const std::vector<Rational>& budget_left) {
        // Cheap exact rejection: spare budget plus positive value for an
        // unallocated fraction yields an explicit dominator.
        for (Index g = 0; g < m; ++g) {
          if (good_remaining[static_cast<size_t>(g)] == 0) continue;
          for (Index i = 0; i < n; ++i) {
            if (inst.values(i, g) > 0 && budget_left[static_cast<size_t>(i)] > 0) return;
          }
        }
        Allocation x = counts_to_allocation(counts, k);
        if (is_pareto_optimal(inst, x).holds) out.push_back(std::move(x));
      });
  return out;
}

std::string value_scatter_csv(const Instance& inst, const std::vector<Allocation>& points) {
  std::ostringstream os;
  for (Index i = 0; i < inst.n(); ++i) {
    os << (i ? "," : "") << "v" << i;
  }
  os << "\n";
  for (const Allocation& x : points) {
    for (Index i = 0; i < inst.n(); ++i) {
      os << (i ? "," : "") << to_double(bundle_value(inst, i, x.row(i).transpose()));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace fairdiv
