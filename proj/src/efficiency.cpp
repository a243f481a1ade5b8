#include "fairdiv/efficiency.hpp"

#include <stdexcept>

namespace fairdiv {

LinearProgram allocation_polytope_lp(const Instance& inst) {
  const Index n = inst.n();
  const Index m = inst.m();
  const Index vars = n * m;
  LinearProgram lp;
  lp.objective = Vec::Zero(vars);
  lp.bounds.assign(static_cast<size_t>(vars), VariableBounds{Rational(0), Rational(1)});
  for (Index g = 0; g < m; ++g) {  // supply: sum_i x(i,g) <= 1
    ConstraintRow row{Vec::Zero(vars), Relation::LessEq, Rational(1)};
    for (Index i = 0; i < n; ++i) row.coeffs(i * m + g) = 1;
    lp.rows.push_back(std::move(row));
  }
  for (Index i = 0; i < n; ++i) {  // budget: sum_g s(i,g) x(i,g) <= B_i
    ConstraintRow row{Vec::Zero(vars), Relation::LessEq, inst.budgets(i)};
    for (Index g = 0; g < m; ++g) row.coeffs(i * m + g) = inst.sizes(i, g);
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

namespace {

Allocation unpack(const Instance& inst, const Vec& point) {
  Allocation x(inst.n(), inst.m());
  for (Index i = 0; i < inst.n(); ++i) {
    for (Index g = 0; g < inst.m(); ++g) x(i, g) = point(i * inst.m() + g);
  }
  return x;
}

}  // namespace

Allocation max_weighted_welfare(const Instance& inst, const Vec& w) {
  if (w.size() != inst.n()) {
    throw std::invalid_argument("weights: length must equal agent count");
  }
  for (Index i = 0; i < inst.n(); ++i) {
    if (w(i) <= 0) {
      throw std::invalid_argument("weights[" + std::to_string(i) +
                                  "]: must be strictly positive");
    }
  }
  LinearProgram lp = allocation_polytope_lp(inst);
  for (Index i = 0; i < inst.n(); ++i) {
    for (Index g = 0; g < inst.m(); ++g) {
      lp.objective(i * inst.m() + g) = w(i) * inst.values(i, g);
    }
  }
  LpSolution sol = solve(lp);
  if (sol.status != LpStatus::Optimal) {
    throw std::logic_error("welfare LP infeasible; the empty allocation is always feasible");
  }
  return unpack(inst, sol.point);
}

PoVerdict is_pareto_optimal(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  const Index n = inst.n();
  const Index m = inst.m();
  const Index vars = n * m + n;  // y(i,g) then delta_i

  LinearProgram lp;
  lp.objective = Vec::Zero(vars);
  lp.bounds.assign(static_cast<size_t>(vars), VariableBounds{Rational(0), Rational(1)});
  for (Index i = 0; i < n; ++i) {
    // delta_i can never exceed agent i's value for everything.
    lp.bounds[static_cast<size_t>(n * m + i)] = VariableBounds{Rational(0), inst.values.row(i).sum()};
    lp.objective(n * m + i) = 1;
  }
  for (Index g = 0; g < m; ++g) {
    ConstraintRow row{Vec::Zero(vars), Relation::LessEq, Rational(1)};
    for (Index i = 0; i < n; ++i) row.coeffs(i * m + g) = 1;
    lp.rows.push_back(std::move(row));
  }
  for (Index i = 0; i < n; ++i) {
    ConstraintRow row{Vec::Zero(vars), Relation::LessEq, inst.budgets(i)};
    for (Index g = 0; g < m; ++g) row.coeffs(i * m + g) = inst.sizes(i, g);
    lp.rows.push_back(std::move(row));
  }
  for (Index i = 0; i < n; ++i) {
    // v_i(y_i) - delta_i >= v_i(alloc_i), written as a <= row.
    ConstraintRow row{Vec::Zero(vars), Relation::LessEq,
                      -bundle_value(inst, i, alloc.row(i).transpose())};
    for (Index g = 0; g < m; ++g) row.coeffs(i * m + g) = -inst.values(i, g);
    row.coeffs(n * m + i) = 1;
    lp.rows.push_back(std::move(row));
  }

  LpSolution sol = solve(lp);
  if (sol.status != LpStatus::Optimal) {
    throw std::logic_error("dominance LP infeasible; y = alloc, delta = 0 is always feasible");
  }
  if (sol.value == 0) return PoVerdict{true, std::nullopt};

  Allocation dom = unpack(inst, sol.point);
  validate_allocation(inst, dom);
  bool strict = false;
  for (Index i = 0; i < n; ++i) {
    Rational before = bundle_value(inst, i, alloc.row(i).transpose());
    Rational after = bundle_value(inst, i, dom.row(i).transpose());
    if (after < before) {
      throw std::logic_error("dominance LP returned a non-dominating allocation");
    }
    if (after > before) strict = true;
  }
  if (!strict) {
    throw std::logic_error("dominance LP optimum positive but no agent strictly improves");
  }
  return PoVerdict{false, dom};
}

}  // namespace fairdiv
