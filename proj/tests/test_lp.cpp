#include <doctest.h>

#include "fairdiv/efficiency.hpp"
#include "fairdiv/lp.hpp"
#include "support/fixtures.hpp"
#include "support/random_gen.hpp"
#include "support/vertex_enum.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

namespace {

void check_exact_feasibility(const LinearProgram& lp, const LpSolution& sol) {
  REQUIRE(sol.status == LpStatus::Optimal);
  for (Index j = 0; j < lp.objective.size(); ++j) {
    CHECK(sol.point(j) >= lp.bounds[static_cast<size_t>(j)].lo);
    CHECK(sol.point(j) <= lp.bounds[static_cast<size_t>(j)].hi);
  }
  for (const auto& row : lp.rows) {
    Rational lhs = row.coeffs.dot(sol.point);
    if (row.rel == Relation::Equal) {
      CHECK(lhs == row.rhs);
    } else {
      CHECK(lhs <= row.rhs);
    }
  }
  CHECK(sol.value == lp.objective.dot(sol.point));
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("one-variable maximization hits the binding row") {
  LinearProgram lp;
  lp.objective = Vec::Ones(1);
  lp.bounds = {VariableBounds{Rational(0), Rational(2)}};
  ConstraintRow row{Vec::Ones(1), Relation::LessEq, Rational(1)};
  lp.rows.push_back(row);
  LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 1);
  CHECK(sol.point(0) == 1);
}

TEST_CASE("infeasible system is reported") {
  LinearProgram lp;
  lp.objective = Vec::Zero(1);
  lp.bounds = {VariableBounds{Rational(0), Rational(3)}};
  ConstraintRow r1{Vec::Ones(1), Relation::LessEq, Rational(1)};
  ConstraintRow r2{-Vec::Ones(1), Relation::LessEq, Rational(-2)};  // x >= 2
  lp.rows = {r1, r2};
  CHECK(solve(lp).status == LpStatus::Infeasible);
}

TEST_CASE("welfare program on the known instance matches vertex enumeration") {
  Instance inst = nonconvexity_instance();
  LinearProgram lp = allocation_polytope_lp(inst);
  Vec w = Vec::Constant(2, Rational(1, 2));
  for (Index i = 0; i < 2; ++i) {
    for (Index g = 0; g < 2; ++g) lp.objective(i * 2 + g) = w(i) * inst.values(i, g);
  }
  LpSolution sol = solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rational(5, 4));

  VertexEnumResult oracle = enumerate_vertices(lp);
  REQUIRE(oracle.feasible);
  CHECK(oracle.best_value == sol.value);

  // Unique optimum: agent 0 takes good 0, agent 1 takes half of good 1.
  Vec expected(4);
  expected << 1, 0, 0, Rational(1, 2);
  CHECK(sol.point == expected);
}

TEST_CASE("feasibility program finds a weight vector under edge constraints") {
  // w0 + w1 = 1, w1 <= gamma*w0, w_i >= eps with gamma = 1/16, eps = gamma^2/2.
  Rational gamma(1, 16);
  Rational eps = gamma * gamma / 2;
  std::vector<ConstraintRow> rows;
  rows.push_back(ConstraintRow{Vec::Ones(2), Relation::Equal, Rational(1)});
  Vec edge(2);
  edge << -gamma, 1;
  rows.push_back(ConstraintRow{edge, Relation::LessEq, Rational(0)});
  for (Index i = 0; i < 2; ++i) {
    Vec floor = Vec::Zero(2);
    floor(i) = -1;
    rows.push_back(ConstraintRow{floor, Relation::LessEq, -eps});
  }
  std::vector<VariableBounds> bounds(2, VariableBounds{Rational(0), Rational(1)});
  LpSolution sol = solve_feasibility(rows, bounds);
  REQUIRE(sol.status == LpStatus::Optimal);
  // Verify by substitution.
  CHECK(sol.point(0) + sol.point(1) == 1);
  CHECK(sol.point(1) <= gamma * sol.point(0));
  CHECK(sol.point(0) >= eps);
  CHECK(sol.point(1) >= eps);
}

TEST_CASE("feasibility with no rows returns a point") {
  std::vector<VariableBounds> bounds(1, VariableBounds{Rational(0), Rational(1)});
  LpSolution sol = solve_feasibility({}, bounds);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.point(0) >= 0);
  CHECK(sol.point(0) <= 1);
}

TEST_CASE("infeasible weight system") {
  std::vector<ConstraintRow> rows;
  Vec a = Vec::Ones(1);
  rows.push_back(ConstraintRow{-a, Relation::LessEq, Rational(-1)});  // w >= 1
  rows.push_back(ConstraintRow{a, Relation::LessEq, Rational(0)});    // w <= 0
  std::vector<VariableBounds> bounds(1, VariableBounds{Rational(0), Rational(1)});
  CHECK(solve_feasibility(rows, bounds).status == LpStatus::Infeasible);
}

TEST_CASE("solver agrees with exhaustive vertex enumeration on random boxed LPs") {
  Rng rng(20240811);
  int feasible_seen = 0;
  int infeasible_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    LinearProgram lp = random_lp(rng);
    VertexEnumResult oracle = enumerate_vertices(lp);
    LpSolution sol = solve(lp);
    if (oracle.feasible) {
      ++feasible_seen;
      REQUIRE(sol.status == LpStatus::Optimal);
      CHECK(sol.value == oracle.best_value);
      check_exact_feasibility(lp, sol);
    } else {
      ++infeasible_seen;
      CHECK(sol.status == LpStatus::Infeasible);
    }
  }
  // The generator must exercise both outcomes.
  CHECK(feasible_seen > 50);
  CHECK(infeasible_seen > 10);
}

TEST_CASE("determinism: identical inputs give identical vertices") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    LinearProgram lp = random_lp(rng);
    LpSolution a = solve(lp);
    LpSolution b = solve(lp);
    CHECK(a.status == b.status);
    if (a.status == LpStatus::Optimal) {
      CHECK(a.point == b.point);
      CHECK(a.value == b.value);
    }
  }
}

}  // TEST_SUITE
