#include <doctest.h>

#include "fairdiv/json_io.hpp"
#include "support/fixtures.hpp"

using namespace fairdiv;
using namespace fairdiv::testing;

TEST_SUITE("model") {

TEST_CASE("rational parsing covers integers, decimals, and fractions") {
  CHECK(parse_rational("0.625") == Rational(5, 8));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("2.50") == Rational(5, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(to_pq_string(Rational(5, 8)) == "5/8");
  CHECK(to_pq_string(Rational(2)) == "2/1");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("ceil_rational") {
  CHECK(ceil_rational(Rational(3, 2)) == 2);
  CHECK(ceil_rational(Rational(2)) == 2);
  CHECK(ceil_rational(Rational(-3, 2)) == -1);
  CHECK(ceil_rational(Rational(0)) == 0);
}

TEST_CASE("instance parses from JSON with exact conversions") {
  const std::string text = R"({
    "n": 2, "m": 2,
    "values": [[2, 1], [1, 1]],
    "sizes": [[1, 1], [1, 2]],
    "budgets": [1, 1]
  })";
  Instance inst = parse_instance(text);
  CHECK(inst.n() == 2);
  CHECK(inst.m() == 2);
  CHECK(inst.values(0, 0) == 2);
  CHECK(inst.sizes(1, 1) == 2);
  CHECK(inst.budgets(0) == 1);

  Instance reparsed = parse_instance(serialize_instance(inst));
  CHECK(reparsed.values == inst.values);
  CHECK(reparsed.sizes == inst.sizes);
  CHECK(reparsed.budgets == inst.budgets);
}

TEST_CASE("instance with zero goods is valid") {
  Instance inst = parse_instance(R"({"n": 1, "m": 0, "values": [[]], "sizes": [[]], "budgets": [1]})");
  CHECK(inst.m() == 0);
  CHECK(bundle_value(inst, 0, Bundle(0)) == 0);
}

TEST_CASE("malformed instances are rejected with field paths") {
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"n": 1, "m": 1, "values": [[1]], "sizes": [[0]], "budgets": [1]})"),
      doctest::Contains("sizes[0][0]"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"n": 1, "m": 1, "values": [[-1]], "sizes": [[1]], "budgets": [1]})"),
      doctest::Contains("negative value"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"n": 2, "m": 1, "values": [[1]], "sizes": [[1]], "budgets": [1, 1]})"),
      doctest::Contains("values"), std::invalid_argument);
  CHECK_THROWS_AS(parse_instance("{"), std::invalid_argument);
  // Binary floating point never sneaks in.
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"n": 1, "m": 1, "values": [[0.5]], "sizes": [[1]], "budgets": [1]})"),
      doctest::Contains("floating-point"), std::invalid_argument);
}

TEST_CASE("bundle algebra on the known instance") {
  Instance inst = nonconvexity_instance();
  Bundle g2_only(2);
  g2_only << 0, 1;
  CHECK(bundle_value(inst, 0, g2_only) == 1);

  Bundle mixed(2);
  mixed << Rational(1, 4), Rational(1, 2);
  CHECK(bundle_value(inst, 0, mixed) == 1);  // 1/4*2 + 1/2*1

  Bundle half_g2(2);
  half_g2 << 0, Rational(1, 2);
  CHECK(bundle_size(inst, 1, half_g2) == 1);
  CHECK(is_feasible(inst, 1, half_g2));
  CHECK(bundle_size(inst, 1, g2_only) == 2);
  CHECK_FALSE(is_feasible(inst, 1, g2_only));

  CHECK(bundle_value(inst, 0, Bundle::Zero(2)) == 0);
  CHECK(bundle_size(inst, 0, Bundle::Zero(2)) == 0);
}

TEST_CASE("bundle value is linear in scaling") {
  Instance inst = nonconvexity_instance();
  Bundle b(2);
  b << Rational(1, 3), Rational(3, 4);
  for (const Rational lambda : {Rational(0), Rational(1, 5), Rational(1)}) {
    CHECK(bundle_value(inst, 0, Bundle(lambda * b)) == lambda * bundle_value(inst, 0, b));
  }
}

TEST_CASE("charity bundle") {
  Instance inst = nonconvexity_instance();
  Allocation x = nonconvex_alloc_x();
  Bundle c = charity_bundle(x);
  CHECK(c(0) == Rational(1, 2));
  CHECK(c(1) == 0);

  CHECK(charity_bundle(empty_allocation(inst)) == Bundle::Ones(2));

  Allocation full(2, 2);
  full << 1, 0, 0, 1;
  CHECK(charity_bundle(full) == Bundle::Zero(2));

  Allocation over(2, 2);
  over << 1, 0, Rational(1, 2), 0;
  CHECK_THROWS_WITH_AS(charity_bundle(over), doctest::Contains("over-allocated"),
                       std::invalid_argument);

  // Charity plus agent bundles is exactly the all-ones vector.
  Bundle total = charity_bundle(x);
  for (Index i = 0; i < x.rows(); ++i) total += x.row(i).transpose();
  CHECK(total == Bundle::Ones(2));
}

TEST_CASE("allocation JSON round-trip") {
  Instance inst = nonconvexity_instance();
  Allocation z = nonconvex_alloc_z();
  Allocation back = parse_allocation(serialize_allocation(z), inst);
  CHECK(back == z);
}

}  // TEST_SUITE
