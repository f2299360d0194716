#include <doctest.h>

#include "fhq/error.hpp"
#include "fhq/exact/linear.hpp"
#include "helpers.hpp"

using namespace testing;
using namespace fhq::exact;

TEST_SUITE("exact") {

TEST_CASE("qnumber") {
  CHECK(qnumber(0).is_zero());
  CHECK(qnumber(3) == 1 + Q + qp(2));
  CHECK(qnumber(-2) == -qp(-1) - qp(-2));
  CHECK(qnumber(1) == 1);
  // [m]_q (q - 1) = q^m - 1 for every m
  for (int m = -6; m <= 6; ++m) CHECK(qnumber(m) * (Q - 1) == qp(m) - 1);
}

TEST_CASE("laurent arithmetic") {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const Laurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Laurent());
    const mpq_class x(3, 2);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    CHECK((a * b).at_one() == a.at_one() * b.at_one());
    if (!b.is_zero()) {
      auto quotient = (a * b).divide_exact(b);
      REQUIRE(quotient);
      CHECK(*quotient == a);
    }
  }
  CHECK(Laurent::from_terms({{2, 1}, {-1, 3}, {2, -1}}) == Laurent::monomial(3, -1));
  CHECK(qp(2).is_unit());
  CHECK(!(1 + Q).is_unit());
  CHECK((Q - 1).divide_exact(Q + 1) == std::nullopt);
  CHECK(Laurent().to_string() == "0");
}

TEST_CASE("ivpoly evaluation") {
  CHECK((Q * binom(2)).evaluate(4) == 6 * Q);
  const IvPoly p = (Q - 1) * binom(1) - IvPoly(Q - 1);
  CHECK(p.evaluate(1).is_zero());
  CHECK(IvPoly(Q + 7).evaluate(-3) == Q + 7);
  CHECK(binom(2).evaluate(-1) == 1);
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(5, 7) == 0);
  // binomial(t,1)^2 = 2 binomial(t,2) + binomial(t,1)
  CHECK(binom(1) * binom(1) == binom(2, 2) + binom(1));
}

TEST_CASE("ivpoly products agree with pointwise products") {
  std::mt19937_64 rng(kSeed + 1);
  for (int i = 0; i < 50; ++i) {
    IvPoly a, b;
    for (int r = 0; r <= 3; ++r) {
      a += binom(r, random_laurent(rng, 1));
      b += binom(r, random_laurent(rng, 1));
    }
    const IvPoly ab = a * b;
    for (long n = -3; n <= 8; ++n) CHECK(ab.evaluate(n) == a.evaluate(n) * b.evaluate(n));
    CHECK((a * b).at_q_one() == a.at_q_one() * b.at_q_one());
  }
}

TEST_CASE("interpolate_binomial") {
  CHECK(interpolate_binomial({{0, 0}, {1, 0}, {2, Q}, {3, 3 * Q}}) == binom(2, Q));
  CHECK(interpolate_binomial({{5, 1 + Q}}) == IvPoly(1 + Q));
  CHECK(interpolate_binomial({{2, Q - 1}, {3, 2 * (Q - 1)}, {4, 3 * (Q - 1)}}) ==
        (Q - 1) * binom(1) - IvPoly(Q - 1));
  // non-consecutive nodes
  CHECK(interpolate_binomial({{1, 0}, {4, 6}, {7, 21}}) == binom(2));
  // t/2 is not integer-valued
  CHECK_THROWS_AS(interpolate_binomial({{0, 0}, {2, 1}}), fhq::Error);
  std::vector<Laurent> values;
  for (long n = 3; n < 8; ++n) values.push_back((Q * binom(3) + binom(1, 2)).evaluate(n));
  CHECK(interpolate_consecutive(3, values) == Q * binom(3) + binom(1, 2));
}

TEST_CASE("rational functions") {
  const RationalFn a(Q - 1), b(Q * Q - 1);
  const RationalFn r = a / b;
  CHECK(r * RationalFn(Q + 1) == RationalFn(1));
  CHECK(!r.to_laurent());
  CHECK((RationalFn(qp(3)) / RationalFn(qp(5))).to_laurent() == qp(-2));
  CHECK(r + r - r == r);
}

TEST_CASE("solve_unique and invert") {
  // x + y = q, x - y = 1
  std::vector<SparseRow> rows(2);
  rows[0].entries = {{0, 1}, {1, 1}};
  rows[0].rhs = {RationalFn(Q)};
  rows[1].entries = {{0, 1}, {1, -1}};
  rows[1].rhs = {RationalFn(1)};
  const auto x = solve_unique(rows, 2, 1);
  CHECK(x[0][0] * RationalFn(2) == RationalFn(Q + 1));
  CHECK(x[1][0] * RationalFn(2) == RationalFn(Q - 1));
  CHECK_THROWS_AS(solve_unique({rows[0]}, 2, 1), fhq::Error);
  rows.push_back(rows[0]);
  rows[2].rhs = {RationalFn(Q + 5)};
  CHECK_THROWS_AS(solve_unique(rows, 2, 1), fhq::Error);

  RationalMatrix m{{RationalFn(Q), RationalFn(1)}, {RationalFn(1), RationalFn(0)}};
  const auto inv = invert(m);
  REQUIRE(inv);
  CHECK((*inv)[0][1] == RationalFn(1));
  CHECK((*inv)[1][1] == RationalFn(-Q));
  CHECK(!invert(RationalMatrix{{RationalFn(1), RationalFn(2)}, {RationalFn(2), RationalFn(4)}}));
}

TEST_CASE("reconstruct_laurent") {
  const Laurent target = 3 * qp(-2) - Q + 4 * qp(3);
  std::vector<mpq_class> points, values;
  for (int k = 2; k <= 9; ++k) {
    points.emplace_back(k, 3);
    values.push_back(target.evaluate(points.back()));
  }
  CHECK(reconstruct_laurent(-3, 3, points, values) == target);
  CHECK(!reconstruct_laurent(-2, 2, points, values));
  values.back() += 1;
  CHECK(!reconstruct_laurent(-3, 3, points, values));
}

}
