#include <doctest.h>

#include "fhq/symfunc/symfunc.hpp"
#include "helpers.hpp"

using namespace testing;
using namespace fhq::symfunc;

TEST_SUITE("symfunc") {

TEST_CASE("monomial products") {
  const auto m1 = SymFuncElem::monomial(P({1}));
  const auto square = SymFuncElem::monomial(P({1, 1}), 2) + SymFuncElem::monomial(P({2}));
  CHECK(monomial_mul(m1, m1) == square);
  CHECK(m1 * m1 == square);
  CHECK(SymFuncElem(1) * square == square);
  CHECK(SymFuncElem::elementary(1) * SymFuncElem::elementary(1) == square);
  // m_(2,1) m_(1) = m_(3,1) + 2 m_(2,2) + 2 m_(2,1,1)
  const auto expected = SymFuncElem::monomial(P({3, 1})) + SymFuncElem::monomial(P({2, 2}), 2) +
                        SymFuncElem::monomial(P({2, 1, 1}), 2);
  CHECK(monomial_mul(SymFuncElem::monomial(P({2, 1})), m1) == expected);
}

TEST_CASE("product rule against expansion") {
  for (const auto& a : fhq::combinat::partitions_up_to(4))
    for (const auto& b : fhq::combinat::partitions_up_to(3)) {
      const auto x = SymFuncElem::monomial(a), y = SymFuncElem::monomial(b);
      CHECK(monomial_mul(x, y) == monomial_mul_expanded(x, y));
    }
}

TEST_CASE("e to m") {
  CHECK(e_to_m(EPolyElem::product(P({2}))) == SymFuncElem::monomial(P({1, 1})));
  CHECK(e_to_m(EPolyElem::product(P({1, 1}))) == SymFuncElem::monomial(P({1, 1}), 2) + SymFuncElem::monomial(P({2})));
  CHECK(e_to_m(EPolyElem::product(P({2, 1}))) == SymFuncElem::monomial(P({1, 1, 1}), 3) + SymFuncElem::monomial(P({2, 1})));
}

TEST_CASE("m to e") {
  CHECK(m_to_e(SymFuncElem::monomial(P({1, 1}))) == EPolyElem::product(P({2})));
  CHECK(m_to_e(SymFuncElem::monomial(P({2}))) == EPolyElem::product(P({1, 1})) - EPolyElem::product(P({2}), 2));
  CHECK(m_to_e(SymFuncElem::monomial(P({1}))) == EPolyElem::product(P({1})));
  CHECK(m_to_e(SymFuncElem(binom(2, Q))) == EPolyElem(binom(2, Q)));
  for (const auto& lambda : fhq::combinat::partitions_up_to(6)) {
    const auto m = SymFuncElem::monomial(lambda, Q - binom(1));
    CHECK(e_to_m(m_to_e(m)) == m);
  }
}

TEST_CASE("evaluate") {
  CHECK(evaluate(SymFuncElem::elementary(1), {0, 1}, 5) == 1);
  CHECK(evaluate(SymFuncElem::elementary(3), {Q, 2}, 5).is_zero());
  CHECK(evaluate(SymFuncElem::monomial(P({2})), {1, Q}, 0) == 1 + Q * Q);
  CHECK(evaluate(SymFuncElem(binom(2, Q)), {}, 4) == 6 * Q);
  CHECK(evaluate(EPolyElem::product(P({1, 1})), {1, Q}, 0) == (1 + Q) * (1 + Q));
  const auto e = elementary_values({1, Q, 2});
  CHECK(e == std::vector<Laurent>{1, 3 + Q, 2 + 3 * Q, 2 * Q});
}

TEST_CASE("degrees") {
  const auto f = SymFuncElem::monomial(P({3, 1})) + SymFuncElem::monomial(P({1, 1, 1}));
  CHECK(f.degree() == 4);
  CHECK(f.variables_needed() == 3);
  CHECK(f.homogeneous_part(3) == SymFuncElem::monomial(P({1, 1, 1})));
  CHECK(SymFuncElem().degree() == -1);
  CHECK(EPolyElem::product(P({2, 1})).degree() == 3);
}

}
