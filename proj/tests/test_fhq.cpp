#include <doctest.h>

#include "fhq/error.hpp"
#include "fhq/fh/psi.hpp"
#include "fhq/hecke/geck_rouquier.hpp"
#include "helpers.hpp"

using namespace testing;
using namespace fhq::fh;
using fhq::symfunc::EPolyElem;
using fhq::symfunc::SymFuncElem;

namespace {

const IvPoly t_minus_1 = binom(1) - IvPoly(1);

Coefficients square_table() {
  return {{P({1, 1}), IvPoly(Q + qp(-1))},
          {P({2}), IvPoly(Q + 1 + qp(-1))},
          {P({1}), (Q - 1) * t_minus_1},
          {P({}), binom(2, Q)}};
}

}  // namespace

TEST_SUITE("fhq") {

TEST_CASE("structure constants") {
  CHECK(structure_constants(P({1}), P({1})) == square_table());
  CHECK(structure_constants(P({}), P({2})) == Coefficients{{P({2}), IvPoly(1)}});
  CHECK(structure_constants(P({2}), P({})) == Coefficients{{P({2}), IvPoly(1)}});
  StructureOptions uncached;
  uncached.use_cache = false;
  CHECK(structure_constants(P({1}), P({2}), uncached) == structure_constants(P({2}), P({1}), uncached));
}

TEST_CASE("structure constants at q = 1") {
  const Coefficients expected{{P({1, 1}), IvPoly(2)}, {P({2}), IvPoly(3)}, {P({}), binom(2)}};
  ClassicalElem got = theta(FHqElem(structure_constants(P({1}), P({1}))));
  CHECK(got == expected);
  CHECK(classical_structure_constants(P({1}), P({1})) == expected);
  for (const auto& mu : {P({1}), P({2}), P({1, 1})})
    for (const auto& nu : {P({1}), P({2})}) {
      if (mu.size() + nu.size() > 4) continue;
      CHECK(theta(FHqElem(structure_constants(mu, nu))) == classical_structure_constants(mu, nu));
    }
}

TEST_CASE("fitting from node data") {
  // the fit recovers Gamma_(1)^2 from its H_n expansions
  auto data = [](int n) { return class_product(n, P({1}), P({1})); };
  CHECK(fit_structure_constants(P({1}), P({1}), 4, data) == square_table());
  // data that is not polynomial in n fails validation
  auto bad = [](int n) {
    auto m = class_product(n, P({1}), P({1}));
    if (n == 9) m[P({})] += 1;
    return m;
  };
  CHECK_THROWS_AS(fit_structure_constants(P({1}), P({1}), 1, bad), fhq::Error);
}

TEST_CASE("multiplication and phi_nq") {
  const auto k1 = FHqElem::basis(P({1}));
  CHECK(fhq_mul(FHqElem::basis(P({})), k1) == k1);
  CHECK(fhq_mul(k1, k1) == FHqElem(square_table()));
  CHECK(phi_nq(k1, 3) == fhq::hecke::gr_element(3, P({1})));
  CHECK(phi_nq(FHqElem::basis(P({1, 1})), 3).is_zero());
  const auto g = fhq::hecke::gr_element(4, P({1}));
  CHECK(phi_nq(fhq_mul(k1, k1), 4) == g * g);
  CHECK(fhq_mul(k1, k1).filtration_degree() == 2);
  CHECK(fhq_mul(k1, k1).layer(2) == FHqElem::basis(P({1, 1}), Q + qp(-1)) + FHqElem::basis(P({2}), Q + 1 + qp(-1)));
}

TEST_CASE("theta") {
  CHECK(theta(FHqElem::basis(P({2, 1}))) == ClassicalElem{{P({2, 1}), IvPoly(1)}});
  CHECK(theta(FHqElem::basis(P({1}), Q - 1)).empty());
}

TEST_CASE("psi") {
  CHECK(psi(EPolyElem::product(P({1}))) == FHqElem::basis(P({1})));
  CHECK(psi(EPolyElem::product(P({2}))) == FHqElem::basis(P({1, 1})) + FHqElem::basis(P({2})));
  CHECK(psi(EPolyElem::product(P({1, 1}))) == FHqElem(square_table()));
  CHECK(psi(SymFuncElem::elementary(2)) == psi(EPolyElem::product(P({2}))));
  CHECK(psi(EPolyElem(binom(1))) == FHqElem::basis(P({}), binom(1)));
}

TEST_CASE("n matrices") {
  const auto n1 = n_matrix(1);
  CHECK(n1.entries == std::vector<std::vector<Laurent>>{{1}});
  const auto n2 = n_matrix(2);
  REQUIRE(n2.rows.size() == 2);
  for (std::size_t c = 0; c < 2; ++c) {
    std::map<fhq::combinat::Partition, Laurent> column;
    for (std::size_t r = 0; r < 2; ++r) column[n2.rows[r]] = n2.entries[r][c];
    if (n2.columns[c] == P({1, 1})) {
      CHECK(column[P({1, 1})] == 1);
      CHECK(column[P({2})] == 1);
    } else {
      CHECK(column[P({1, 1})] == Q + qp(-1) - 2);
      CHECK(column[P({2})] == Q + 1 + qp(-1) - 2);
    }
  }
  CHECK(n2.determinant.is_unit());
  CHECK(n_matrix(3).determinant.is_unit());
}

TEST_CASE("determinant") {
  CHECK(determinant({{Q, 1}, {1, qp(-1)}}).is_zero());
  CHECK(determinant({{1, 2, 3}, {0, Q, 5}, {0, 0, 2}}) == 2 * Q);
}

TEST_CASE("psi_inverse") {
  CHECK(m_to_e(psi_inverse(P({}))) == EPolyElem(1));
  CHECK(m_to_e(psi_inverse(P({1}))) == EPolyElem::product(P({1})));
  const auto f2 = EPolyElem::product(P({1, 1})) - EPolyElem::product(P({2}), Q + qp(-1)) -
                  EPolyElem::product(P({1}), (Q - 1) * t_minus_1) - EPolyElem(binom(2, Q));
  CHECK(m_to_e(psi_inverse(P({2}))) == f2);
  const auto f11 = EPolyElem::product(P({2}), Q + 1 + qp(-1)) - EPolyElem::product(P({1, 1})) +
                   EPolyElem::product(P({1}), (Q - 1) * t_minus_1) + EPolyElem(binom(2, Q));
  CHECK(m_to_e(psi_inverse(P({1, 1}))) == f11);
  for (const auto& mu : fhq::combinat::partitions_up_to(3)) CHECK(psi(psi_inverse(mu)) == FHqElem::basis(mu));
}

}
