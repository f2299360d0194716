#include <doctest.h>

#include "fhq/combinat/partition.hpp"
#include "fhq/error.hpp"
#include "fhq/hecke/characters.hpp"
#include "fhq/hecke/evaluation.hpp"
#include "fhq/hecke/geck_rouquier.hpp"
#include "helpers.hpp"

using namespace testing;
using namespace fhq::hecke;
using fhq::perm::Permutation;

namespace {

Permutation cyc(int n, const char* text) { return Permutation::from_cycles(n, text); }

HeckeElem gamma1_h3() {
  HeckeElem g(3);
  g.add_term(cyc(3, "(1 2)"), 1);
  g.add_term(cyc(3, "(2 3)"), 1);
  g.add_term(cyc(3, "(1 3)"), qp(-1));
  return g;
}

}  // namespace

TEST_SUITE("hecke") {

TEST_CASE("multiplication") {
  const HeckeElem s1 = HeckeElem::generator(3, 1), s2 = HeckeElem::generator(3, 2);
  CHECK(s1 * s1 == (Q - 1) * s1 + Q * HeckeElem::identity(3));
  CHECK(s1 * s2 == HeckeElem::basis(Permutation::simple(3, 1) * Permutation::simple(3, 2)));
  CHECK(HeckeElem::word(3, {1, 2, 1}) == HeckeElem::basis(cyc(3, "(1 3)")));
  CHECK_THROWS_AS(s1 * HeckeElem::generator(4, 1), fhq::Error);
  // (T_i - q)(T_i + 1) = 0
  for (int i = 1; i < 4; ++i) {
    const HeckeElem t = HeckeElem::generator(4, i), one = HeckeElem::identity(4);
    CHECK(((t - Q * one) * (t + one)).is_zero());
  }
}

TEST_CASE("associativity on random elements") {
  std::mt19937_64 rng(kSeed);
  const auto group = fhq::perm::all_permutations(4);
  auto random = [&] {
    HeckeElem z(4);
    for (int k = 0; k < 4; ++k) z.add_term(group[rng() % group.size()], random_laurent(rng, 2));
    return z;
  };
  for (int i = 0; i < 10; ++i) {
    const auto a = random(), b = random(), c = random();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("jm elements") {
  CHECK(jm_element(1, 3).is_zero());
  CHECK(jm_element(2, 3) == HeckeElem::basis(cyc(3, "(1 2)"), qp(-1)));
  CHECK(jm_element(3, 3) == HeckeElem::basis(cyc(3, "(1 3)"), qp(-2)) + HeckeElem::basis(cyc(3, "(2 3)"), qp(-1)));
  CHECK(scaled_jm_element(3, 4) == Q * jm_element(3, 4));
  // L_{i+1} = q^-1 T_i L_i T_i + q^-1 T_i
  for (int i = 1; i < 4; ++i) {
    const auto t = HeckeElem::generator(4, i);
    CHECK(jm_element(i + 1, 4) == qp(-1) * (t * jm_element(i, 4) * t) + qp(-1) * t);
  }
}

TEST_CASE("is_central") {
  CHECK(is_central(HeckeElem::identity(3)));
  CHECK(!is_central(HeckeElem::generator(3, 1)));
  const auto e = elementary_jm(3);
  CHECK(is_central(e[2]));
  HeckeElem e2(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) e2 += jm_element(i, 3) * jm_element(j, 3);
  CHECK(is_central(e2));
}

TEST_CASE("geck-rouquier basis of H_3") {
  const auto basis = geck_rouquier_basis(3);
  REQUIRE(basis.size() == 3);
  CHECK(basis.at(P({})) == HeckeElem::identity(3));
  CHECK(basis.at(P({1})) == gamma1_h3());
  HeckeElem g2(3);
  g2.add_term(cyc(3, "(1 2 3)"), 1);
  g2.add_term(cyc(3, "(1 3 2)"), 1);
  g2.add_term(cyc(3, "(1 3)"), (Q - 1) * qp(-1));
  CHECK(basis.at(P({2})) == g2);
  CHECK(geck_rouquier_basis(1) == std::map<fhq::combinat::Partition, HeckeElem>{{P({}), HeckeElem::identity(1)}});
}

TEST_CASE("geck-rouquier defining properties") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& [mu, g] : geck_rouquier_basis(n)) {
      CHECK(is_central(g));
      CHECK(specialize_q1(g) == class_sum(n, mu));
      // coefficient 1 on minimal-length reps, 0 on other minimal-length elements
      for (const auto& nu : fhq::combinat::partitions_up_to(n))
        for (const auto& w : fhq::perm::minimal_length_class_reps(n, nu))
          CHECK(g.coefficient(w) == (nu == mu ? Laurent(1) : Laurent(0)));
    }
  CHECK(gr_element(3, P({1, 1})).is_zero());
  CHECK_THROWS_AS(gr_element(9, P({1})), fhq::Error);
}

TEST_CASE("both routes give the same basis") {
  for (int n = 1; n <= 5; ++n) CHECK(geck_rouquier_basis(n, GrMethod::LinearSolve) == geck_rouquier_basis(n));
}

TEST_CASE("gamma_expand") {
  CHECK(gamma_expand(gr_element(4, P({2}))) == std::map<fhq::combinat::Partition, Laurent>{{P({2}), 1}});
  CHECK(gamma_expand(HeckeElem(4)).empty());
  const auto g = gr_element(4, P({1}));
  const std::map<fhq::combinat::Partition, Laurent> expected{
      {P({1, 1}), Q + qp(-1)}, {P({2}), Q + 1 + qp(-1)}, {P({1}), 3 * (Q - 1)}, {P({}), 6 * Q}};
  CHECK(gamma_expand(g * g) == expected);
  CHECK_THROWS_AS(gamma_expand(HeckeElem::generator(3, 1)), fhq::Error);
  // n = 3: Gamma_(1,1) does not exist and drops out
  const auto g3 = gamma1_h3();
  const std::map<fhq::combinat::Partition, Laurent> small{
      {P({2}), Q + 1 + qp(-1)}, {P({1}), 2 * (Q - 1)}, {P({}), 3 * Q}};
  CHECK(gamma_expand(g3 * g3) == small);
}

TEST_CASE("specialize_q1") {
  const auto g2 = gr_element(3, P({2}));
  GroupAlgebraElem expected{{cyc(3, "(1 2 3)"), 1}, {cyc(3, "(1 3 2)"), 1}};
  CHECK(specialize_q1(g2) == expected);
  CHECK(specialize_q1(HeckeElem::identity(3)) == GroupAlgebraElem{{Permutation(3), 1}});
  const auto g = gr_element(4, P({1}));
  GroupAlgebraElem x2;
  for (auto [mu, c] : std::vector<std::pair<fhq::combinat::Partition, int>>{{P({1, 1}), 2}, {P({2}), 3}, {P({}), 6}})
    for (const auto& [w, k] : class_sum(4, mu)) x2[w] += c * k;
  CHECK(specialize_q1(g * g) == x2);
}

TEST_CASE("ev_n") {
  CHECK(ev_n(fhq::symfunc::SymFuncElem(1), 3) == HeckeElem::identity(3));
  CHECK(ev_n(fhq::symfunc::SymFuncElem::elementary(1), 3) == gamma1_h3());
  for (int n = 2; n <= 5; ++n)
    for (int r = 0; 2 * r <= n; ++r) {
      HeckeElem sum(n);
      for (const auto& mu : fhq::combinat::partitions_of(r)) sum += gr_element(n, mu);
      CHECK(ev_n(fhq::symfunc::SymFuncElem::elementary(r), n) == sum);
    }
}

TEST_CASE("q-character table") {
  // n = 2: trivial T_1 -> q, sign T_1 -> -1
  CHECK(character_value(P({2}), P({2})) == Q);
  CHECK(character_value(P({1, 1}), P({2})) == -1);
  CHECK(character_value(P({2}), P({1, 1})) == 1);
  // at q = 1 the values are the classical characters
  CHECK(character_value(P({2, 1}), P({3})).at_one() == -1);
  CHECK(character_value(P({2, 1}), P({2, 1})).at_one() == 0);
  CHECK(character_value(P({2, 1}), P({1, 1, 1})) == 2);
  const auto table = character_table(4);
  CHECK(table.shapes.size() == 5);
  CHECK(full_cycle_type(5, P({2})) == P({3, 1, 1}));
}

TEST_CASE("class products via characters agree with multiplication") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& mu : {P({1}), P({2})})
      for (const auto& nu : {P({1}), P({1, 1})}) {
        if (mu.size() + mu.length() > n || nu.size() + nu.length() > n) continue;
        const auto direct = gamma_expand(gr_element(n, mu) * gr_element(n, nu));
        CHECK(class_product_via_characters(n, mu, nu) == direct);
      }
}

}
