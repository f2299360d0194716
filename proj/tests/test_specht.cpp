#include <doctest.h>

#include "fhq/combinat/diagram.hpp"
#include "fhq/error.hpp"
#include "fhq/hecke/geck_rouquier.hpp"
#include "fhq/specht/specht.hpp"
#include "helpers.hpp"

using namespace testing;
using namespace fhq::specht;

TEST_SUITE("specht") {

TEST_CASE("seminormal representations") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : fhq::combinat::partitions_of(n)) {
      const auto rep = seminormal_rep(lambda);
      CHECK(rep.dimension() == fhq::combinat::count_standard_tableaux(lambda));
      CHECK(satisfies_relations(rep));
      CHECK(jm_triangular_with_contents(rep));
    }
  CHECK_THROWS_AS(seminormal_rep(P({5, 4}), 8), fhq::Error);
  // one-dimensional cases: T_i acts by q on the trivial and -1 on the sign module
  const auto trivial = seminormal_rep(P({3})), sign = seminormal_rep(P({1, 1, 1}));
  CHECK(trivial.generators[0][0][0] == RationalFn(Q));
  CHECK(sign.generators[1][0][0] == RationalFn(-1));
}

TEST_CASE("represent is a homomorphism") {
  const auto rep = seminormal_rep(P({2, 1}));
  const auto a = fhq::hecke::HeckeElem::word(3, {1, 2}), b = fhq::hecke::HeckeElem::word(3, {2, 1, 2});
  CHECK(represent(rep, a * b) == multiply(represent(rep, a), represent(rep, b)));
  CHECK(represent(rep, fhq::hecke::HeckeElem::identity(3)) == identity_matrix(2));
  CHECK(scalar_of(scale(RationalFn(Q), identity_matrix(3))) == RationalFn(Q));
  CHECK(!scalar_of(represent(rep, fhq::hecke::HeckeElem::generator(3, 1))));
}

TEST_CASE("central characters") {
  CHECK(central_character(P({2, 1}), P({})) == 1);
  // Gamma_(1) = T_1 in H_2 acts by q on S^(2) and by -1 on S^(1,1)
  CHECK(central_character_by_representation(P({2}), P({1})) == Q);
  CHECK(central_character_by_representation(P({1, 1}), P({1})) == -1);
  CHECK(central_character(P({2}), P({1})) == Q);
  CHECK(central_character(P({1, 1}), P({1})) == -1);
  // evaluation at the unscaled q-contents
  CHECK(central_character_at_q_contents(P({2}), P({1})) == 1);
  CHECK(central_character_at_q_contents(P({1, 1}), P({1})) == -qp(-1));
  CHECK(jm_eigenvalues(P({1, 1})) == std::vector<Laurent>{-1, 0});
  for (const auto& lambda : fhq::combinat::partitions_of(3)) CHECK(character_table(3, P({})).at(lambda) == 1);
  const auto t2 = character_table(2, P({1}));
  CHECK(t2.at(P({2})) == Q);
  CHECK(t2.at(P({1, 1})) == -1);
}

TEST_CASE("two routes agree") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : fhq::combinat::partitions_of(n))
      for (const auto& mu : fhq::combinat::partitions_up_to(n))
        if (mu.size() + mu.length() <= n)
          CHECK(central_character(lambda, mu) == central_character_by_representation(lambda, mu));
}

TEST_CASE("blocks") {
  using Blocks = std::vector<std::vector<fhq::combinat::Partition>>;
  CHECK(blocks(3, 2).blocks == Blocks{{P({3}), P({1, 1, 1})}, {P({2, 1})}});
  CHECK(blocks(2, 2).blocks == Blocks{{P({2}), P({1, 1})}});
  CHECK(blocks(3, 4).blocks.size() == 3);
  CHECK(blocks(4, std::nullopt).blocks.size() == 5);
  std::size_t total = 0;
  for (const auto& b : blocks(7, 3).blocks) total += b.size();
  CHECK(total == 15);
}

}
