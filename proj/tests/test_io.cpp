#include <doctest.h>

#include <filesystem>

#include "fhq/error.hpp"
#include "fhq/fh/fhq_algebra.hpp"
#include "fhq/hecke/geck_rouquier.hpp"
#include "fhq/json_io.hpp"
#include "fhq/store.hpp"
#include "helpers.hpp"

using namespace testing;
using namespace fhq;

TEST_SUITE("io") {

TEST_CASE("json round trips") {
  const Laurent x = 3 * qp(-2) - Q;
  CHECK(io::to_json(x) == io::json{{"-2", "3"}, {"1", "-1"}});
  CHECK(io::laurent_from_json(io::to_json(x)) == x);
  const Laurent big = Laurent(exact::Integer("123456789012345678901234567890")) * qp(4);
  CHECK(io::laurent_from_json(io::to_json(big)) == big);
  const IvPoly p = binom(2, Q) - IvPoly(Q - 1);
  CHECK(io::ivpoly_from_json(io::to_json(p)) == p);
  CHECK(io::partition_from_json(io::to_json(P({3, 1}))) == P({3, 1}));
  const auto g = hecke::gr_element(4, P({1}));
  CHECK(io::hecke_from_json(io::to_json(g)) == g);
  const auto f = symfunc::SymFuncElem::monomial(P({2, 1}), p) + symfunc::SymFuncElem::monomial(P({1}));
  CHECK(io::symfunc_from_json(io::to_json(f)) == f);
  const fh::Coefficients c = fh::structure_constants(P({1}), P({1}));
  CHECK(io::ivpoly_map_from_json(io::to_json(c, "phi"), "phi") == c);
  CHECK(io::permutation_from_json(io::json::array({2, 3, 1})) == perm::Permutation::from_cycles(3, "(1 2 3)"));
  CHECK_THROWS(io::laurent_from_json(io::json{{"x", "1"}}));
}

TEST_CASE("serialization is deterministic") {
  const auto g = hecke::gr_element(4, P({2}));
  CHECK(io::to_json(g).dump() == io::to_json(hecke::gr_element(4, P({2}))).dump());
}

TEST_CASE("store") {
  const auto dir = std::filesystem::temp_directory_path() / ("fhq-store-test-" + std::to_string(kSeed));
  std::filesystem::remove_all(dir);
  Store store(dir);
  CHECK(!store.load("gamma", "k"));
  store.save("gamma", "k", io::json{{"a", 1}});
  REQUIRE(store.load("gamma", "k"));
  CHECK(*store.load("gamma", "k") == io::json{{"a", 1}});
  store.save("phi", "mu1_nu1", io::json::array());
  CHECK(store.list().size() == 2);
  CHECK(store.clear() == 2);
  CHECK(store.list().empty());
  std::filesystem::remove_all(dir);
}

TEST_CASE("gamma elements persist through the default store") {
  const auto dir = std::filesystem::temp_directory_path() / ("fhq-store-gamma-" + std::to_string(kSeed));
  std::filesystem::remove_all(dir);
  auto store = std::make_shared<Store>(dir);
  set_default_store(store);
  const auto g = hecke::gr_element(5, P({2, 1}));
  set_default_store(nullptr);
  REQUIRE(store->load("gamma", "n5_mu2,1"));
  CHECK(io::hecke_from_json(*store->load("gamma", "n5_mu2,1")) == g);
  std::filesystem::remove_all(dir);
}

}
