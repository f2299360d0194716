#include <doctest.h>

#include "fhq/verify.hpp"
#include "helpers.hpp"

TEST_SUITE("properties") {

TEST_CASE("property suite under a fixed seed") {
  fhq::verify::Options options;
  options.seed = testing::kSeed;
  options.max_n = 5;
  for (const auto& check : fhq::verify::property_checks()) {
    const auto outcome = fhq::verify::run(check.id, options);
    CHECK_MESSAGE(outcome.passed, check.id, ": ", outcome.detail);
  }
}

TEST_CASE("a different seed passes too") {
  fhq::verify::Options options;
  options.seed = 7;
  options.max_n = 4;
  for (const auto* id : {"hecke.gamma_round_trip", "symfunc.round_trip", "symfunc.evaluate", "fhq.theta"}) {
    const auto outcome = fhq::verify::run(id, options);
    CHECK_MESSAGE(outcome.passed, id, ": ", outcome.detail);
  }
}

TEST_CASE("unknown ids are rejected") { CHECK_THROWS(fhq::verify::run("no-such-check")); }

}
