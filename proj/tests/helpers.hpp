#pragma once

#include <random>

#include "fhq/combinat/partition.hpp"
#include "fhq/exact/ivpoly.hpp"

namespace testing {

using fhq::combinat::Partition;
using fhq::exact::IvPoly;
using fhq::exact::Laurent;

// Seed for every randomized check in the unit tests.
inline constexpr std::uint64_t kSeed = 20261019;

inline Laurent qp(int k) { return Laurent::q_power(k); }
inline const Laurent Q = qp(1);
inline Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
inline IvPoly binom(int r, const Laurent& c = Laurent(1)) { return IvPoly::binomial_term(c, r); }

inline Laurent random_laurent(std::mt19937_64& rng, int span = 3) {
  std::uniform_int_distribution<int> coeff(-4, 4), exponent(-span, span), count(0, 4);
  std::vector<Laurent::Term> terms;
  for (int k = count(rng); k > 0; --k) terms.emplace_back(exponent(rng), coeff(rng));
  return Laurent::from_terms(std::move(terms));
}

}  // namespace testing
