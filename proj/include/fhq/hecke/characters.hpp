#pragma once

#include <map>
#include <vector>

#include "fhq/combinat/partition.hpp"
#include "fhq/exact/laurent.hpp"

namespace fhq::hecke {

using combinat::Partition;
using exact::Laurent;

// chi^lambda(T_w) for w a minimal-length element of full cycle type rho,
// summed over broken border strip tableaux: a broken strip with r rows,
// c columns and k components weighs (-1)^(r-k) q^(c-k) (q-1)^(k-1).
Laurent character_value(const Partition& lambda, const Partition& cycle_type);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> shapes;   // partitions of n
  std::vector<Partition> classes;  // reduced cycle types, matching index of full types
  std::vector<std::vector<Laurent>> values;  // values[shape][class]
};

CharacterTable character_table(int n);

// Full cycle type in S_n of a reduced cycle type.
Partition full_cycle_type(int n, const Partition& reduced);

// Coordinates of Gamma_mu Gamma_nu on the Gamma_lambda of H_n(q), from
//   phi = q^(|mu|+|nu|-|lambda|) sum_sigma chi^sigma(T_lambda) s_sigma Y[mu][sigma] Y[nu][sigma]
// with Y the inverse character table and s_sigma = 1 / Y[empty][sigma] the
// Schur elements. Evaluated at rational q and reconstructed exactly inside
// the exponent window [|mu|+|nu| - 2N, N], N = n(n-1)/2, that bounds the
// T_{w_lambda} coefficient of the product.
std::map<Partition, Laurent> class_product_via_characters(int n, const Partition& mu, const Partition& nu);

}  // namespace fhq::hecke
