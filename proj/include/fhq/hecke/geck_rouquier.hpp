#pragma once

#include <map>

#include "fhq/combinat/partition.hpp"
#include "fhq/hecke/hecke_elem.hpp"

namespace fhq::hecke {

using combinat::Partition;

enum class GrMethod {
  // Solve the centrality equations plus the normalisation on minimal-length
  // class elements over Q(q), then verify every coefficient is Laurent.
  LinearSolve,
  // Propagate coefficients from minimal-length elements using
  //   a_w = a_{w'}                            (w' = s w s of equal length)
  //   q a_w = a_{s w s} + (q - 1) a_{s w}     (l(s w s) = l(w) - 2),
  // which the centrality equations force. Checked for centrality.
  Recursive,
};

inline constexpr int kDefaultHeckeGuard = 7;

// Gamma_mu in H_n(q); zero when |mu| + l(mu) > n. Guarded by max_n.
HeckeElem gr_element(int n, const Partition& mu, GrMethod method = GrMethod::Recursive,
                     int max_n = kDefaultHeckeGuard);

// Every Gamma_mu of H_n(q), keyed by mu. Guarded by max_n.
std::map<Partition, HeckeElem> geck_rouquier_basis(int n, GrMethod method = GrMethod::Recursive,
                                                   int max_n = kDefaultHeckeGuard);

// Coordinates of a central element in the Geck-Rouquier basis, read off
// minimal-length class representatives and verified by reconstruction.
std::map<Partition, Laurent> gamma_expand(const HeckeElem& z);

// sum_mu c_mu Gamma_mu in H_n(q).
HeckeElem gamma_combination(int n, const std::map<Partition, Laurent>& coefficients);

}  // namespace fhq::hecke
