#pragma once

#include <vector>

#include "fhq/fh/fhq_algebra.hpp"
#include "fhq/symfunc/symfunc.hpp"

namespace fhq::fh {

// e_r -> sum_{mu |- r} K_mu, extended multiplicatively.
FHqElem psi(const symfunc::EPolyElem& p, const StructureOptions& options = {});
FHqElem psi(const symfunc::SymFuncElem& f, const StructureOptions& options = {});

struct NMatrix {
  int k = 0;
  std::vector<Partition> rows;     // nu: coefficient of K_nu
  std::vector<Partition> columns;  // mu: image of m_mu
  std::vector<std::vector<Laurent>> entries;  // entries[row][column]
  Laurent determinant;
};

// Top-layer coefficients of psi(m_mu), |mu| = k. Throws TDependentEntry or
// NonUnitDeterminant.
NMatrix n_matrix(int k, const StructureOptions& options = {});

// Laplace expansion along the first row.
Laurent determinant(const std::vector<std::vector<Laurent>>& m);

// f_mu with psi(f_mu) = K_mu, by downward induction on the filtration degree.
// Throws NonzeroResidual when the round trip fails.
symfunc::SymFuncElem psi_inverse(const Partition& mu, const StructureOptions& options = {});

}  // namespace fhq::fh
