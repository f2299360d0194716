#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "fhq/exact/polynomial.hpp"

namespace fhq::exact {

using RationalMatrix = std::vector<std::vector<RationalFn>>;

struct SparseRow {
  std::map<std::size_t, RationalFn> entries;
  std::vector<RationalFn> rhs;
};

// Solves A x = B for a system whose solution must be unique; B may have
// several columns (one per rhs entry). Returns x[unknown][rhs column].
// Throws Underdetermined when the rank falls short of `unknowns` and
// NonzeroResidual when the system is inconsistent.
RationalMatrix solve_unique(std::vector<SparseRow> rows, std::size_t unknowns, std::size_t rhs_count);

// Gauss-Jordan inverse; nullopt for singular input.
std::optional<RationalMatrix> invert(RationalMatrix m);

using QMatrix = std::vector<std::vector<mpq_class>>;
std::optional<QMatrix> invert(QMatrix m);

// Laurent polynomial with exponents in [lo, hi] through the given values at
// distinct nonzero rational points. Needs at least hi - lo + 1 points; the
// surplus points are checked. nullopt when the fit is not an integral
// Laurent polynomial or misses a surplus point.
std::optional<Laurent> reconstruct_laurent(int lo, int hi, std::vector<mpq_class> points,
                                           std::vector<mpq_class> values);

}  // namespace fhq::exact
