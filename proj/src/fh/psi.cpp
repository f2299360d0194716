#include "fhq/fh/psi.hpp"

#include <map>
#include <mutex>
#include <string>

#include "fhq/error.hpp"
#include "fhq/exact/linear.hpp"

namespace fhq::fh {

namespace {

FHqElem elementary_image(int r) {
  FHqElem out;
  for (const auto& mu : combinat::partitions_of(r)) out.add_term(mu, IvPoly(1));
  return out;
}

}  // namespace

FHqElem psi(const symfunc::EPolyElem& p, const StructureOptions& options) {
  FHqElem out;
  for (const auto& [nu, c] : p.terms()) {
    FHqElem term = FHqElem::basis(Partition(), c);
    for (int r : nu.parts()) term = fhq_mul(term, elementary_image(r), options);
    out += term;
  }
  return out;
}

FHqElem psi(const symfunc::SymFuncElem& f, const StructureOptions& options) {
  return psi(symfunc::m_to_e(f), options);
}

Laurent determinant(const std::vector<std::vector<Laurent>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Laurent(1);
  if (n == 1) return m[0][0];
  Laurent total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Laurent>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Laurent> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    Laurent term = m[0][j] * determinant(minor);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

NMatrix n_matrix(int k, const StructureOptions& options) {
  if (k > options.k_max)
    throw Error(ErrorKind::SizeGuard, "k = " + std::to_string(k) + " exceeds k_max " + std::to_string(options.k_max));
  NMatrix out;
  out.k = k;
  out.rows = combinat::partitions_of(k);
  out.columns = combinat::partitions_of(k);
  out.entries.assign(out.rows.size(), std::vector<Laurent>(out.columns.size()));
  for (std::size_t c = 0; c < out.columns.size(); ++c) {
    const FHqElem image = psi(symfunc::SymFuncElem::monomial(out.columns[c]), options);
    for (std::size_t r = 0; r < out.rows.size(); ++r) {
      const IvPoly entry = image.coefficient(out.rows[r]);
      if (!entry.is_constant())
        throw Error(ErrorKind::TDependentEntry, "N^(" + std::to_string(k) + ") entry (" + out.rows[r].to_string() +
                                                   ", " + out.columns[c].to_string() + ") = " + entry.to_string());
      out.entries[r][c] = entry.constant_value();
    }
  }
  out.determinant = determinant(out.entries);
  if (!out.determinant.is_unit())
    throw Error(ErrorKind::NonUnitDeterminant,
                "det N^(" + std::to_string(k) + ") = " + out.determinant.to_string() + " is not a unit");
  return out;
}

symfunc::SymFuncElem psi_inverse(const Partition& mu, const StructureOptions& options) {
  static std::mutex mutex;
  static std::map<Partition, symfunc::SymFuncElem> memo;
  if (options.use_cache) {
    std::lock_guard lock(mutex);
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;
  }
  const FHqElem target = FHqElem::basis(mu);
  FHqElem residual = target;
  symfunc::SymFuncElem f;
  for (int k = mu.size(); k >= 0; --k) {
    const FHqElem top = residual.layer(k);
    if (top.is_zero()) continue;
    const NMatrix n = n_matrix(k, options);
    exact::RationalMatrix m(n.entries.size());
    for (std::size_t r = 0; r < n.entries.size(); ++r)
      for (const auto& x : n.entries[r]) m[r].emplace_back(x);
    auto inverse = exact::invert(m);
    if (!inverse) throw Error(ErrorKind::NonUnitDeterminant, "N^(" + std::to_string(k) + ") is singular");
    symfunc::SymFuncElem g;
    for (std::size_t c = 0; c < n.columns.size(); ++c) {
      IvPoly d;
      for (std::size_t r = 0; r < n.rows.size(); ++r) {
        const auto& x = (*inverse)[c][r];
        if (x.is_zero()) continue;
        auto entry = x.to_laurent();
        if (!entry) throw Error(ErrorKind::NotLaurent, "inverse of N^(" + std::to_string(k) + ") has entry " + x.to_string());
        d += *entry * top.coefficient(n.rows[r]);
      }
      g.add_term(n.columns[c], d);
    }
    f += g;
    residual -= psi(g, options);
    if (!residual.layer(k).is_zero())
      throw Error(ErrorKind::NonzeroResidual, "layer " + std::to_string(k) + " survives in psi_inverse" + mu.to_string());
  }
  if (!residual.is_zero() || psi(f, options) != target)
    throw Error(ErrorKind::NonzeroResidual, "psi(psi_inverse" + mu.to_string() + ") differs from K" + mu.to_string());
  if (options.use_cache) {
    std::lock_guard lock(mutex);
    memo.emplace(mu, f);
  }
  return f;
}

}  // namespace fhq::fh
