#include "fhq/exact/linear.hpp"

#include <string>

#include "fhq/error.hpp"

namespace fhq::exact {

RationalMatrix solve_unique(std::vector<SparseRow> rows, std::size_t unknowns, std::size_t rhs_count) {
  // Pivot rows are normalised to 1 on their smallest column, so eliminating a
  // row only ever introduces entries to the right of the current column.
  std::map<std::size_t, SparseRow> pivots;
  for (auto& row : rows) {
    row.rhs.resize(rhs_count);
    auto it = row.entries.begin();
    while (it != row.entries.end()) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      RationalFn factor = it->second;
      std::size_t col = it->first;
      for (const auto& [c, v] : p->second.entries) {
        auto [slot, inserted] = row.entries.emplace(c, -(factor * v));
        if (!inserted) {
          slot->second -= factor * v;
          if (slot->second.is_zero()) row.entries.erase(slot);
        }
      }
      for (std::size_t k = 0; k < rhs_count; ++k) row.rhs[k] -= factor * p->second.rhs[k];
      it = row.entries.upper_bound(col);
    }
    if (row.entries.empty()) {
      for (const auto& r : row.rhs)
        if (!r.is_zero()) throw Error(ErrorKind::NonzeroResidual, "inconsistent linear system");
      continue;
    }
    std::size_t lead = row.entries.begin()->first;
    RationalFn inv = RationalFn(1) / row.entries.begin()->second;
    for (auto& [c, v] : row.entries) v *= inv;
    for (auto& r : row.rhs) r *= inv;
    pivots.emplace(lead, std::move(row));
  }
  if (pivots.size() != unknowns)
    throw Error(ErrorKind::Underdetermined, "rank " + std::to_string(pivots.size()) + " of " +
                                                std::to_string(unknowns) + " unknowns");

  RationalMatrix x(unknowns, std::vector<RationalFn>(rhs_count));
  for (auto p = pivots.rbegin(); p != pivots.rend(); ++p) {
    std::vector<RationalFn> value = p->second.rhs;
    for (const auto& [c, v] : p->second.entries) {
      if (c == p->first) continue;
      for (std::size_t k = 0; k < rhs_count; ++k)
        if (!x[c][k].is_zero()) value[k] -= v * x[c][k];
    }
    x[p->first] = std::move(value);
  }
  return x;
}

std::optional<RationalMatrix> invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<RationalFn>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    RationalFn s = RationalFn(1) / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      RationalFn f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!m[col][j].is_zero()) m[i][j] -= f * m[col][j];
        if (!inv[col][j].is_zero()) inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<QMatrix> invert(QMatrix m) {
  const std::size_t n = m.size();
  QMatrix inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    mpq_class s = 1 / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      mpq_class f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (m[col][j] != 0) m[i][j] -= f * m[col][j];
        if (inv[col][j] != 0) inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<Laurent> reconstruct_laurent(int lo, int hi, std::vector<mpq_class> points,
                                           std::vector<mpq_class> values) {
  for (auto& x : points) x.canonicalize();
  for (auto& x : values) x.canonicalize();
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  if (points.size() < count || values.size() != points.size())
    throw Error(ErrorKind::InvalidArgument, "too few points to reconstruct a Laurent polynomial");
  // p(x) = x^-lo * value is a polynomial of degree < count.
  std::vector<mpq_class> y(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    mpq_class shift = Laurent::q_power(-lo).evaluate(points[k]);
    y[k] = values[k] * shift;
  }
  std::vector<mpq_class> newton(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(count));
  for (std::size_t level = 1; level < count; ++level)
    for (std::size_t k = count - 1; k >= level; --k)
      newton[k] = (newton[k] - newton[k - 1]) / (points[k] - points[k - level]);
  auto eval = [&](const mpq_class& x) {
    mpq_class acc = newton[count - 1];
    for (std::size_t k = count - 1; k-- > 0;) acc = acc * (x - points[k]) + newton[k];
    return acc;
  };
  for (std::size_t k = count; k < points.size(); ++k)
    if (eval(points[k]) != y[k]) return std::nullopt;
  // Expand the Newton form into monomial coefficients.
  std::vector<mpq_class> poly{newton[count - 1]};
  for (std::size_t k = count - 1; k-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * points[k];
    }
    next[0] += newton[k];
    poly = std::move(next);
  }
  std::vector<Laurent::Term> terms;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    poly[i].canonicalize();
    if (poly[i] == 0) continue;
    if (poly[i].get_den() != 1) return std::nullopt;
    terms.emplace_back(lo + static_cast<int>(i), poly[i].get_num());
  }
  return Laurent::from_terms(std::move(terms));
}

}  // namespace fhq::exact
