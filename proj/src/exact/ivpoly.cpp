#include "fhq/exact/ivpoly.hpp"

#include <algorithm>
#include <set>

#include "fhq/error.hpp"

namespace fhq::exact {

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer r;
  Integer nn(n);
  mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

IvPoly::IvPoly(const Laurent& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

IvPoly IvPoly::binomial_term(const Laurent& c, int r) {
  IvPoly p;
  if (!c.is_zero()) p.terms_.emplace(r, c);
  return p;
}

Laurent IvPoly::coefficient(int r) const {
  auto it = terms_.find(r);
  return it == terms_.end() ? Laurent() : it->second;
}

Laurent IvPoly::evaluate(long n) const {
  Laurent sum;
  for (const auto& [r, c] : terms_) {
    Integer b = binomial(n, r);
    if (b != 0) sum += c * Laurent(b);
  }
  return sum;
}

IvPoly IvPoly::at_q_one() const {
  IvPoly out;
  for (const auto& [r, c] : terms_) out += binomial_term(Laurent(c.at_one()), r);
  return out;
}

std::string IvPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [r, c] : terms_) {
    if (!out.empty()) out += " + ";
    bool single = c.terms().size() == 1;
    std::string cs = c.to_string();
    if (r == 0) {
      out += single ? cs : "(" + cs + ")";
      continue;
    }
    if (cs != "1") out += (single ? cs : "(" + cs + ")") + "*";
    out += "binom(t," + std::to_string(r) + ")";
  }
  return out;
}

IvPoly& IvPoly::operator+=(const IvPoly& other) {
  for (const auto& [r, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(r, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

IvPoly& IvPoly::operator-=(const IvPoly& other) { return *this += -other; }

IvPoly operator-(IvPoly a) {
  for (auto& [r, c] : a.terms_) c = -c;
  return a;
}

IvPoly operator*(const Laurent& c, IvPoly a) {
  if (c.is_zero()) return {};
  for (auto& [r, x] : a.terms_) x = c * x;
  return a;
}

// binomial(t,i) * binomial(t,j) = sum_k binomial(k,i) binomial(i,k-j) binomial(t,k)
IvPoly operator*(const IvPoly& a, const IvPoly& b) {
  IvPoly out;
  for (const auto& [i, ci] : a.terms_) {
    for (const auto& [j, cj] : b.terms_) {
      Laurent c = ci * cj;
      for (int k = std::max(i, j); k <= i + j; ++k) {
        Integer mult = binomial(k, i) * binomial(i, k - j);
        if (mult != 0) out += IvPoly::binomial_term(c * Laurent(mult), k);
      }
    }
  }
  return out;
}

IvPoly interpolate_consecutive(long n_min, std::span<const Laurent> values) {
  if (values.empty()) throw Error(ErrorKind::InvalidArgument, "interpolation needs at least one point");
  // Newton forward differences give p(t) = sum_r D^r p(n_min) * binomial(t - n_min, r).
  std::vector<Laurent> diff(values.begin(), values.end());
  std::vector<Laurent> leading;
  leading.reserve(values.size());
  for (std::size_t r = 0; r < values.size(); ++r) {
    leading.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  // Vandermonde: binomial(t - a, r) = sum_j binomial(-a, r - j) binomial(t, j).
  IvPoly out;
  for (std::size_t r = 0; r < leading.size(); ++r) {
    if (leading[r].is_zero()) continue;
    for (std::size_t j = 0; j <= r; ++j) {
      Integer shift = binomial(-n_min, static_cast<long>(r - j));
      if (shift != 0)
        out += IvPoly::binomial_term(leading[r] * Laurent(shift), static_cast<int>(j));
    }
  }
  return out;
}

IvPoly interpolate_binomial(std::vector<std::pair<long, Laurent>> points) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "interpolation needs at least one point");
  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].first == points[i - 1].first)
      throw Error(ErrorKind::InvalidArgument, "duplicate interpolation node " + std::to_string(points[i].first));

  bool consecutive = points.back().first - points.front().first ==
                     static_cast<long>(points.size()) - 1;
  if (consecutive) {
    std::vector<Laurent> values;
    for (auto& p : points) values.push_back(p.second);
    return interpolate_consecutive(points.front().first, values);
  }

  // Solve sum_r c_r binomial(n_i, r) = v_i over Q, one right-hand side per
  // power of q.
  std::set<int> exps;
  for (const auto& [n, v] : points)
    for (const auto& [e, c] : v.terms()) exps.insert(e);
  const std::size_t m = points.size();
  const std::vector<int> exponents(exps.begin(), exps.end());
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + exponents.size()));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < m; ++r) a[i][r] = binomial(points[i].first, static_cast<long>(r));
    for (std::size_t k = 0; k < exponents.size(); ++k)
      a[i][m + k] = points[i].second.coefficient(exponents[k]);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) throw Error(ErrorKind::InvalidArgument, "singular interpolation system");
    std::swap(a[piv], a[col]);
    mpq_class inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t j = col; j < a[i].size(); ++j) a[i][j] -= f * a[col][j];
    }
  }
  IvPoly out;
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Laurent::Term> terms;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
      mpq_class& x = a[r][m + k];
      x.canonicalize();
      if (x.get_den() != 1)
        throw Error(ErrorKind::NonIntegral, "binomial coefficient " + std::to_string(r) +
                                                " has non-integral value " + x.get_str());
      terms.emplace_back(exponents[k], x.get_num());
    }
    out += IvPoly::binomial_term(Laurent::from_terms(std::move(terms)), static_cast<int>(r));
  }
  return out;
}

}  // namespace fhq::exact
