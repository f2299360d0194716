#include "fhq/exact/laurent.hpp"

#include <cstdlib>

#include <algorithm>
#include <sstream>

#include "fhq/exact/polynomial.hpp"

namespace fhq::exact {

Laurent::Laurent(long constant) {
  if (constant != 0) terms_.emplace_back(0, Integer(constant));
}

Laurent::Laurent(const Integer& constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

Laurent Laurent::monomial(const Integer& coefficient, int exponent) {
  if (coefficient == 0) return {};
  return Laurent(std::vector<Term>{{exponent, coefficient}});
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  for (auto& [e, c] : terms) {
    if (!out.empty() && out.back().first == e) {
      out.back().second += c;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.emplace_back(e, std::move(c));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return Laurent(std::move(out));
}

Integer Laurent::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

mpq_class Laurent::evaluate(const mpq_class& q) const {
  mpq_class value = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpq_class power = 1;
    mpz_pow_ui(power.get_num_mpz_t(), q.get_num_mpz_t(), std::abs(it->first));
    mpz_pow_ui(power.get_den_mpz_t(), q.get_den_mpz_t(), std::abs(it->first));
    if (it->first < 0) power = 1 / power;
    value += power * it->second;
  }
  return value;
}

Integer Laurent::at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Laurent Laurent::shifted(int k) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.first += k;
  return Laurent(std::move(out));
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return Laurent();
  IntPoly num = IntPoly::from_laurent(*this);
  IntPoly den = IntPoly::from_laurent(divisor);
  auto quotient = num.divide_exact(den);
  if (!quotient) return std::nullopt;
  return quotient->to_laurent().shifted(min_exponent() - divisor.min_exponent());
}

namespace {

void merge_into(std::vector<Laurent::Term>& out, const std::vector<Laurent::Term>& a,
                const std::vector<Laurent::Term>& b, bool subtract) {
  out.clear();
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? Integer(-j->second) : j->second);
      ++j;
    } else {
      Integer c = subtract ? Integer(i->second - j->second) : Integer(i->second + j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
}

}  // namespace

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  std::vector<Term> out;
  merge_into(out, terms_, other.terms_, false);
  terms_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  if (other.is_zero()) return *this;
  std::vector<Term> out;
  merge_into(out, terms_, other.terms_, true);
  terms_ = std::move(out);
  return *this;
}

void Laurent::add_product(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    Laurent m = monomial(a.terms_[0].second * b.terms_[0].second,
                         a.terms_[0].first + b.terms_[0].first);
    *this += m;
    return;
  }
  *this += a * b;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    std::vector<Laurent::Term> out = a.terms_;
    for (auto& t : out) {
      t.first += b.terms_[0].first;
      t.second *= b.terms_[0].second;
    }
    return Laurent(std::move(out));
  }
  if (a.terms_.size() == 1) return b * a;
  // Dense accumulation over the exponent window.
  int lo = a.min_exponent() + b.min_exponent();
  int hi = a.max_exponent() + b.max_exponent();
  std::vector<Integer> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb - lo] += ca * cb;
  std::vector<Laurent::Term> out;
  for (int e = lo; e <= hi; ++e)
    if (acc[e - lo] != 0) out.emplace_back(e, std::move(acc[e - lo]));
  return Laurent(std::move(out));
}

Laurent operator-(Laurent a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

bool operator==(const Laurent& a, const Laurent& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second)
      return false;
  return true;
}

bool operator<(const Laurent& a, const Laurent& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first;
    if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "q";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

Laurent qnumber(long m) {
  std::vector<Laurent::Term> terms;
  if (m >= 0) {
    for (long e = 0; e < m; ++e) terms.emplace_back(static_cast<int>(e), Integer(1));
  } else {
    for (long e = m; e <= -1; ++e) terms.emplace_back(static_cast<int>(e), Integer(-1));
  }
  return Laurent::from_terms(std::move(terms));
}

}  // namespace fhq::exact
