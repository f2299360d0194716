#include "fhq/exact/polynomial.hpp"

#include <algorithm>

#include "fhq/error.hpp"

namespace fhq::exact {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::from_laurent(const Laurent& x) {
  if (x.is_zero()) return {};
  int lo = x.min_exponent();
  std::vector<Integer> c(static_cast<std::size_t>(x.max_exponent() - lo + 1));
  for (const auto& [e, v] : x.terms()) c[e - lo] = v;
  return IntPoly(std::move(c));
}

Laurent IntPoly::to_laurent() const {
  std::vector<Laurent::Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) terms.emplace_back(static_cast<int>(i), coeffs_[i]);
  return Laurent::from_terms(std::move(terms));
}

int IntPoly::low_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return 0;
}

bool IntPoly::is_monomial() const {
  if (coeffs_.empty()) return false;
  return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }) == 1;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::divided_by(const Integer& d) const {
  std::vector<Integer> c = coeffs_;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (lead() < 0) g = -g;
  return divided_by(g);
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  if (is_zero()) return IntPoly();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> quot(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  const Integer& lc = divisor.lead();
  for (int i = degree(); i >= divisor.degree(); --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Integer f;
    mpz_divexact(f.get_mpz_t(), rem[i].get_mpz_t(), lc.get_mpz_t());
    int shift = i - divisor.degree();
    quot[shift] = f;
    for (int j = 0; j <= divisor.degree(); ++j) rem[shift + j] -= f * divisor.coeffs_[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

IntPoly IntPoly::pseudo_remainder(const IntPoly& divisor) const {
  std::vector<Integer> rem = coeffs_;
  int dd = divisor.degree();
  const Integer& lc = divisor.lead();
  for (int i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    Integer f = rem[i];
    for (auto& r : rem) r *= lc;
    int shift = i - dd;
    for (int j = 0; j <= dd; ++j) rem[shift + j] -= f * divisor.coeffs_[j];
  }
  IntPoly out(std::move(rem));
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) {
    if (b.is_zero()) return {};
    return b.lead() < 0 ? -b : b;
  }
  if (b.is_zero()) return gcd(b, a);
  Integer cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = x.pseudo_remainder(y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part() * IntPoly(std::vector<Integer>{cg});
}

RationalFn::RationalFn(const Laurent& x) : den_(1) {
  if (x.is_zero()) {
    num_ = IntPoly();
    return;
  }
  num_ = IntPoly::from_laurent(x);
  int lo = x.min_exponent();
  if (lo > 0) {
    std::vector<Integer> c(static_cast<std::size_t>(lo));
    c.insert(c.end(), num_.coefficients().begin(), num_.coefficients().end());
    num_ = IntPoly(std::move(c));
  } else if (lo < 0) {
    std::vector<Integer> d(static_cast<std::size_t>(-lo) + 1);
    d.back() = 1;
    den_ = IntPoly(std::move(d));
  }
}

RationalFn::RationalFn(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = gcd(num_, den_);
  if (!(g == IntPoly(1))) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  // After the gcd the contents are coprime, so only the sign moves; an
  // integer content left on the denominator is a genuine rational constant.
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::optional<Laurent> RationalFn::to_laurent() const {
  if (num_.is_zero()) return Laurent();
  if (!den_.is_monomial() || den_.lead() != 1) return std::nullopt;
  return num_.to_laurent().shifted(-den_.low_order());
}

std::string RationalFn::to_string() const {
  if (auto l = to_laurent()) return l->to_string();
  return "(" + num_.to_laurent().to_string() + ")/(" + den_.to_laurent().to_string() + ")";
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(RationalFn a) {
  a.num_ = -a.num_;
  return a;
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero rational function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace fhq::exact
