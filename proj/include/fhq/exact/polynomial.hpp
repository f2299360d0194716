#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fhq/exact/laurent.hpp"

namespace fhq::exact {

// Dense polynomial in q over Z, ascending coefficients, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);
  IntPoly(long constant);  // NOLINT(google-explicit-constructor)

  // Drops the q^min_exponent factor: returns q^-min * x.
  static IntPoly from_laurent(const Laurent& x);
  Laurent to_laurent() const;

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& lead() const { return coeffs_.back(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  // Power of q dividing this polynomial (0 for the zero polynomial).
  int low_order() const;
  bool is_monomial() const;

  Integer content() const;
  IntPoly primitive_part() const;
  IntPoly divided_by(const Integer& d) const;  // exact integer division
  std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;
  IntPoly pseudo_remainder(const IntPoly& divisor) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Greatest common divisor with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Element of Q(q) kept as a reduced fraction of integer polynomials: the
// denominator is primitive with positive leading coefficient and shares no
// nonconstant factor with the numerator. Equality is structural.
class RationalFn {
 public:
  RationalFn() : num_(0), den_(1) {}
  RationalFn(long constant) : num_(constant), den_(1) {}  // NOLINT
  RationalFn(const Laurent& x);  // NOLINT(google-explicit-constructor)
  RationalFn(IntPoly numerator, IntPoly denominator);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // Defined when the denominator is a power of q.
  std::optional<Laurent> to_laurent() const;
  std::string to_string() const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(RationalFn a);
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RationalFn& operator+=(const RationalFn& b) { return *this = *this + b; }
  RationalFn& operator-=(const RationalFn& b) { return *this = *this - b; }
  RationalFn& operator*=(const RationalFn& b) { return *this = *this * b; }

 private:
  void normalize();
  IntPoly num_;
  IntPoly den_;
};

}  // namespace fhq::exact
