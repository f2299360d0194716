#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fhq/exact/laurent.hpp"

namespace fhq::exact {

// binomial(n, k) for any integer n and k >= 0.
Integer binomial(long n, long k);

// Element of R[q, q^-1]: sum over r of c_r(q) * binomial(t, r). Coefficients
// in the binomial basis are Laurent polynomials, so every value at an integer
// t lies in Z[q, q^-1] without further checks.
class IvPoly {
 public:
  IvPoly() = default;
  IvPoly(const Laurent& constant);  // NOLINT(google-explicit-constructor)
  IvPoly(long constant) : IvPoly(Laurent(constant)) {}  // NOLINT

  // c * binomial(t, r)
  static IvPoly binomial_term(const Laurent& c, int r);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Laurent>& terms() const { return terms_; }
  Laurent coefficient(int r) const;
  // Degree in t; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  bool is_constant() const { return degree() <= 0; }
  // Constant term as a Laurent polynomial; meaningful when is_constant().
  Laurent constant_value() const { return coefficient(0); }

  Laurent evaluate(long n) const;
  IvPoly at_q_one() const;
  std::string to_string() const;

  IvPoly& operator+=(const IvPoly& other);
  IvPoly& operator-=(const IvPoly& other);
  IvPoly& operator*=(const IvPoly& other) { return *this = *this * other; }

  friend IvPoly operator+(IvPoly a, const IvPoly& b) { return a += b; }
  friend IvPoly operator-(IvPoly a, const IvPoly& b) { return a -= b; }
  friend IvPoly operator-(IvPoly a);
  friend IvPoly operator*(const IvPoly& a, const IvPoly& b);
  friend IvPoly operator*(const Laurent& c, IvPoly a);
  friend bool operator==(const IvPoly& a, const IvPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const IvPoly& a, const IvPoly& b) { return !(a == b); }

 private:
  std::map<int, Laurent> terms_;
};

// Interpolation through values at n_min, n_min+1, ...; uses forward
// differences, so no division happens.
IvPoly interpolate_consecutive(long n_min, std::span<const Laurent> values);

// Unique polynomial of degree < points.size() through the given points.
// Non-consecutive nodes are handled by an exact rational solve; a fit that
// leaves the binomial lattice raises NonIntegral.
IvPoly interpolate_binomial(std::vector<std::pair<long, Laurent>> points);

}  // namespace fhq::exact
