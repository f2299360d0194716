#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fhq::exact {

using Integer = mpz_class;

// Element of Z[q, q^-1], stored as exponent-sorted terms with no zero
// coefficients. Values are immutable in practice; the compound operators
// exist for accumulation loops.
class Laurent {
 public:
  using Term = std::pair<int, Integer>;

  Laurent() = default;
  Laurent(long constant);  // NOLINT(google-explicit-constructor)
  Laurent(const Integer& constant);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const Integer& coefficient, int exponent);
  static Laurent q_power(int exponent) { return monomial(1, exponent); }
  // Accepts unsorted terms with repeats; combines them and drops zeros.
  static Laurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  Integer coefficient(int exponent) const;
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  // +-q^m
  bool is_unit() const { return terms_.size() == 1 && abs(terms_[0].second) == 1; }

  // Specialisation q -> 1.
  Integer at_one() const;
  // Value at a nonzero rational q.
  mpq_class evaluate(const mpq_class& q) const;
  // Multiplication by q^k.
  Laurent shifted(int k) const;
  // Quotient when this is divisible by `divisor` in Z[q, q^-1].
  std::optional<Laurent> divide_exact(const Laurent& divisor) const;

  std::string to_string() const;

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other) { return *this = *this * other; }
  // Fused this += a * b; the hot loop of Hecke multiplication.
  void add_product(const Laurent& a, const Laurent& b);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator-(Laurent a);
  friend bool operator==(const Laurent& a, const Laurent& b);
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  // Arbitrary total order, used only to key ordered containers.
  friend bool operator<(const Laurent& a, const Laurent& b);

 private:
  explicit Laurent(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

// [m]_q = 1 + q + ... + q^(m-1) for m >= 0, and -q^-1 - ... - q^m for m < 0.
Laurent qnumber(long m);

}  // namespace fhq::exact
