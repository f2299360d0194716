#pragma once

#include <map>
#include <string>
#include <vector>

#include "fhq/combinat/partition.hpp"
#include "fhq/exact/ivpoly.hpp"

namespace fhq::symfunc {

using combinat::Partition;
using exact::IvPoly;
using exact::Laurent;

// Element of R[q, q^-1] (x) Lambda in the monomial basis.
class SymFuncElem {
 public:
  using Terms = std::map<Partition, IvPoly>;

  SymFuncElem() = default;
  SymFuncElem(const IvPoly& constant);  // NOLINT(google-explicit-constructor)
  SymFuncElem(long constant) : SymFuncElem(IvPoly(constant)) {}  // NOLINT

  // c * m_lambda
  static SymFuncElem monomial(const Partition& lambda, const IvPoly& c = IvPoly(1));
  // e_r = m_(1^r)
  static SymFuncElem elementary(int r);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  IvPoly coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const IvPoly& c);
  // Largest |lambda| in the support; -1 for zero.
  int degree() const;
  // Longest lambda in the support: restriction to this many variables is
  // injective on the span of the support.
  int variables_needed() const;
  // Part of degree exactly d.
  SymFuncElem homogeneous_part(int d) const;
  std::string to_string() const;

  SymFuncElem& operator+=(const SymFuncElem& other);
  SymFuncElem& operator-=(const SymFuncElem& other);
  friend SymFuncElem operator+(SymFuncElem a, const SymFuncElem& b) { return a += b; }
  friend SymFuncElem operator-(SymFuncElem a, const SymFuncElem& b) { return a -= b; }
  friend SymFuncElem operator*(const IvPoly& c, const SymFuncElem& a);
  friend SymFuncElem operator*(const SymFuncElem& a, const SymFuncElem& b);
  friend bool operator==(const SymFuncElem& a, const SymFuncElem& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SymFuncElem& a, const SymFuncElem& b) { return !(a == b); }

 private:
  Terms terms_;
};

// Polynomial in e_1, e_2, ...: the key nu stands for e_nu1 e_nu2 ...
class EPolyElem {
 public:
  using Terms = std::map<Partition, IvPoly>;

  EPolyElem() = default;
  EPolyElem(const IvPoly& constant);  // NOLINT(google-explicit-constructor)

  // c * e_nu
  static EPolyElem product(const Partition& nu, const IvPoly& c = IvPoly(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  IvPoly coefficient(const Partition& nu) const;
  void add_term(const Partition& nu, const IvPoly& c);
  // Weighted degree max |nu|; -1 for zero.
  int degree() const;
  std::string to_string() const;

  EPolyElem& operator+=(const EPolyElem& other);
  EPolyElem& operator-=(const EPolyElem& other);
  friend EPolyElem operator+(EPolyElem a, const EPolyElem& b) { return a += b; }
  friend EPolyElem operator-(EPolyElem a, const EPolyElem& b) { return a -= b; }
  friend EPolyElem operator*(const IvPoly& c, const EPolyElem& a);
  friend EPolyElem operator*(const EPolyElem& a, const EPolyElem& b);
  friend bool operator==(const EPolyElem& a, const EPolyElem& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const EPolyElem& a, const EPolyElem& b) { return !(a == b); }

 private:
  Terms terms_;
};

// m_lambda * m_mu by counting pairs of rearrangements that add to a
// partition.
SymFuncElem monomial_mul(const SymFuncElem& a, const SymFuncElem& b);

// The same product computed by multiplying out in deg(a) + deg(b) variables.
SymFuncElem monomial_mul_expanded(const SymFuncElem& a, const SymFuncElem& b);

SymFuncElem e_to_m(const EPolyElem& p);

// Peels off the lex-largest monomial lambda with e_{lambda'} = m_lambda + lower.
EPolyElem m_to_e(const SymFuncElem& f);

// f restricted to values.size() variables, at those values, with t -> t_value.
Laurent evaluate(const SymFuncElem& f, const std::vector<Laurent>& values, long t_value);
Laurent evaluate(const EPolyElem& p, const std::vector<Laurent>& values, long t_value);

// Sum over distinct placements of lambda into the variables; the direct
// evaluation used to check evaluate().
Laurent evaluate_monomial_direct(const Partition& lambda, const std::vector<Laurent>& values);

// e_0, ..., e_N of the values, from prod (1 + x_i u).
std::vector<Laurent> elementary_values(const std::vector<Laurent>& values);

}  // namespace fhq::symfunc
