#pragma once

#include <map>
#include <vector>

#include "fhq/exact/laurent.hpp"
#include "fhq/perm/permutation.hpp"

namespace fhq::hecke {

using exact::Laurent;
using perm::Permutation;

// Element of H_n(q) in the T_w basis, with (T_i - q)(T_i + 1) = 0.
class HeckeElem {
 public:
  using Terms = std::map<Permutation, Laurent>;

  explicit HeckeElem(int n = 0) : n_(n) {}

  // c * T_w
  static HeckeElem basis(const Permutation& w, const Laurent& c = Laurent(1));
  static HeckeElem identity(int n) { return basis(Permutation(n)); }
  // T_i
  static HeckeElem generator(int n, int i);
  // T_{i1} T_{i2} ... for an arbitrary (not necessarily reduced) word.
  static HeckeElem word(int n, const std::vector<int>& letters);

  int rank() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coefficient(const Permutation& w) const;
  void add_term(const Permutation& w, const Laurent& c);

  // this * T_i
  HeckeElem times_generator(int i) const;
  // T_i * this
  HeckeElem generator_times(int i) const;

  HeckeElem& operator+=(const HeckeElem& other);
  HeckeElem& operator-=(const HeckeElem& other);
  friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
  friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
  friend HeckeElem operator*(const Laurent& c, const HeckeElem& a);
  // Throws RankMismatch for different n.
  friend HeckeElem operator*(const HeckeElem& a, const HeckeElem& b);
  friend bool operator==(const HeckeElem& a, const HeckeElem& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HeckeElem& a, const HeckeElem& b) { return !(a == b); }

 private:
  int n_;
  Terms terms_;
};

// L_i = sum_{j < i} q^(j-i) T_{(j,i)}; L_1 = 0.
HeckeElem jm_element(int i, int n);

// q * L_i = sum_{j < i} q^(j-i+1) T_{(j,i)}. Symmetric functions of these are
// the ones whose elementary values are sums of Geck-Rouquier elements.
HeckeElem scaled_jm_element(int i, int n);

// Commutes with every T_i.
bool is_central(const HeckeElem& z);

// Integer combination of permutations: an element of Z S_n.
using GroupAlgebraElem = std::map<Permutation, exact::Integer>;

// q -> 1, identifying T_w with w.
GroupAlgebraElem specialize_q1(const HeckeElem& z);

GroupAlgebraElem group_algebra_multiply(const GroupAlgebraElem& a, const GroupAlgebraElem& b);

// Sum of the elements of reduced cycle type mu in S_n.
GroupAlgebraElem class_sum(int n, const combinat::Partition& mu);

}  // namespace fhq::hecke
