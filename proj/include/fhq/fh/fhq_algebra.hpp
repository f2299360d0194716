#pragma once

#include <functional>
#include <map>
#include <string>

#include "fhq/combinat/partition.hpp"
#include "fhq/exact/ivpoly.hpp"
#include "fhq/hecke/hecke_elem.hpp"

namespace fhq::fh {

using combinat::Partition;
using exact::IvPoly;
using exact::Laurent;

// Coefficient map lambda -> phi^lambda(q, t).
using Coefficients = std::map<Partition, IvPoly>;

// Element of FH_q in the K_{mu,q} basis.
class FHqElem {
 public:
  using Terms = std::map<Partition, IvPoly>;

  FHqElem() = default;
  explicit FHqElem(Terms terms);

  // c * K_mu
  static FHqElem basis(const Partition& mu, const IvPoly& c = IvPoly(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  IvPoly coefficient(const Partition& mu) const;
  void add_term(const Partition& mu, const IvPoly& c);
  // Largest |mu| in the support; -1 for zero.
  int filtration_degree() const;
  // Terms with |mu| == d.
  FHqElem layer(int d) const;
  std::string to_string() const;

  FHqElem& operator+=(const FHqElem& other);
  FHqElem& operator-=(const FHqElem& other);
  friend FHqElem operator+(FHqElem a, const FHqElem& b) { return a += b; }
  friend FHqElem operator-(FHqElem a, const FHqElem& b) { return a -= b; }
  friend FHqElem operator*(const IvPoly& c, const FHqElem& a);
  friend bool operator==(const FHqElem& a, const FHqElem& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FHqElem& a, const FHqElem& b) { return !(a == b); }

 private:
  Terms terms_;
};

inline constexpr int kDefaultKMax = 4;

struct StructureOptions {
  int k_max = kDefaultKMax;
  // Products in H_n(q) are formed directly up to this n; above it the values
  // come from the q-character table.
  int direct_max_n = 6;
  // Degree cap is |mu| + |nu| + extra_degree.
  int extra_degree = 2;
  // Consult and fill the in-process memo and the default store.
  bool use_cache = true;
};

// Coordinates of Gamma_mu Gamma_nu in H_n(q) on the surviving Gamma_lambda;
// empty when Gamma_mu or Gamma_nu vanishes.
std::map<Partition, Laurent> class_product(int n, const Partition& mu, const Partition& nu,
                                           int direct_max_n = StructureOptions{}.direct_max_n);

// Data source for the interpolation: lambda -> coefficient at rank n.
using NodeData = std::function<std::map<Partition, Laurent>(int n)>;

// Adaptive binomial-basis fit of every lambda coefficient. For each lambda
// the fit starts at n0 = max(|lambda| + l(lambda), |mu| + l(mu), |nu| + l(nu))
// with D + 1 consecutive nodes; D grows until the fit reproduces the two
// following nodes and every node in [|lambda| + l(lambda), n0), where the
// product vanishes. Throws ValidationFailed past the degree cap.
Coefficients fit_structure_constants(const Partition& mu, const Partition& nu, int degree_cap, const NodeData& data);

Coefficients structure_constants(const Partition& mu, const Partition& nu, const StructureOptions& options = {});

FHqElem fhq_mul(const FHqElem& a, const FHqElem& b, const StructureOptions& options = {});

// sum_mu a_mu(q, n) Gamma_mu in H_n(q), with Gamma_mu = 0 when |mu| + l(mu) > n.
hecke::HeckeElem phi_nq(const FHqElem& x, int n);

// Classical Farahat-Higman algebra: integer-valued polynomial coefficients.
using ClassicalElem = std::map<Partition, IvPoly>;

// q -> 1 in every coefficient.
ClassicalElem theta(const FHqElem& x);

// Structure constants of the classical algebra, from class counts in Z S_n:
// the X_lambda coefficient of X_mu X_nu is #{x in C_mu : x^-1 w_lambda in C_nu}.
Coefficients classical_structure_constants(const Partition& mu, const Partition& nu, int k_max = kDefaultKMax);

ClassicalElem classical_mul(const ClassicalElem& a, const ClassicalElem& b, int k_max = kDefaultKMax);

// sum_mu a_mu(n) X_mu in Z S_n.
hecke::GroupAlgebraElem classical_phi_n(const ClassicalElem& x, int n);

}  // namespace fhq::fh
