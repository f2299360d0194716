#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fhq/combinat/partition.hpp"
#include "fhq/combinat/tableau.hpp"
#include "fhq/exact/linear.hpp"
#include "fhq/hecke/hecke_elem.hpp"

namespace fhq::specht {

using combinat::Partition;
using exact::Laurent;
using exact::RationalFn;
using exact::RationalMatrix;

inline constexpr int kDefaultSpechtGuard = 8;

// Seminormal form of S^lambda over Q(q) on the basis v_T, T in the
// standard_tableaux order. With a, b the contents of i, i+1 in T:
//   T_i v_T = (q-1)/(1-q^(a-b)) v_T + off-diagonal part on v_{s_i T},
// where the off-diagonal pair multiplies to alpha_T alpha_{s_i T} + q and the
// coefficient 1 sits on the move that takes i+1 to a higher row.
struct SeminormalRep {
  Partition shape;
  int n = 0;
  std::vector<combinat::StandardTableau> tableaux;
  std::vector<RationalMatrix> generators;  // generators[i-1] represents T_i

  std::size_t dimension() const { return tableaux.size(); }
};

SeminormalRep seminormal_rep(const Partition& lambda, int max_size = kDefaultSpechtGuard);

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix scale(const RationalFn& c, const RationalMatrix& a);

// Image of an element of H_n(q).
RationalMatrix represent(const SeminormalRep& rep, const hecke::HeckeElem& z);

// The scalar c when m = c * I.
std::optional<RationalFn> scalar_of(const RationalMatrix& m);

// Quadratic, braid and far-commutation relations as exact matrix identities.
bool satisfies_relations(const SeminormalRep& rep);

// rho(L_i) is lower triangular with [c_T(i)]_q at row T, for every i.
bool jm_triangular_with_contents(const SeminormalRep& rep);

// Eigenvalues of q L_1, ..., q L_n on the Gelfand-Zetlin basis: q [c]_q for
// the contents c of lambda.
std::vector<Laurent> jm_eigenvalues(const Partition& lambda);

// Route A: f_mu at the JM eigenvalues of S^lambda with t = |lambda|.
Laurent central_character(const Partition& lambda, const Partition& mu);

// f_mu at the plain q-contents [c]_q with t = |lambda|.
Laurent central_character_at_q_contents(const Partition& lambda, const Partition& mu);

// Route B: rho_lambda(Gamma_mu), which must be scalar. Throws NotScalarMatrix.
Laurent central_character_by_representation(const Partition& lambda, const Partition& mu);

// central_character(lambda, mu) for every lambda |- n.
std::map<Partition, Laurent> character_table(int n, const Partition& mu);

struct BlockPartition {
  int n = 0;
  std::optional<int> e;  // nullopt for e = infinity
  std::vector<std::vector<Partition>> blocks;
};

// Shapes of size n grouped by e-core; singletons when e is infinite.
BlockPartition blocks(int n, std::optional<int> e);

}  // namespace fhq::specht
