#include "fhq/specht/specht.hpp"

#include <algorithm>
#include <string>

#include "fhq/combinat/diagram.hpp"
#include "fhq/error.hpp"
#include "fhq/fh/psi.hpp"
#include "fhq/hecke/geck_rouquier.hpp"
#include "fhq/perm/permutation.hpp"

namespace fhq::specht {

namespace {

RationalFn q_power(int k) { return RationalFn(Laurent::q_power(k)); }

RationalFn diagonal_entry(int a, int b) {
  return RationalFn(Laurent::q_power(1) - Laurent(1)) / (RationalFn(1) - q_power(a - b));
}

combinat::StandardTableau swapped(const combinat::StandardTableau& t, int i) {
  auto rows = t.rows();
  for (auto& row : rows)
    for (auto& x : row) {
      if (x == i) x = i + 1;
      else if (x == i + 1) x = i;
    }
  return combinat::StandardTableau(t.shape(), rows);
}

bool is_zero_matrix(const RationalMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

RationalMatrix subtract(const RationalMatrix& a, const RationalMatrix& b) { return add(a, scale(RationalFn(-1), b)); }

}  // namespace

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<RationalFn>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  RationalMatrix out(n, std::vector<RationalFn>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (!b[i][j].is_zero()) out[i][j] += b[i][j];
  return out;
}

RationalMatrix scale(const RationalFn& c, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (auto& row : out)
    for (auto& x : row)
      if (!x.is_zero()) x *= c;
  return out;
}

SeminormalRep seminormal_rep(const Partition& lambda, int max_size) {
  if (lambda.size() > max_size)
    throw Error(ErrorKind::SizeGuard, "Specht module of size " + std::to_string(lambda.size()) + " exceeds guard " +
                                          std::to_string(max_size));
  SeminormalRep rep;
  rep.shape = lambda;
  rep.n = lambda.size();
  rep.tableaux = combinat::standard_tableaux(lambda, max_size);
  const std::size_t dim = rep.tableaux.size();
  auto index_of = [&](const combinat::StandardTableau& t) {
    for (std::size_t k = 0; k < dim; ++k)
      if (rep.tableaux[k] == t) return k;
    throw Error(ErrorKind::InvalidArgument, "tableau missing from enumeration");
  };
  for (int i = 1; i < rep.n; ++i) {
    RationalMatrix m(dim, std::vector<RationalFn>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
      const auto& t = rep.tableaux[col];
      const int a = t.content(i), b = t.content(i + 1);
      const RationalFn alpha = diagonal_entry(a, b);
      m[col][col] = alpha;
      const auto [ri, ci] = t.position(i);
      const auto [rj, cj] = t.position(i + 1);
      if (ri == rj || ci == cj) continue;
      const std::size_t other = index_of(swapped(t, i));
      // Column col holds T_i v_T; the coefficient of v_{s_i T}.
      m[other][col] = rj > ri ? RationalFn(1) : alpha * diagonal_entry(b, a) + RationalFn(Laurent::q_power(1));
    }
    rep.generators.push_back(std::move(m));
  }
  return rep;
}

RationalMatrix represent(const SeminormalRep& rep, const hecke::HeckeElem& z) {
  if (z.rank() != rep.n) throw Error(ErrorKind::RankMismatch, "element and representation of different rank");
  const std::size_t dim = rep.dimension();
  RationalMatrix out(dim, std::vector<RationalFn>(dim));
  std::map<perm::Permutation, RationalMatrix> images;
  auto image_of = [&](const perm::Permutation& w) -> const RationalMatrix& {
    auto it = images.find(w);
    if (it != images.end()) return it->second;
    RationalMatrix m = identity_matrix(dim);
    for (int i : perm::reduced_word(w)) m = multiply(m, rep.generators[static_cast<std::size_t>(i - 1)]);
    return images.emplace(w, std::move(m)).first->second;
  };
  for (const auto& [w, c] : z.terms()) out = add(out, scale(RationalFn(c), image_of(w)));
  return out;
}

std::optional<RationalFn> scalar_of(const RationalMatrix& m) {
  if (m.empty()) return RationalFn();
  const RationalFn c = m[0][0];
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (i == j && !(m[i][j] == c)) return std::nullopt;
      if (i != j && !m[i][j].is_zero()) return std::nullopt;
    }
  return c;
}

bool satisfies_relations(const SeminormalRep& rep) {
  const std::size_t dim = rep.dimension();
  const RationalFn q(Laurent::q_power(1));
  const auto& g = rep.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    // T_i^2 = (q-1) T_i + q
    RationalMatrix rhs = add(scale(q - RationalFn(1), g[i]), scale(q, identity_matrix(dim)));
    if (!is_zero_matrix(subtract(multiply(g[i], g[i]), rhs))) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (j == i + 1) {
        if (!is_zero_matrix(subtract(multiply(multiply(g[i], g[j]), g[i]), multiply(multiply(g[j], g[i]), g[j]))))
          return false;
      } else if (!is_zero_matrix(subtract(multiply(g[i], g[j]), multiply(g[j], g[i])))) {
        return false;
      }
    }
  }
  return true;
}

bool jm_triangular_with_contents(const SeminormalRep& rep) {
  for (int i = 1; i <= rep.n; ++i) {
    const RationalMatrix l = represent(rep, hecke::jm_element(i, rep.n));
    for (std::size_t r = 0; r < l.size(); ++r) {
      for (std::size_t c = r + 1; c < l.size(); ++c)
        if (!l[r][c].is_zero()) return false;
      if (!(l[r][r] == RationalFn(exact::qnumber(rep.tableaux[r].content(i))))) return false;
    }
  }
  return true;
}

std::vector<Laurent> jm_eigenvalues(const Partition& lambda) {
  std::vector<Laurent> out;
  for (const auto& c : combinat::q_contents(lambda)) out.push_back(Laurent::q_power(1) * c);
  return out;
}

Laurent central_character(const Partition& lambda, const Partition& mu) {
  if (mu.size() + mu.length() > lambda.size()) return Laurent();
  return symfunc::evaluate(fh::psi_inverse(mu), jm_eigenvalues(lambda), lambda.size());
}

Laurent central_character_at_q_contents(const Partition& lambda, const Partition& mu) {
  if (mu.size() + mu.length() > lambda.size()) return Laurent();
  return symfunc::evaluate(fh::psi_inverse(mu), combinat::q_contents(lambda), lambda.size());
}

Laurent central_character_by_representation(const Partition& lambda, const Partition& mu) {
  const int n = lambda.size();
  if (mu.size() + mu.length() > n) return Laurent();
  const SeminormalRep rep = seminormal_rep(lambda);
  const auto gamma = hecke::gr_element(n, mu, hecke::GrMethod::Recursive, std::max(n, hecke::kDefaultHeckeGuard));
  auto c = scalar_of(represent(rep, gamma));
  if (!c) throw Error(ErrorKind::NotScalarMatrix, "Gamma" + mu.to_string() + " is not scalar on S" + lambda.to_string());
  auto value = c->to_laurent();
  if (!value) throw Error(ErrorKind::NotLaurent, "central character " + c->to_string() + " is not Laurent");
  return *value;
}

std::map<Partition, Laurent> character_table(int n, const Partition& mu) {
  if (mu.size() + mu.length() > n)
    throw Error(ErrorKind::InvalidArgument, "Gamma" + mu.to_string() + " vanishes in H_" + std::to_string(n));
  std::map<Partition, Laurent> out;
  for (const auto& lambda : combinat::partitions_of(n)) out.emplace(lambda, central_character(lambda, mu));
  return out;
}

BlockPartition blocks(int n, std::optional<int> e) {
  if (e && *e < 2) throw Error(ErrorKind::InvalidArgument, "quantum characteristic must be at least 2");
  BlockPartition out;
  out.n = n;
  out.e = e;
  std::vector<Partition> cores;
  for (const auto& lambda : combinat::partitions_of(n)) {
    if (!e) {
      out.blocks.push_back({lambda});
      continue;
    }
    const Partition core = combinat::e_core(lambda, *e);
    auto it = std::find(cores.begin(), cores.end(), core);
    if (it == cores.end()) {
      cores.push_back(core);
      out.blocks.push_back({lambda});
    } else {
      out.blocks[static_cast<std::size_t>(it - cores.begin())].push_back(lambda);
    }
  }
  return out;
}

}  // namespace fhq::specht
