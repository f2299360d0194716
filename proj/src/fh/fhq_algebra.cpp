#include "fhq/fh/fhq_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>

#include "fhq/error.hpp"
#include "fhq/hecke/characters.hpp"
#include "fhq/hecke/geck_rouquier.hpp"
#include "fhq/json_io.hpp"
#include "fhq/perm/permutation.hpp"
#include "fhq/store.hpp"

namespace fhq::fh {

namespace {

int rank_of(const Partition& p) { return p.size() + p.length(); }

void add_into(FHqElem::Terms& terms, const Partition& mu, const IvPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string key_of(const Partition& mu, const Partition& nu) { return "mu" + mu.to_csv() + "_nu" + nu.to_csv(); }

}  // namespace

FHqElem::FHqElem(Terms terms) {
  for (const auto& [mu, c] : terms) add_into(terms_, mu, c);
}

FHqElem FHqElem::basis(const Partition& mu, const IvPoly& c) {
  FHqElem x;
  add_into(x.terms_, mu, c);
  return x;
}

IvPoly FHqElem::coefficient(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? IvPoly() : it->second;
}

void FHqElem::add_term(const Partition& mu, const IvPoly& c) { add_into(terms_, mu, c); }

int FHqElem::filtration_degree() const {
  int d = -1;
  for (const auto& [mu, c] : terms_) d = std::max(d, mu.size());
  return d;
}

FHqElem FHqElem::layer(int d) const {
  FHqElem out;
  for (const auto& [mu, c] : terms_)
    if (mu.size() == d) out.terms_.emplace(mu, c);
  return out;
}

std::string FHqElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")*K" + it->first.to_string();
  }
  return out;
}

FHqElem& FHqElem::operator+=(const FHqElem& other) {
  for (const auto& [mu, c] : other.terms_) add_into(terms_, mu, c);
  return *this;
}

FHqElem& FHqElem::operator-=(const FHqElem& other) {
  for (const auto& [mu, c] : other.terms_) add_into(terms_, mu, -c);
  return *this;
}

FHqElem operator*(const IvPoly& c, const FHqElem& a) {
  FHqElem out;
  if (c.is_zero()) return out;
  for (const auto& [mu, x] : a.terms_) add_into(out.terms_, mu, c * x);
  return out;
}

std::map<Partition, Laurent> class_product(int n, const Partition& mu, const Partition& nu, int direct_max_n) {
  if (rank_of(mu) > n || rank_of(nu) > n) return {};
  if (n <= direct_max_n) {
    const auto gm = hecke::gr_element(n, mu, hecke::GrMethod::Recursive, n);
    const auto gn = hecke::gr_element(n, nu, hecke::GrMethod::Recursive, n);
    return hecke::gamma_expand(gm * gn);
  }
  return hecke::class_product_via_characters(n, mu, nu);
}

Coefficients fit_structure_constants(const Partition& mu, const Partition& nu, int degree_cap, const NodeData& data) {
  const int n_prod = std::max(rank_of(mu), rank_of(nu));
  std::map<int, std::map<Partition, Laurent>> cache;
  auto value = [&](const Partition& lambda, int n) -> Laurent {
    if (n < n_prod) return Laurent();
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, data(n)).first;
    auto v = it->second.find(lambda);
    return v == it->second.end() ? Laurent() : v->second;
  };

  const int k = mu.size() + nu.size();
  std::set<Partition> pending;
  for (const auto& lambda : combinat::partitions_up_to(k)) pending.insert(lambda);
  std::set<Partition> fitted;
  Coefficients out;
  while (!pending.empty()) {
    const Partition lambda = *pending.begin();
    pending.erase(pending.begin());
    fitted.insert(lambda);
    const int n_lambda = rank_of(lambda);
    const int n0 = std::max(n_lambda, n_prod);
    bool accepted = false;
    for (int d = 0; d <= degree_cap && !accepted; ++d) {
      std::vector<Laurent> nodes;
      for (int n = n0; n <= n0 + d; ++n) nodes.push_back(value(lambda, n));
      IvPoly fit = exact::interpolate_consecutive(n0, nodes);
      accepted = true;
      for (int n = n0 + d + 1; n <= n0 + d + 2 && accepted; ++n) accepted = fit.evaluate(n) == value(lambda, n);
      for (int n = n_lambda; n < n0 && accepted; ++n) accepted = fit.evaluate(n).is_zero();
      if (accepted && !fit.is_zero()) out.emplace(lambda, std::move(fit));
    }
    if (!accepted)
      throw Error(ErrorKind::ValidationFailed, "coefficient of K" + lambda.to_string() + " in K" + mu.to_string() +
                                                   "*K" + nu.to_string() + " exceeds degree cap " +
                                                   std::to_string(degree_cap));
    // Anything seen outside the expected range is fitted as well, so a
    // support violation shows up in the result instead of being dropped.
    for (const auto& [n, row] : cache)
      for (const auto& [l, c] : row)
        if (!fitted.count(l)) pending.insert(l);
  }
  return out;
}

Coefficients structure_constants(const Partition& mu, const Partition& nu, const StructureOptions& options) {
  const int k = mu.size() + nu.size();
  if (k > options.k_max)
    throw Error(ErrorKind::SizeGuard, "|mu|+|nu| = " + std::to_string(k) + " exceeds k_max " +
                                          std::to_string(options.k_max));
  if (mu.empty()) return {{nu, IvPoly(1)}};
  if (nu.empty()) return {{mu, IvPoly(1)}};

  const auto key = nu < mu ? std::make_pair(nu, mu) : std::make_pair(mu, nu);
  static std::shared_mutex mutex;
  static std::map<std::pair<Partition, Partition>, Coefficients> memo;
  if (options.use_cache) {
    {
      std::shared_lock lock(mutex);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    if (auto store = default_store())
      if (auto payload = store->load("phi", key_of(key.first, key.second))) {
        auto table = io::ivpoly_map_from_json(payload->at("terms"), "phi");
        std::unique_lock lock(mutex);
        return memo.emplace(key, std::move(table)).first->second;
      }
  }
  const int direct = options.direct_max_n;
  Coefficients table = fit_structure_constants(key.first, key.second, k + options.extra_degree,
                                               [&](int n) { return class_product(n, key.first, key.second, direct); });
  if (options.use_cache) {
    if (auto store = default_store())
      store->save("phi", key_of(key.first, key.second),
                  {{"mu", io::to_json(key.first)}, {"nu", io::to_json(key.second)}, {"terms", io::to_json(table, "phi")}});
    std::unique_lock lock(mutex);
    memo.emplace(key, table);
  }
  return table;
}

FHqElem fhq_mul(const FHqElem& a, const FHqElem& b, const StructureOptions& options) {
  FHqElem out;
  for (const auto& [mu, x] : a.terms())
    for (const auto& [nu, y] : b.terms()) {
      const IvPoly xy = x * y;
      for (const auto& [lambda, phi] : structure_constants(mu, nu, options)) out.add_term(lambda, xy * phi);
    }
  return out;
}

hecke::HeckeElem phi_nq(const FHqElem& x, int n) {
  hecke::HeckeElem out(n);
  for (const auto& [mu, c] : x.terms()) {
    if (rank_of(mu) > n) continue;
    const Laurent value = c.evaluate(n);
    if (!value.is_zero()) out += value * hecke::gr_element(n, mu, hecke::GrMethod::Recursive, n);
  }
  return out;
}

ClassicalElem theta(const FHqElem& x) {
  ClassicalElem out;
  for (const auto& [mu, c] : x.terms()) {
    IvPoly v = c.at_q_one();
    if (!v.is_zero()) out.emplace(mu, std::move(v));
  }
  return out;
}

Coefficients classical_structure_constants(const Partition& mu, const Partition& nu, int k_max) {
  const int k = mu.size() + nu.size();
  if (k > k_max)
    throw Error(ErrorKind::SizeGuard, "|mu|+|nu| = " + std::to_string(k) + " exceeds k_max " + std::to_string(k_max));
  if (mu.empty()) return {{nu, IvPoly(1)}};
  if (nu.empty()) return {{mu, IvPoly(1)}};
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, Coefficients> memo;
  const auto key = nu < mu ? std::make_pair(nu, mu) : std::make_pair(mu, nu);
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto counts = [&](int n) {
    std::map<Partition, Laurent> row;
    if (rank_of(mu) > n || rank_of(nu) > n) return row;
    const auto elements = perm::class_elements(n, key.first);
    for (const auto& lambda : combinat::partitions_up_to(n)) {
      if (rank_of(lambda) > n) continue;
      const auto w = perm::standard_class_rep(n, lambda);
      long count = 0;
      for (const auto& x : elements)
        if (perm::reduced_cycle_type(x.inverse() * w) == key.second) ++count;
      if (count) row.emplace(lambda, Laurent(count));
    }
    return row;
  };
  Coefficients table = fit_structure_constants(key.first, key.second, k + 2, counts);
  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(table)).first->second;
}

ClassicalElem classical_mul(const ClassicalElem& a, const ClassicalElem& b, int k_max) {
  FHqElem::Terms out;
  for (const auto& [mu, x] : a)
    for (const auto& [nu, y] : b) {
      const IvPoly xy = x * y;
      for (const auto& [lambda, phi] : classical_structure_constants(mu, nu, k_max)) add_into(out, lambda, xy * phi);
    }
  return out;
}

hecke::GroupAlgebraElem classical_phi_n(const ClassicalElem& x, int n) {
  hecke::GroupAlgebraElem out;
  for (const auto& [mu, c] : x) {
    if (rank_of(mu) > n) continue;
    const exact::Integer value = c.evaluate(n).at_one();
    if (value == 0) continue;
    for (const auto& [w, m] : hecke::class_sum(n, mu)) {
      auto& slot = out[w];
      slot += value * m;
      if (slot == 0) out.erase(w);
    }
  }
  return out;
}

}  // namespace fhq::fh
