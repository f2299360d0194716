#include "fhq/hecke/geck_rouquier.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "fhq/error.hpp"
#include "fhq/exact/linear.hpp"
#include "fhq/json_io.hpp"
#include "fhq/store.hpp"

namespace fhq::hecke {

using exact::RationalFn;
using perm::length;
using perm::reduced_cycle_type;

namespace {

void check_class_sum(const HeckeElem& gamma, int n, const Partition& mu) {
  if (specialize_q1(gamma) != class_sum(n, mu))
    throw Error(ErrorKind::NotLaurent, "Gamma" + mu.to_string() + " does not specialise to the class sum");
}

HeckeElem recursive_element(int n, const Partition& mu) {
  HeckeElem out(n);
  if (mu.size() + mu.length() > n) return out;
  if (mu.empty()) return HeckeElem::identity(n);

  struct Entry {
    Permutation w;
    int len;
  };
  std::vector<Entry> elements;
  for (const auto& w : perm::all_permutations(n, n)) elements.push_back({w, length(w)});
  std::stable_sort(elements.begin(), elements.end(),
                   [](const Entry& a, const Entry& b) { return a.len < b.len; });

  std::unordered_map<Permutation, int> len_of;
  len_of.reserve(elements.size() * 2);
  for (const auto& e : elements) len_of.emplace(e.w, e.len);
  auto length_of = [&](const Permutation& w) {
    auto it = len_of.find(w);
    return it == len_of.end() ? length(w) : it->second;
  };

  std::unordered_map<Permutation, Laurent> coef;
  std::unordered_set<Permutation> done;
  coef.reserve(elements.size() * 2);
  auto coef_of = [&](const Permutation& w) {
    auto it = coef.find(w);
    return it == coef.end() ? Laurent() : it->second;
  };
  const Laurent q_inv = Laurent::q_power(-1);
  const Laurent one_minus_q_inv = Laurent(1) - q_inv;

  for (const auto& e : elements) {
    if (done.count(e.w)) continue;
    // Cyclic-shift class of e.w: closure under length-preserving s w s.
    std::vector<Permutation> shift_class{e.w};
    std::unordered_set<Permutation> seen{e.w};
    bool reduced = false;
    Laurent value;
    for (std::size_t k = 0; k < shift_class.size(); ++k) {
      const Permutation x = shift_class[k];
      for (int i = 1; i < n; ++i) {
        if (x.has_right_descent(i) != x.has_left_descent(i)) {
          Permutation y = x.simple_times(i).times_simple(i);
          if (seen.insert(y).second) shift_class.push_back(y);
        } else if (!reduced && x.has_right_descent(i)) {
          Permutation sx = x.simple_times(i);
          Permutation sxs = sx.times_simple(i);
          if (length_of(sxs) == e.len - 2) {
            value = q_inv * coef_of(sxs) + one_minus_q_inv * coef_of(sx);
            reduced = true;
          }
        }
      }
    }
    if (!reduced && reduced_cycle_type(e.w) == mu) value = Laurent(1);
    for (const auto& x : shift_class) {
      done.insert(x);
      if (!value.is_zero()) coef.emplace(x, value);
    }
  }
  for (const auto& [w, c] : coef) out.add_term(w, c);
  return out;
}

std::map<Partition, HeckeElem> linear_basis(int n) {
  auto group = perm::all_permutations(n, n);
  std::unordered_map<Permutation, std::size_t> index;
  for (std::size_t k = 0; k < group.size(); ++k) index.emplace(group[k], k);

  std::vector<Partition> labels;
  for (int r = 0; r < n; ++r)
    for (const auto& mu : combinat::partitions_of(r))
      if (mu.size() + mu.length() <= n) labels.push_back(mu);
  std::map<Partition, std::size_t> label_index;
  for (std::size_t k = 0; k < labels.size(); ++k) label_index.emplace(labels[k], k);

  // Row v of [T_i, z] for each generator, as a linear form in the a_w.
  std::vector<exact::SparseRow> rows;
  for (int i = 1; i < n; ++i) {
    std::map<std::size_t, exact::SparseRow> by_target;
    for (std::size_t k = 0; k < group.size(); ++k) {
      HeckeElem tw = HeckeElem::basis(group[k]);
      HeckeElem commutator = tw.generator_times(i) - tw.times_generator(i);
      for (const auto& [v, c] : commutator.terms()) {
        auto& row = by_target[index.at(v)];
        row.entries.emplace(k, RationalFn(c));
      }
    }
    for (auto& [v, row] : by_target) rows.push_back(std::move(row));
  }
  // Normalisation on minimal-length elements of every class.
  for (const auto& lambda : labels) {
    for (const auto& w : perm::minimal_length_class_reps(n, lambda)) {
      exact::SparseRow row;
      row.entries.emplace(index.at(w), RationalFn(1));
      row.rhs.assign(labels.size(), RationalFn());
      row.rhs[label_index.at(lambda)] = RationalFn(1);
      rows.push_back(std::move(row));
    }
  }
  auto solution = exact::solve_unique(std::move(rows), group.size(), labels.size());

  std::map<Partition, HeckeElem> out;
  for (std::size_t m = 0; m < labels.size(); ++m) {
    HeckeElem gamma(n);
    for (std::size_t k = 0; k < group.size(); ++k) {
      const RationalFn& x = solution[k][m];
      if (x.is_zero()) continue;
      auto l = x.to_laurent();
      if (!l)
        throw Error(ErrorKind::NotLaurent, "coefficient " + x.to_string() + " of T" +
                                               group[k].to_cycle_string() + " in Gamma" +
                                               labels[m].to_string());
      gamma.add_term(group[k], *l);
    }
    out.emplace(labels[m], std::move(gamma));
  }
  return out;
}

}  // namespace

HeckeElem gr_element(int n, const Partition& mu, GrMethod method, int max_n) {
  if (n > max_n)
    throw Error(ErrorKind::SizeGuard, "H_" + std::to_string(n) + " exceeds guard " + std::to_string(max_n));
  if (method == GrMethod::LinearSolve) {
    if (mu.size() + mu.length() > n) return HeckeElem(n);
    return linear_basis(n).at(mu);
  }
  static std::shared_mutex mutex;
  static std::map<std::pair<int, Partition>, HeckeElem> memo;
  const auto key = std::make_pair(n, mu);
  {
    std::shared_lock lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const std::string store_key = "n" + std::to_string(n) + "_mu" + mu.to_csv();
  auto store = default_store();
  std::optional<HeckeElem> stored;
  if (store)
    if (auto payload = store->load("gamma", store_key)) stored = io::hecke_from_json(*payload);
  HeckeElem gamma = stored && stored->rank() == n ? *stored : recursive_element(n, mu);
  if (!stored && !gamma.is_zero()) {
    if (!is_central(gamma))
      throw Error(ErrorKind::NotCentral, "propagated Gamma" + mu.to_string() + " in H_" +
                                             std::to_string(n) + " is not central");
    check_class_sum(gamma, n, mu);
  }
  if (store && !stored) store->save("gamma", store_key, io::to_json(gamma));
  std::unique_lock lock(mutex);
  return memo.emplace(key, std::move(gamma)).first->second;
}

std::map<Partition, HeckeElem> geck_rouquier_basis(int n, GrMethod method, int max_n) {
  if (n > max_n)
    throw Error(ErrorKind::SizeGuard, "H_" + std::to_string(n) + " exceeds guard " + std::to_string(max_n));
  if (method == GrMethod::LinearSolve) {
    auto basis = linear_basis(n);
    for (const auto& [mu, gamma] : basis) check_class_sum(gamma, n, mu);
    return basis;
  }
  std::map<Partition, HeckeElem> out;
  for (int r = 0; r < n; ++r)
    for (const auto& mu : combinat::partitions_of(r))
      if (mu.size() + mu.length() <= n) out.emplace(mu, gr_element(n, mu, method, max_n));
  return out;
}

std::map<Partition, Laurent> gamma_expand(const HeckeElem& z) {
  const int n = z.rank();
  std::map<Partition, Laurent> out;
  if (z.is_zero()) return out;
  if (!is_central(z)) throw Error(ErrorKind::NotCentral, "gamma_expand needs a central element");
  for (int r = 0; r < n; ++r) {
    for (const auto& mu : combinat::partitions_of(r)) {
      if (mu.size() + mu.length() > n) continue;
      auto reps = perm::minimal_length_class_reps(n, mu);
      Laurent c = z.coefficient(reps.front());
      for (const auto& w : reps)
        if (z.coefficient(w) != c)
          throw Error(ErrorKind::InconsistentCoefficients,
                      "minimal-length elements of class " + mu.to_string() + " disagree");
      if (!c.is_zero()) out.emplace(mu, c);
    }
  }
  if (gamma_combination(n, out) != z)
    throw Error(ErrorKind::NonzeroResidual, "central element is not spanned by the Gamma it reads");
  return out;
}

HeckeElem gamma_combination(int n, const std::map<Partition, Laurent>& coefficients) {
  HeckeElem out(n);
  for (const auto& [mu, c] : coefficients) {
    if (c.is_zero() || mu.size() + mu.length() > n) continue;
    out += c * gr_element(n, mu, GrMethod::Recursive, n);
  }
  return out;
}

}  // namespace fhq::hecke
