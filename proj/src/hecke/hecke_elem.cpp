#include "fhq/hecke/hecke_elem.hpp"

#include <string>

#include "fhq/error.hpp"

namespace fhq::hecke {

namespace {

const Laurent& q_minus_one() {
  static const Laurent v = Laurent::q_power(1) - Laurent(1);
  return v;
}

void accumulate(HeckeElem::Terms& terms, const Permutation& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

HeckeElem HeckeElem::basis(const Permutation& w, const Laurent& c) {
  HeckeElem h(w.degree());
  h.add_term(w, c);
  return h;
}

HeckeElem HeckeElem::generator(int n, int i) {
  if (i < 1 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "generator T_" + std::to_string(i) +
                                                                     " not in H_" + std::to_string(n));
  return basis(Permutation::simple(n, i));
}

HeckeElem HeckeElem::word(int n, const std::vector<int>& letters) {
  HeckeElem h = identity(n);
  for (int i : letters) h = h.times_generator(i);
  return h;
}

Laurent HeckeElem::coefficient(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent() : it->second;
}

void HeckeElem::add_term(const Permutation& w, const Laurent& c) {
  if (w.degree() != n_)
    throw Error(ErrorKind::RankMismatch, "permutation of degree " + std::to_string(w.degree()) +
                                             " in H_" + std::to_string(n_));
  accumulate(terms_, w, c);
}

HeckeElem HeckeElem::times_generator(int i) const {
  if (i < 1 || i >= n_) throw Error(ErrorKind::IndexOutOfRange, "generator index out of range");
  HeckeElem out(n_);
  for (const auto& [w, c] : terms_) {
    Permutation ws = w.times_simple(i);
    if (!w.has_right_descent(i)) {
      accumulate(out.terms_, ws, c);
    } else {
      accumulate(out.terms_, ws, c.shifted(1));
      accumulate(out.terms_, w, c * q_minus_one());
    }
  }
  return out;
}

HeckeElem HeckeElem::generator_times(int i) const {
  if (i < 1 || i >= n_) throw Error(ErrorKind::IndexOutOfRange, "generator index out of range");
  HeckeElem out(n_);
  for (const auto& [w, c] : terms_) {
    Permutation sw = w.simple_times(i);
    if (!w.has_left_descent(i)) {
      accumulate(out.terms_, sw, c);
    } else {
      accumulate(out.terms_, sw, c.shifted(1));
      accumulate(out.terms_, w, c * q_minus_one());
    }
  }
  return out;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& other) {
  if (other.n_ != n_) throw Error(ErrorKind::RankMismatch, "adding elements of different rank");
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, c);
  return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& other) {
  if (other.n_ != n_) throw Error(ErrorKind::RankMismatch, "subtracting elements of different rank");
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, -c);
  return *this;
}

HeckeElem operator*(const Laurent& c, const HeckeElem& a) {
  HeckeElem out(a.n_);
  if (c.is_zero()) return out;
  for (const auto& [w, x] : a.terms_) out.terms_.emplace(w, c * x);
  return out;
}

HeckeElem operator*(const HeckeElem& a, const HeckeElem& b) {
  if (a.n_ != b.n_)
    throw Error(ErrorKind::RankMismatch, "H_" + std::to_string(a.n_) + " times H_" + std::to_string(b.n_));
  HeckeElem out(a.n_);
  if (a.is_zero() || b.is_zero()) return out;
  // a * T_y is built along the reduced word of y; prefixes are shared through
  // a memo keyed by the prefix permutation.
  std::map<Permutation, HeckeElem> prefix;
  prefix.emplace(Permutation(a.n_), a);
  for (const auto& [y, c] : b.terms_) {
    std::vector<int> w = perm::reduced_word(y);
    Permutation p(a.n_);
    const HeckeElem* cur = &prefix.at(p);
    for (int i : w) {
      Permutation next = p.times_simple(i);
      auto it = prefix.find(next);
      if (it == prefix.end()) it = prefix.emplace(next, cur->times_generator(i)).first;
      cur = &it->second;
      p = next;
    }
    for (const auto& [x, v] : cur->terms_) accumulate(out.terms_, x, v * c);
  }
  return out;
}

HeckeElem jm_element(int i, int n) {
  if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "L_" + std::to_string(i) + " not in H_" +
                                                                    std::to_string(n));
  HeckeElem out(n);
  for (int j = 1; j < i; ++j) out.add_term(Permutation::transposition(n, j, i), Laurent::q_power(j - i));
  return out;
}

HeckeElem scaled_jm_element(int i, int n) { return Laurent::q_power(1) * jm_element(i, n); }

bool is_central(const HeckeElem& z) {
  for (int i = 1; i < z.rank(); ++i)
    if (z.times_generator(i) != z.generator_times(i)) return false;
  return true;
}

GroupAlgebraElem specialize_q1(const HeckeElem& z) {
  GroupAlgebraElem out;
  for (const auto& [w, c] : z.terms()) {
    exact::Integer v = c.at_one();
    if (v != 0) out.emplace(w, v);
  }
  return out;
}

GroupAlgebraElem group_algebra_multiply(const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
  GroupAlgebraElem out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      auto [it, inserted] = out.try_emplace(x * y, cx * cy);
      if (!inserted) {
        it->second += cx * cy;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

GroupAlgebraElem class_sum(int n, const combinat::Partition& mu) {
  GroupAlgebraElem out;
  for (const auto& w : perm::class_elements(n, mu)) out.emplace(w, 1);
  return out;
}

}  // namespace fhq::hecke
