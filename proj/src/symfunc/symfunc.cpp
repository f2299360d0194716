#include "fhq/symfunc/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace fhq::symfunc {

namespace {

template <typename Terms>
void add_into(Terms& terms, const Partition& key, const IvPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

template <typename Terms>
std::string terms_to_string(const Terms& terms, const char* symbol) {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")";
    if (!it->first.empty()) out += std::string("*") + symbol + it->first.to_string();
  }
  return out;
}

// Distinct rearrangements of parts padded with zeros to the given width.
std::vector<std::vector<int>> rearrangements(const Partition& lambda, std::size_t width) {
  std::vector<int> v(lambda.parts());
  v.resize(width, 0);
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Partition from_vector(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

std::map<Partition, exact::Integer> monomial_pair(const Partition& lambda, const Partition& mu) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, std::map<Partition, exact::Integer>> memo;
  auto key = lambda < mu ? std::make_pair(lambda, mu) : std::make_pair(mu, lambda);
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const std::size_t width = static_cast<std::size_t>(lambda.length() + mu.length());
  std::map<Partition, exact::Integer> out;
  const auto alphas = rearrangements(lambda, width);
  const auto betas = rearrangements(mu, width);
  for (const auto& a : alphas) {
    for (const auto& b : betas) {
      std::vector<int> s(width);
      bool sorted = true;
      for (std::size_t i = 0; i < width; ++i) {
        s[i] = a[i] + b[i];
        if (i > 0 && s[i] > s[i - 1]) {
          sorted = false;
          break;
        }
      }
      if (sorted) out[Partition(s)] += 1;
    }
  }
  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

SymFuncElem::SymFuncElem(const IvPoly& constant) { add_into(terms_, Partition(), constant); }

SymFuncElem SymFuncElem::monomial(const Partition& lambda, const IvPoly& c) {
  SymFuncElem f;
  add_into(f.terms_, lambda, c);
  return f;
}

SymFuncElem SymFuncElem::elementary(int r) { return monomial(Partition(std::vector<int>(r, 1))); }

IvPoly SymFuncElem::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? IvPoly() : it->second;
}

void SymFuncElem::add_term(const Partition& lambda, const IvPoly& c) { add_into(terms_, lambda, c); }

int SymFuncElem::degree() const {
  int d = -1;
  for (const auto& [lambda, c] : terms_) d = std::max(d, lambda.size());
  return d;
}

int SymFuncElem::variables_needed() const {
  int n = 0;
  for (const auto& [lambda, c] : terms_) n = std::max(n, lambda.length());
  return n;
}

SymFuncElem SymFuncElem::homogeneous_part(int d) const {
  SymFuncElem out;
  for (const auto& [lambda, c] : terms_)
    if (lambda.size() == d) out.terms_.emplace(lambda, c);
  return out;
}

std::string SymFuncElem::to_string() const { return terms_to_string(terms_, "m"); }

SymFuncElem& SymFuncElem::operator+=(const SymFuncElem& other) {
  for (const auto& [lambda, c] : other.terms_) add_into(terms_, lambda, c);
  return *this;
}

SymFuncElem& SymFuncElem::operator-=(const SymFuncElem& other) {
  for (const auto& [lambda, c] : other.terms_) add_into(terms_, lambda, -c);
  return *this;
}

SymFuncElem operator*(const IvPoly& c, const SymFuncElem& a) {
  SymFuncElem out;
  if (c.is_zero()) return out;
  for (const auto& [lambda, x] : a.terms_) add_into(out.terms_, lambda, c * x);
  return out;
}

SymFuncElem operator*(const SymFuncElem& a, const SymFuncElem& b) { return monomial_mul(a, b); }

EPolyElem::EPolyElem(const IvPoly& constant) { add_into(terms_, Partition(), constant); }

EPolyElem EPolyElem::product(const Partition& nu, const IvPoly& c) {
  EPolyElem p;
  add_into(p.terms_, nu, c);
  return p;
}

IvPoly EPolyElem::coefficient(const Partition& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? IvPoly() : it->second;
}

void EPolyElem::add_term(const Partition& nu, const IvPoly& c) { add_into(terms_, nu, c); }

int EPolyElem::degree() const {
  int d = -1;
  for (const auto& [nu, c] : terms_) d = std::max(d, nu.size());
  return d;
}

std::string EPolyElem::to_string() const { return terms_to_string(terms_, "e"); }

EPolyElem& EPolyElem::operator+=(const EPolyElem& other) {
  for (const auto& [nu, c] : other.terms_) add_into(terms_, nu, c);
  return *this;
}

EPolyElem& EPolyElem::operator-=(const EPolyElem& other) {
  for (const auto& [nu, c] : other.terms_) add_into(terms_, nu, -c);
  return *this;
}

EPolyElem operator*(const IvPoly& c, const EPolyElem& a) {
  EPolyElem out;
  if (c.is_zero()) return out;
  for (const auto& [nu, x] : a.terms_) add_into(out.terms_, nu, c * x);
  return out;
}

EPolyElem operator*(const EPolyElem& a, const EPolyElem& b) {
  EPolyElem out;
  for (const auto& [x, cx] : a.terms_) {
    for (const auto& [y, cy] : b.terms_) {
      std::vector<int> parts(x.parts());
      parts.insert(parts.end(), y.parts().begin(), y.parts().end());
      add_into(out.terms_, from_vector(std::move(parts)), cx * cy);
    }
  }
  return out;
}

SymFuncElem monomial_mul(const SymFuncElem& a, const SymFuncElem& b) {
  SymFuncElem out;
  for (const auto& [lambda, x] : a.terms())
    for (const auto& [mu, y] : b.terms()) {
      const IvPoly xy = x * y;
      for (const auto& [nu, count] : monomial_pair(lambda, mu)) out.add_term(nu, Laurent(count) * xy);
    }
  return out;
}

SymFuncElem monomial_mul_expanded(const SymFuncElem& a, const SymFuncElem& b) {
  const std::size_t width = static_cast<std::size_t>(std::max(a.degree(), 0) + std::max(b.degree(), 0));
  auto expand = [&](const SymFuncElem& f) {
    std::map<std::vector<int>, IvPoly> poly;
    for (const auto& [lambda, c] : f.terms())
      if (static_cast<std::size_t>(lambda.length()) <= width)
        for (auto& alpha : rearrangements(lambda, width)) poly[alpha] += c;
    return poly;
  };
  const auto pa = expand(a), pb = expand(b);
  SymFuncElem out;
  for (const auto& [x, cx] : pa)
    for (const auto& [y, cy] : pb) {
      std::vector<int> s(width);
      bool sorted = true;
      for (std::size_t i = 0; i < width; ++i) {
        s[i] = x[i] + y[i];
        if (i > 0 && s[i] > s[i - 1]) sorted = false;
      }
      if (sorted) out.add_term(Partition(s), cx * cy);
    }
  return out;
}

SymFuncElem e_to_m(const EPolyElem& p) {
  static std::mutex mutex;
  static std::map<Partition, SymFuncElem> memo;
  SymFuncElem out;
  for (const auto& [nu, c] : p.terms()) {
    SymFuncElem expanded;
    {
      std::lock_guard lock(mutex);
      auto it = memo.find(nu);
      if (it != memo.end()) expanded = it->second;
    }
    if (expanded.is_zero()) {
      expanded = SymFuncElem(1);
      for (int r : nu.parts()) expanded = monomial_mul(expanded, SymFuncElem::elementary(r));
      std::lock_guard lock(mutex);
      memo.emplace(nu, expanded);
    }
    out += c * expanded;
  }
  return out;
}

EPolyElem m_to_e(const SymFuncElem& f) {
  EPolyElem out;
  SymFuncElem rest = f;
  while (!rest.is_zero()) {
    // Largest degree first, then lex-largest within it.
    const Partition* lead = nullptr;
    for (const auto& [lambda, c] : rest.terms())
      if (!lead || lambda.size() > lead->size() || (lambda.size() == lead->size() && *lead < lambda))
        lead = &lambda;
    const Partition lambda = *lead;
    const IvPoly c = rest.coefficient(lambda);
    const Partition nu = lambda.conjugate();
    out.add_term(nu, c);
    rest -= c * e_to_m(EPolyElem::product(nu));
  }
  return out;
}

std::vector<Laurent> elementary_values(const std::vector<Laurent>& values) {
  std::vector<Laurent> e{Laurent(1)};
  for (const auto& x : values) {
    e.emplace_back();
    for (std::size_t r = e.size() - 1; r > 0; --r) e[r] += x * e[r - 1];
  }
  return e;
}

Laurent evaluate(const EPolyElem& p, const std::vector<Laurent>& values, long t_value) {
  const auto e = elementary_values(values);
  Laurent total;
  for (const auto& [nu, c] : p.terms()) {
    Laurent term = c.evaluate(t_value);
    for (int r : nu.parts()) {
      if (r >= static_cast<int>(e.size())) {
        term = Laurent();
        break;
      }
      term *= e[static_cast<std::size_t>(r)];
    }
    total += term;
  }
  return total;
}

Laurent evaluate(const SymFuncElem& f, const std::vector<Laurent>& values, long t_value) {
  SymFuncElem restricted;
  for (const auto& [lambda, c] : f.terms())
    if (lambda.length() <= static_cast<int>(values.size())) restricted.add_term(lambda, c);
  return evaluate(m_to_e(restricted), values, t_value);
}

Laurent evaluate_monomial_direct(const Partition& lambda, const std::vector<Laurent>& values) {
  if (lambda.length() > static_cast<int>(values.size())) return Laurent();
  Laurent total;
  for (const auto& alpha : rearrangements(lambda, values.size())) {
    Laurent term(1);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (int k = 0; k < alpha[i]; ++k) term *= values[i];
    total += term;
  }
  return total;
}

}  // namespace fhq::symfunc
