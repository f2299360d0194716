#include "fhq/hecke/evaluation.hpp"

#include <map>
#include <mutex>

namespace fhq::hecke {

std::vector<HeckeElem> elementary_jm(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<HeckeElem>> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  std::vector<HeckeElem> e{HeckeElem::identity(n)};
  for (int i = 1; i <= n; ++i) {
    const HeckeElem l = scaled_jm_element(i, n);
    e.emplace_back(n);
    for (std::size_t r = e.size() - 1; r > 0; --r) e[r] += l * e[r - 1];
  }
  std::lock_guard lock(mutex);
  return memo.emplace(n, std::move(e)).first->second;
}

HeckeElem ev_n(const symfunc::EPolyElem& p, int n) {
  const auto e = elementary_jm(n);
  HeckeElem out(n);
  for (const auto& [nu, c] : p.terms()) {
    const Laurent value = c.evaluate(n);
    if (value.is_zero()) continue;
    HeckeElem term = HeckeElem::identity(n);
    bool vanishes = false;
    for (int r : nu.parts()) {
      if (r > n) {
        vanishes = true;
        break;
      }
      term = term * e[static_cast<std::size_t>(r)];
    }
    if (!vanishes) out += value * term;
  }
  return out;
}

HeckeElem ev_n(const symfunc::SymFuncElem& f, int n) {
  symfunc::SymFuncElem restricted;
  for (const auto& [lambda, c] : f.terms())
    if (lambda.length() <= n) restricted.add_term(lambda, c);
  return ev_n(symfunc::m_to_e(restricted), n);
}

}  // namespace fhq::hecke
