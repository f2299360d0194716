#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "fhq/combinat/diagram.hpp"
#include "fhq/combinat/tableau.hpp"
#include "fhq/error.hpp"
#include "helpers.hpp"

using namespace testing;
using namespace fhq::combinat;

TEST_SUITE("combinat") {

TEST_CASE("partitions") {
  CHECK(Partition::parse("5,3,2") == P({5, 3, 2}));
  CHECK(Partition::parse("").empty());
  CHECK(P({3, 1, 0}) == P({3, 1}));
  CHECK_THROWS_AS(Partition::parse("1,3"), fhq::Error);
  CHECK_THROWS_AS(Partition::parse("a"), fhq::Error);
  CHECK(P({4, 2, 1}).conjugate() == P({3, 2, 1, 1}));
  CHECK(P({}).to_string() == "()");
  CHECK(P({5, 3, 2}).to_csv() == "5,3,2");
  const std::vector<int> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
  CHECK(partitions_of(3) == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
  CHECK(dominates(P({3, 1}), P({2, 2})));
  CHECK(!dominates(P({2, 2}), P({3, 1})));
}

TEST_CASE("contents") {
  CHECK(contents(P({4, 3, 1})) == std::vector<int>{-2, -1, 0, 0, 1, 1, 2, 3});
  CHECK(contents(P({})).empty());
  CHECK(contents(P({3})) == std::vector<int>{0, 1, 2});
  CHECK(q_contents(P({2})) == std::vector<Laurent>{0, 1});
  CHECK(q_contents(P({1, 1})) == std::vector<Laurent>{-qp(-1), 0});
  auto qc = q_contents(P({2, 1}));
  std::multiset<std::string> got;
  for (const auto& x : qc) got.insert(x.to_string());
  CHECK(got == std::multiset<std::string>{"0", "1", (-qp(-1)).to_string()});
  auto residues = contents_mod_e(P({4, 3, 1}), 3);
  std::sort(residues.begin(), residues.end());
  CHECK(residues == std::vector<int>{0, 0, 0, 1, 1, 1, 2, 2});
  CHECK(contents_mod_e(P({3, 2}), 1) == std::vector<int>(5, 0));
  auto r2 = contents_mod_e(P({2}), 2);
  std::sort(r2.begin(), r2.end());
  CHECK(r2 == std::vector<int>{0, 1});
}

TEST_CASE("content polynomial") {
  CHECK(content_polynomial(P({})) == std::vector<Laurent>{1});
  CHECK(content_polynomial(P({2})) == std::vector<Laurent>{0, 1, 1});
  CHECK(content_polynomial(P({1, 1})) == std::vector<Laurent>{0, -qp(-1), 1});
}

// All connected size-e subsets of the rim whose removal leaves a partition,
// found by brute force over subsets of the diagram.
std::size_t brute_force_strips(const Partition& shape, int e) {
  std::vector<std::pair<int, int>> boxes;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape.part(r); ++c) boxes.emplace_back(r, c);
  std::size_t count = 0;
  const std::size_t m = boxes.size();
  if (m > 16) return 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != e) continue;
    std::vector<int> rows(shape.parts());
    std::set<std::pair<int, int>> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) chosen.insert(boxes[i]);
    // remainder must be a partition: chosen boxes are row suffixes
    bool ok = true;
    std::vector<int> rest(shape.length());
    for (int r = 0; r < shape.length(); ++r) {
      int k = 0;
      for (int c = 0; c < shape.part(r); ++c)
        if (chosen.count({r, c})) ++k;
      for (int c = shape.part(r) - k; c < shape.part(r); ++c)
        if (!chosen.count({r, c})) ok = false;
      rest[r] = shape.part(r) - k;
    }
    for (std::size_t r = 1; ok && r < rest.size(); ++r) ok = rest[r] <= rest[r - 1];
    if (!ok) continue;
    // connected and free of 2x2 squares
    for (const auto& [r, c] : chosen)
      if (chosen.count({r + 1, c}) && chosen.count({r, c + 1}) && chosen.count({r + 1, c + 1})) ok = false;
    std::set<std::pair<int, int>> seen{*chosen.begin()};
    std::vector<std::pair<int, int>> stack{*chosen.begin()};
    while (!stack.empty()) {
      auto [r, c] = stack.back();
      stack.pop_back();
      for (auto nb : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}})
        if (chosen.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
    if (ok && seen.size() == chosen.size()) ++count;
  }
  return count;
}

TEST_CASE("border strips") {
  CHECK(removable_border_strips(P({5, 3, 2}), 4).size() == 2);
  CHECK(removable_border_strips(P({1}), 2).empty());
  CHECK(removable_border_strips(P({2, 1}), 2).empty());
  for (const auto& lambda : partitions_up_to(8))
    for (int e = 1; e <= 5; ++e) {
      const auto strips = removable_border_strips(lambda, e);
      CHECK_MESSAGE(strips.size() == brute_force_strips(lambda, e), lambda.to_string(), " e=", e);
      for (const auto& s : strips) {
        CHECK(s.boxes.size() == static_cast<std::size_t>(e));
        CHECK(s.remainder.size() == lambda.size() - e);
      }
    }
}

TEST_CASE("e-cores") {
  CHECK(e_core(P({5, 3, 2}), 4) == P({1, 1}));
  CHECK(e_core(P({2, 1}), 4) == P({2, 1}));
  CHECK(e_core(P({2, 1, 1}), 2).empty());
  CHECK(e_core(P({3}), 2) == P({1}));
  // a core has no removable strips; the e-weight is a whole number
  for (const auto& lambda : partitions_up_to(9))
    for (int e = 2; e <= 4; ++e) {
      const auto core = e_core(lambda, e);
      CHECK(removable_border_strips(core, e).empty());
      CHECK((lambda.size() - core.size()) % e == 0);
    }
}

TEST_CASE("standard tableaux") {
  CHECK(standard_tableaux(P({4})).size() == 1);
  CHECK(standard_tableaux(P({2, 1})).size() == 2);
  CHECK(standard_tableaux(P({4, 2, 1})).size() == 35);
  CHECK(count_standard_tableaux(P({4, 2, 1})) == 35);
  CHECK(standard_tableaux(P({})).size() == 1);
  CHECK_THROWS_AS(standard_tableaux(P({7, 6}), 12), fhq::Error);
  for (const auto& lambda : partitions_up_to(7)) {
    const auto tableaux = standard_tableaux(lambda);
    CHECK(tableaux.size() == count_standard_tableaux(lambda));
    for (std::size_t i = 1; i < tableaux.size(); ++i)
      CHECK(tableaux[i - 1].column_reading_word() < tableaux[i].column_reading_word());
    for (const auto& t : tableaux) {
      std::vector<int> c;
      for (int i = 1; i <= t.size(); ++i) c.push_back(t.content(i));
      std::sort(c.begin(), c.end());
      CHECK(c == contents(lambda));
    }
  }
}

}
