#include <doctest.h>

#include <algorithm>

#include "fhq/error.hpp"
#include "fhq/perm/permutation.hpp"
#include "helpers.hpp"

using namespace testing;
using namespace fhq::perm;

TEST_SUITE("symmgroup") {

TEST_CASE("cycle types") {
  CHECK(reduced_cycle_type(Permutation(5)).empty());
  CHECK(reduced_cycle_type(Permutation::transposition(5, 2, 4)) == P({1}));
  CHECK(reduced_cycle_type(Permutation::from_cycles(6, "(1 2 3)(4 5)")) == P({2, 1}));
  CHECK(cycle_type(Permutation::from_cycles(6, "(1 2 3)(4 5)")) == P({3, 2, 1}));
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 4)"), fhq::Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 2)(2 3)"), fhq::Error);
}

TEST_CASE("composition is as functions") {
  const auto a = Permutation::from_cycles(3, "(1 2)"), b = Permutation::from_cycles(3, "(2 3)");
  CHECK((a * b)(2) == a(b(2)));
  CHECK((a * b) == Permutation::from_cycles(3, "(1 2 3)"));
  CHECK(a.times_simple(2) == a * Permutation::simple(3, 2));
  CHECK(a.simple_times(2) == Permutation::simple(3, 2) * a);
}

TEST_CASE("length and reduced words") {
  CHECK(length(Permutation(4)) == 0);
  CHECK(length(Permutation::from_cycles(3, "(1 3)")) == 3);
  const std::vector<int> w0{4, 3, 2, 1};
  CHECK(length(Permutation::from_one_line(w0)) == 6);
  CHECK(reduced_word(Permutation(3)).empty());
  CHECK(reduced_word(Permutation::simple(3, 1)) == std::vector<int>{1});
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == length(w));
      CHECK(from_word(n, word) == w);
      CHECK(length(w.inverse()) == length(w));
      for (int i = 1; i < n; ++i) CHECK(w.has_right_descent(i) == (length(w.times_simple(i)) < length(w)));
      for (int i = 1; i < n; ++i) CHECK(w.has_left_descent(i) == (length(w.simple_times(i)) < length(w)));
    }
}

TEST_CASE("class elements") {
  CHECK(class_elements(3, P({1})).size() == 3);
  CHECK(class_elements(3, P({2})) ==
        std::vector<Permutation>{Permutation::from_cycles(3, "(1 2 3)"), Permutation::from_cycles(3, "(1 3 2)")});
  CHECK(class_elements(2, P({1, 1})).empty());
  CHECK(minimal_length_class_reps(3, P({1})) ==
        std::vector<Permutation>{Permutation::from_cycles(3, "(2 3)"), Permutation::from_cycles(3, "(1 2)")});
  CHECK(minimal_length_class_reps(3, P({})) == std::vector<Permutation>{Permutation(3)});
  const auto reps = minimal_length_class_reps(4, P({1, 1}));
  REQUIRE(!reps.empty());
  for (const auto& w : reps) CHECK(length(w) == 2);
  // class sizes add up to n!
  for (int n = 1; n <= 6; ++n) {
    std::size_t total = 0;
    for (const auto& mu : fhq::combinat::partitions_up_to(n)) {
      const auto elements = class_elements(n, mu);
      total += elements.size();
      if (elements.empty()) continue;
      const auto rep = standard_class_rep(n, mu);
      CHECK(reduced_cycle_type(rep) == mu);
      CHECK(std::find(elements.begin(), elements.end(), rep) != elements.end());
      const auto mins = minimal_length_class_reps(n, mu);
      CHECK(length(rep) == length(mins.front()));
    }
    CHECK(total == all_permutations(n).size());
  }
  // large n with a small class
  CHECK(class_elements(12, P({1})).size() == 66);
}

}
