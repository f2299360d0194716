#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fhq/combinat/partition.hpp"

namespace fhq::perm {

// Permutation of {1..n} in one-line notation. Composition is as functions:
// (a * b)(i) = a(b(i)), so w * s_i swaps the entries in positions i, i+1.
class Permutation {
 public:
  static constexpr int kMaxDegree = 16;

  // Identity of S_n.
  explicit Permutation(int n = 0);

  static Permutation from_one_line(std::span<const int> images);
  // Cycle notation such as "(1 2 3)(4 5)"; points absent from every cycle are fixed.
  static Permutation from_cycles(int n, std::string_view text);
  static Permutation transposition(int n, int i, int j);
  // Adjacent transposition s_i = (i, i+1).
  static Permutation simple(int n, int i) { return transposition(n, i, i + 1); }

  int degree() const { return n_; }
  int operator()(int i) const { return img_[i - 1] + 1; }
  std::vector<int> one_line() const;
  bool is_identity() const { return *this == Permutation(n_); }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  // w * s_i
  Permutation times_simple(int i) const {
    Permutation p = *this;
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }
  // s_i * w
  Permutation simple_times(int i) const;
  // l(w s_i) < l(w)
  bool has_right_descent(int i) const { return img_[i - 1] > img_[i]; }
  // l(s_i w) < l(w)
  bool has_left_descent(int i) const;

  std::string to_cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};  // 0-based images, identity past n
};

// Inversion count.
int length(const Permutation& w);
// Reduced word built by stripping the smallest right descent each step.
std::vector<int> reduced_word(const Permutation& w);
Permutation from_word(int n, std::span<const int> word);

// Cycle lengths including fixed points, sorted decreasing.
combinat::Partition cycle_type(const Permutation& w);
// Cycle type with one subtracted from every part.
combinat::Partition reduced_cycle_type(const Permutation& w);

inline constexpr int kDefaultGroupGuard = 10;

// Every element of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n, int max_n = kDefaultGroupGuard);

// Elements of S_n of reduced cycle type mu, sorted; empty when |mu| + l(mu) > n.
// The guard is on the number of moved points, so large n is fine for small mu.
std::vector<Permutation> class_elements(int n, const combinat::Partition& mu);

// Elements of minimal length in class_elements(n, mu).
std::vector<Permutation> minimal_length_class_reps(int n, const combinat::Partition& mu);

// The minimal-length representative built from cycles (b, b+1, ..., b+m) on
// consecutive blocks, longest cycle first.
Permutation standard_class_rep(int n, const combinat::Partition& mu);

}  // namespace fhq::perm

template <>
struct std::hash<fhq::perm::Permutation> {
  std::size_t operator()(const fhq::perm::Permutation& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.degree());
    for (int i = 1; i <= p.degree(); ++i) h = h * 131 + static_cast<std::size_t>(p(i));
    return h;
  }
};
