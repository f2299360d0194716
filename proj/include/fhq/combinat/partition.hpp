#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fhq::combinat {

// Weakly decreasing sequence of positive parts. Trailing zeros are accepted on
// construction and dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Comma-separated parts; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // i-th part (0-based), zero past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;

  // "(5,3,2)", with "()" for the empty partition.
  std::string to_string() const;
  // "5,3,2", the command-line form.
  std::string to_csv() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, in decreasing lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

// Partitions of 0..n grouped by size, each group as in partitions_of.
std::vector<Partition> partitions_up_to(int n);

// Dominance order on partitions of equal size.
bool dominates(const Partition& a, const Partition& b);

}  // namespace fhq::combinat
