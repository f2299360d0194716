#pragma once

#include <vector>

#include "fhq/combinat/partition.hpp"

namespace fhq::combinat {

class StandardTableau {
 public:
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  // 0-based (row, column) of a label in 1..size().
  std::pair<int, int> position(int label) const { return positions_[label - 1]; }
  int content(int label) const {
    auto [r, c] = position(label);
    return c - r;
  }
  // Columns left to right, each read top to bottom.
  std::vector<int> column_reading_word() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> positions_;
};

inline constexpr int kDefaultTableauGuard = 12;

// All standard tableaux of the shape, sorted lexicographically by column
// reading word. Throws SizeGuard above max_size boxes.
std::vector<StandardTableau> standard_tableaux(const Partition& shape,
                                               int max_size = kDefaultTableauGuard);

}  // namespace fhq::combinat
