#include "fhq/combinat/tableau.hpp"

#include <algorithm>
#include <string>

#include "fhq/error.hpp"

namespace fhq::combinat {

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const int n = shape_.size();
  positions_.assign(static_cast<std::size_t>(n), {-1, -1});
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw Error(ErrorKind::InvalidArgument, "tableau rows do not match shape");
  for (int r = 0; r < shape_.length(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_.part(r))
      throw Error(ErrorKind::InvalidArgument, "tableau row length does not match shape");
    for (int c = 0; c < shape_.part(r); ++c) {
      int label = rows_[r][c];
      if (label < 1 || label > n || positions_[label - 1].first >= 0)
        throw Error(ErrorKind::InvalidArgument, "tableau labels must be a bijection onto 1..n");
      positions_[label - 1] = {r, c};
      if (c > 0 && rows_[r][c - 1] >= label)
        throw Error(ErrorKind::InvalidArgument, "tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= label)
        throw Error(ErrorKind::InvalidArgument, "tableau columns must increase");
    }
  }
}

std::vector<int> StandardTableau::column_reading_word() const {
  std::vector<int> word;
  for (int c = 0; c < shape_.part(0); ++c)
    for (int r = 0; r < shape_.length() && c < shape_.part(r); ++r) word.push_back(rows_[r][c]);
  return word;
}

namespace {

// Fill labels n, n-1, ... into removable corners.
void fill(std::vector<int>& remaining, int label, std::vector<std::vector<int>>& rows,
          const Partition& shape, std::vector<StandardTableau>& out) {
  if (label == 0) {
    out.emplace_back(shape, rows);
    return;
  }
  for (std::size_t r = 0; r < remaining.size(); ++r) {
    int len = remaining[r];
    if (len == 0) continue;
    bool corner = r + 1 == remaining.size() || remaining[r + 1] < len;
    if (!corner) continue;
    rows[r][len - 1] = label;
    --remaining[r];
    fill(remaining, label - 1, rows, shape, out);
    ++remaining[r];
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape, int max_size) {
  if (shape.size() > max_size)
    throw Error(ErrorKind::SizeGuard, "shape size " + std::to_string(shape.size()) +
                                          " exceeds tableau guard " + std::to_string(max_size));
  std::vector<int> remaining = shape.parts();
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<StandardTableau> out;
  fill(remaining, shape.size(), rows, shape, out);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return a.column_reading_word() < b.column_reading_word();
  });
  return out;
}

}  // namespace fhq::combinat
