#pragma once

#include <utility>
#include <vector>

#include "fhq/combinat/partition.hpp"
#include "fhq/exact/laurent.hpp"

namespace fhq::combinat {

// Box of a Young diagram in English notation, 0-based (row, column).
using Box = std::pair<int, int>;

struct BorderStrip {
  std::vector<Box> boxes;  // row-major order
  Partition remainder;     // shape left after removing the strip
};

// Box contents j - i, sorted ascending.
std::vector<int> contents(const Partition& shape);

// [c]_q for each content, in the order of contents().
std::vector<exact::Laurent> q_contents(const Partition& shape);

// contents() reduced into 0..e-1, same order.
std::vector<int> contents_mod_e(const Partition& shape, int e);

// Size-e border strips whose removal leaves a partition, ordered by the row of
// the strip's top-right box.
std::vector<BorderStrip> removable_border_strips(const Partition& shape, int e);

// Repeatedly removes the first removable size-e strip.
Partition e_core(const Partition& shape, int e);

// Product over contents c of (x + [c]_q), coefficients of x^0, x^1, ...
std::vector<exact::Laurent> content_polynomial(const Partition& shape);

// Hook-length count of standard tableaux.
exact::Integer count_standard_tableaux(const Partition& shape);

}  // namespace fhq::combinat
