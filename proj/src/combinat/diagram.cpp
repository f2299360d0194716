#include "fhq/combinat/diagram.hpp"

#include <algorithm>

#include "fhq/error.hpp"

namespace fhq::combinat {

using exact::Integer;
using exact::Laurent;

std::vector<int> contents(const Partition& shape) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(shape.size()));
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape.part(i); ++j) out.push_back(j - i);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Laurent> q_contents(const Partition& shape) {
  std::vector<Laurent> out;
  for (int c : contents(shape)) out.push_back(exact::qnumber(c));
  return out;
}

std::vector<int> contents_mod_e(const Partition& shape, int e) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "e must be positive");
  std::vector<int> out = contents(shape);
  for (int& c : out) c = ((c % e) + e) % e;
  return out;
}

std::vector<BorderStrip> removable_border_strips(const Partition& shape, int e) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "e must be positive");
  std::vector<BorderStrip> out;
  const Partition conj = shape.conjugate();
  // Rim hooks correspond to boxes (i, j) of hook length e; the hook's rim runs
  // from the end of row i down to the bottom of column j.
  for (int i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape.part(i); ++j) {
      int bottom = conj.part(static_cast<std::size_t>(j)) - 1;
      int hook = (shape.part(i) - j - 1) + (bottom - i) + 1;
      if (hook != e) continue;
      std::vector<int> rest = shape.parts();
      for (int r = i; r < bottom; ++r) rest[r] = shape.part(static_cast<std::size_t>(r + 1)) - 1;
      rest[bottom] = j;
      BorderStrip strip;
      for (int r = i; r <= bottom; ++r)
        for (int c = rest[r]; c < shape.part(static_cast<std::size_t>(r)); ++c) strip.boxes.emplace_back(r, c);
      strip.remainder = Partition(std::move(rest));
      out.push_back(std::move(strip));
    }
  }
  return out;
}

Partition e_core(const Partition& shape, int e) {
  Partition cur = shape;
  for (;;) {
    auto strips = removable_border_strips(cur, e);
    if (strips.empty()) return cur;
    cur = strips.front().remainder;
  }
}

std::vector<Laurent> content_polynomial(const Partition& shape) {
  std::vector<Laurent> poly{Laurent(1)};
  for (int c : contents(shape)) {
    Laurent root = exact::qnumber(c);
    std::vector<Laurent> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] += poly[k] * root;
    }
    poly = std::move(next);
  }
  return poly;
}

Integer count_standard_tableaux(const Partition& shape) {
  Integer num = 1;
  for (int k = 2; k <= shape.size(); ++k) num *= k;
  const Partition conj = shape.conjugate();
  Integer den = 1;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape.part(i); ++j)
      den *= (shape.part(i) - j - 1) + (conj.part(static_cast<std::size_t>(j)) - i - 1) + 1;
  return num / den;
}

}  // namespace fhq::combinat
