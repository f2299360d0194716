#include "fhq/hecke/characters.hpp"

#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>
#include <string>

#include "fhq/error.hpp"
#include "fhq/exact/linear.hpp"

namespace fhq::hecke {

using exact::QMatrix;

namespace {

// Weight of lambda / nu, which must be free of 2x2 squares.
Laurent strip_weight(const std::vector<int>& lambda, const std::vector<int>& nu) {
  int rows = 0, components = 0;
  std::set<int> columns;
  bool previous_nonempty = false;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == nu[i]) {
      previous_nonempty = false;
      continue;
    }
    ++rows;
    for (int j = nu[i]; j < lambda[i]; ++j) columns.insert(j);
    // Rows i-1 and i touch when they share a column.
    if (!previous_nonempty || nu[i - 1] >= lambda[i]) ++components;
    previous_nonempty = true;
  }
  const int c = static_cast<int>(columns.size());
  Laurent w = Laurent::monomial((rows - components) % 2 ? -1 : 1, c - components);
  const Laurent q_minus_one = Laurent::q_power(1) - Laurent(1);
  for (int k = 1; k < components; ++k) w *= q_minus_one;
  return w;
}

void inner_shapes(const std::vector<int>& lambda, std::size_t row, int remaining, std::vector<int>& nu,
                  std::vector<std::vector<int>>& out) {
  if (row == lambda.size()) {
    if (remaining == 0) out.push_back(nu);
    return;
  }
  const int below = row + 1 < lambda.size() ? lambda[row + 1] : 0;
  const int upper = row > 0 ? std::min(nu[row - 1], lambda[row]) : lambda[row];
  const int lower = std::max(below - 1, 0);
  for (int v = upper; v >= lower; --v) {
    int removed = lambda[row] - v;
    if (removed > remaining) break;
    nu[row] = v;
    inner_shapes(lambda, row + 1, remaining - removed, nu, out);
  }
}

Laurent character_rec(const std::vector<int>& lambda, const std::vector<int>& parts, std::size_t count,
                      std::map<std::pair<std::vector<int>, std::size_t>, Laurent>& memo) {
  if (count == 0) return Laurent(1);
  auto key = std::make_pair(lambda, count);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<std::vector<int>> inner;
  std::vector<int> nu(lambda.size());
  inner_shapes(lambda, 0, parts[count - 1], nu, inner);
  Laurent total;
  for (auto& shape : inner) {
    // The no-2x2 condition is nu_i >= lambda_{i+1} - 1, enforced by the bounds.
    Laurent w = strip_weight(lambda, shape);
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    total += w * character_rec(shape, parts, count - 1, memo);
  }
  memo.emplace(key, total);
  return total;
}

// Distinct nonzero rationals other than +-1, of increasing height.
std::vector<mpq_class> sample_points(std::size_t count) {
  std::vector<mpq_class> out;
  for (long h = 2; out.size() < count; ++h) {
    for (long b = 1; b <= h && out.size() < count; ++b) {
      long a = h;
      if (std::gcd(a, b) != 1) continue;
      for (int sign : {1, -1}) {
        out.emplace_back(sign * a, b);
        if (b != a) out.emplace_back(sign * b, a);
      }
    }
  }
  out.resize(count);
  return out;
}

struct EvaluatedTable {
  QMatrix x;  // x[shape][class]
  QMatrix y;  // inverse: y[class][shape]
};

const EvaluatedTable& evaluated_table(int n, const mpq_class& point) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, mpq_class>, EvaluatedTable> memo;
  const auto key = std::make_pair(n, point);
  {
    std::shared_lock lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const CharacterTable& table = [&]() -> const CharacterTable& {
    static std::map<int, CharacterTable> tables;
    static std::mutex table_mutex;
    std::lock_guard lock(table_mutex);
    auto it = tables.find(n);
    if (it == tables.end()) it = tables.emplace(n, character_table(n)).first;
    return it->second;
  }();
  EvaluatedTable e;
  e.x.resize(table.shapes.size());
  for (std::size_t i = 0; i < table.shapes.size(); ++i)
    for (const auto& v : table.values[i]) e.x[i].push_back(v.evaluate(point));
  auto inv = exact::invert(e.x);
  if (!inv) throw Error(ErrorKind::NonzeroResidual, "character table singular at q=" + point.get_str());
  e.y = std::move(*inv);
  std::unique_lock lock(mutex);
  return memo.emplace(key, std::move(e)).first->second;
}

}  // namespace

Partition full_cycle_type(int n, const Partition& reduced) {
  std::vector<int> parts;
  for (int p : reduced.parts()) parts.push_back(p + 1);
  while (static_cast<int>(parts.size()) < n - reduced.size()) parts.push_back(1);
  return Partition(parts);
}

Laurent character_value(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size())
    throw Error(ErrorKind::InvalidArgument, "shape and cycle type of different sizes");
  std::map<std::pair<std::vector<int>, std::size_t>, Laurent> memo;
  return character_rec(lambda.parts(), cycle_type.parts(), cycle_type.parts().size(), memo);
}

CharacterTable character_table(int n) {
  CharacterTable t;
  t.n = n;
  t.shapes = combinat::partitions_of(n);
  std::vector<Partition> full = combinat::partitions_of(n);
  for (const auto& rho : full) {
    std::vector<int> reduced;
    for (int p : rho.parts())
      if (p > 1) reduced.push_back(p - 1);
    t.classes.emplace_back(reduced);
  }
  for (const auto& lambda : t.shapes) {
    std::vector<Laurent> row;
    for (const auto& rho : full) row.push_back(character_value(lambda, rho));
    t.values.push_back(std::move(row));
  }
  return t;
}

std::map<Partition, Laurent> class_product_via_characters(int n, const Partition& mu, const Partition& nu) {
  std::map<Partition, Laurent> out;
  if (mu.size() + mu.length() > n || nu.size() + nu.length() > n) return out;
  const CharacterTable t = [&] {
    CharacterTable skeleton;
    skeleton.shapes = combinat::partitions_of(n);
    for (const auto& rho : skeleton.shapes) {
      std::vector<int> reduced;
      for (int p : rho.parts())
        if (p > 1) reduced.push_back(p - 1);
      skeleton.classes.emplace_back(reduced);
    }
    return skeleton;
  }();
  auto index_of = [&](const Partition& c) {
    for (std::size_t k = 0; k < t.classes.size(); ++k)
      if (t.classes[k] == c) return k;
    throw Error(ErrorKind::InvalidArgument, "class " + c.to_string() + " absent from S_" + std::to_string(n));
  };
  const std::size_t im = index_of(mu), in = index_of(nu), i0 = index_of(Partition());
  const int big_n = n * (n - 1) / 2;
  const int lo = mu.size() + nu.size() - 2 * big_n, hi = big_n;
  const auto points = sample_points(static_cast<std::size_t>(hi - lo + 1) + 2);

  std::vector<std::vector<mpq_class>> values(t.classes.size());
  for (const auto& point : points) {
    const EvaluatedTable& e = evaluated_table(n, point);
    for (std::size_t l = 0; l < t.classes.size(); ++l) {
      mpq_class acc = 0;
      for (std::size_t s = 0; s < t.shapes.size(); ++s) {
        if (e.y[im][s] == 0 || e.y[in][s] == 0) continue;
        acc += e.x[s][l] * e.y[im][s] * e.y[in][s] / e.y[i0][s];
      }
      acc *= Laurent::q_power(mu.size() + nu.size() - t.classes[l].size()).evaluate(point);
      values[l].push_back(acc);
    }
  }
  for (std::size_t l = 0; l < t.classes.size(); ++l) {
    auto phi = exact::reconstruct_laurent(lo, hi, points, values[l]);
    if (!phi)
      throw Error(ErrorKind::NonIntegral, "class product coefficient on " + t.classes[l].to_string() +
                                              " is not a Laurent polynomial in the expected window");
    if (!phi->is_zero()) out.emplace(t.classes[l], std::move(*phi));
  }
  return out;
}

}  // namespace fhq::hecke
