#include "fhq/perm/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "fhq/error.hpp"

namespace fhq::perm {

using combinat::Partition;

Permutation::Permutation(int n) {
  if (n < 0 || n > kMaxDegree)
    throw Error(ErrorKind::SizeGuard, "permutation degree " + std::to_string(n) + " outside 0.." +
                                          std::to_string(kMaxDegree));
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < kMaxDegree; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_one_line(std::span<const int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
      throw Error(ErrorKind::InvalidArgument, "one-line notation is not a bijection of 1..n");
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_cycles(int n, std::string_view text) {
  Permutation p(n);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw Error(ErrorKind::InvalidArgument, "expected '(' in cycle notation");
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "unterminated cycle");
    std::vector<int> cycle;
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    std::string tok;
    while (in >> tok) {
      for (char& ch : tok)
        if (ch == ',') ch = ' ';
      std::istringstream sub(tok);
      int v;
      while (sub >> v) cycle.push_back(v);
    }
    for (int v : cycle) {
      if (v < 1 || v > n || used[v - 1])
        throw Error(ErrorKind::InvalidArgument, "cycle entries must be distinct points of 1..n");
      used[v - 1] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.img_[cycle[k] - 1] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()] - 1);
    pos = close + 1;
  }
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw Error(ErrorKind::IndexOutOfRange, "transposition indices out of range");
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) out.push_back(img_[i] + 1);
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (n_ != other.n_) throw Error(ErrorKind::RankMismatch, "composing permutations of different degree");
  Permutation p(n_);
  for (int i = 0; i < n_; ++i) p.img_[i] = img_[other.img_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(n_);
  for (int i = 0; i < n_; ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::simple_times(int i) const {
  Permutation p = *this;
  for (int k = 0; k < n_; ++k) {
    if (p.img_[k] == i - 1)
      p.img_[k] = static_cast<std::uint8_t>(i);
    else if (p.img_[k] == i)
      p.img_[k] = static_cast<std::uint8_t>(i - 1);
  }
  return p;
}

bool Permutation::has_left_descent(int i) const {
  // i+1 appears before i in one-line notation.
  for (int k = 0; k < n_; ++k) {
    if (img_[k] == i - 1) return false;
    if (img_[k] == i) return true;
  }
  return false;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      first = false;
      out += std::to_string(j + 1);
      j = img_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.degree(); ++i)
    for (int j = i + 1; j <= w.degree(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> reversed;
  Permutation cur = w;
  for (;;) {
    int i = 1;
    while (i < cur.degree() && !cur.has_right_descent(i)) ++i;
    if (i >= cur.degree()) break;
    reversed.push_back(i);
    cur = cur.times_simple(i);
  }
  return {reversed.rbegin(), reversed.rend()};
}

Permutation from_word(int n, std::span<const int> word) {
  Permutation p(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "generator index out of range");
    p = p.times_simple(i);
  }
  return p;
}

Partition cycle_type(const Permutation& w) {
  std::vector<int> lengths;
  std::vector<bool> seen(static_cast<std::size_t>(w.degree()), false);
  for (int i = 1; i <= w.degree(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0;
    for (int j = i; !seen[j - 1]; j = w(j)) {
      seen[j - 1] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

Partition reduced_cycle_type(const Permutation& w) {
  std::vector<int> parts = cycle_type(w).parts();
  for (int& p : parts) --p;
  return Partition(std::move(parts));
}

std::vector<Permutation> all_permutations(int n, int max_n) {
  if (n > max_n)
    throw Error(ErrorKind::SizeGuard, "S_" + std::to_string(n) + " exceeds guard " + std::to_string(max_n));
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

namespace {

// Assigns cycles to points in increasing order of their smallest element, so
// each permutation of the class is produced exactly once.
void build_cycles(std::vector<int>& img, std::vector<bool>& used, std::map<int, int>& lengths,
                  int n, std::vector<Permutation>& out) {
  int start = 0;
  while (start < n && used[start]) ++start;
  if (start == n) {
    std::vector<int> line(img.begin(), img.end());
    for (int& v : line) ++v;
    out.push_back(Permutation::from_one_line(line));
    return;
  }
  used[start] = true;
  std::vector<int> lens;
  for (auto& [len, count] : lengths)
    if (count > 0) lens.push_back(len);
  for (int len : lens) {
    --lengths[len];
    std::vector<int> cycle{start};
    // Choose the remaining len-1 points of the cycle in order.
    std::function<void()> extend = [&]() {
      if (static_cast<int>(cycle.size()) == len) {
        for (int k = 0; k < len; ++k) img[cycle[k]] = cycle[(k + 1) % len];
        build_cycles(img, used, lengths, n, out);
        return;
      }
      for (int p = start + 1; p < n; ++p) {
        if (used[p]) continue;
        used[p] = true;
        cycle.push_back(p);
        extend();
        cycle.pop_back();
        used[p] = false;
      }
    };
    extend();
    ++lengths[len];
  }
  used[start] = false;
}

}  // namespace

std::vector<Permutation> class_elements(int n, const Partition& mu) {
  if (n > Permutation::kMaxDegree)
    throw Error(ErrorKind::SizeGuard, "degree " + std::to_string(n) + " exceeds " +
                                          std::to_string(Permutation::kMaxDegree));
  if (mu.size() + mu.length() > n) return {};
  std::map<int, int> lengths;
  for (int p : mu.parts()) ++lengths[p + 1];
  lengths[1] += n - mu.size() - mu.length();
  std::vector<int> img(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<Permutation> out;
  build_cycles(img, used, lengths, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> minimal_length_class_reps(int n, const Partition& mu) {
  auto all = class_elements(n, mu);
  if (all.empty()) return all;
  int best = length(all.front());
  for (const auto& w : all) best = std::min(best, length(w));
  std::vector<Permutation> out;
  for (const auto& w : all)
    if (length(w) == best) out.push_back(w);
  return out;
}

Permutation standard_class_rep(int n, const Partition& mu) {
  if (mu.size() + mu.length() > n)
    throw Error(ErrorKind::InvalidArgument, "no element of reduced cycle type " + mu.to_string() +
                                                " in S_" + std::to_string(n));
  Permutation p(n);
  int block = 1;
  for (int part : mu.parts()) {
    for (int i = block; i < block + part; ++i) p = p.times_simple(i);
    block += part + 1;
  }
  return p;
}

}  // namespace fhq::perm
