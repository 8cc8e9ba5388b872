#pragma once

// Origamis as pairs of permutations of the squares.
//
// Permutations compose left to right: a.then(b) applies a first, then b.
// With this convention [g, h] = g^-1 h^-1 g h for g = (2 3), h = (1 2)
// is the 3-cycle (1 3 2), matching the L-shaped three-square origami.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ramcover/error.hpp"

namespace ramcover {

// A bijection on {1..n}; stored 0-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n) : images_(n) { std::iota(images_.begin(), images_.end(), 0); }

  // images[i] is the 1-based image of i + 1.
  static Permutation from_images(const std::vector<std::size_t>& one_based) {
    Permutation p;
    p.images_.reserve(one_based.size());
    std::vector<bool> seen(one_based.size(), false);
    for (std::size_t v : one_based) {
      if (v < 1 || v > one_based.size() || seen[v - 1])
        throw InvalidInput("images do not form a permutation");
      seen[v - 1] = true;
      p.images_.push_back(v - 1);
    }
    return p;
  }

  // Product of disjoint 1-based cycles on n points.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
    Permutation p(n);
    std::vector<bool> used(n, false);
    for (const auto& cyc : cycles) {
      for (std::size_t v : cyc) {
        if (v < 1 || v > n) throw InvalidInput("cycle entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (used[v - 1]) throw InvalidInput("cycles are not disjoint at " + std::to_string(v));
        used[v - 1] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i) p.images_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
    }
    return p;
  }

  std::size_t size() const { return images_.size(); }
  // 0-based image.
  std::size_t operator()(std::size_t i) const { return images_[i]; }

  Permutation then(const Permutation& next) const {
    if (next.size() != size()) throw InvalidInput("permutations act on different sets");
    Permutation r;
    r.images_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) r.images_[i] = next.images_[images_[i]];
    return r;
  }
  Permutation inverse() const {
    Permutation r;
    r.images_.resize(size());
    for (std::size_t i = 0; i < size(); ++i) r.images_[images_[i]] = i;
    return r;
  }
  // sigma^-1 this sigma (left to right), i.e. the relabeling by sigma.
  Permutation conjugated_by(const Permutation& sigma) const {
    return sigma.inverse().then(*this).then(sigma);
  }
  bool is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  // Disjoint cycles (1-based), each starting at its smallest element,
  // ordered by that element. Fixed points included.
  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(size(), false);
    for (std::size_t start = 0; start < size(); ++start) {
      if (seen[start]) continue;
      std::vector<std::size_t> cyc;
      for (std::size_t i = start; !seen[i]; i = images_[i]) {
        seen[i] = true;
        cyc.push_back(i + 1);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  // Cycle lengths in ascending order, fixed points as 1-cycles.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    for (const auto& c : cycles()) lengths.push_back(c.size());
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  // Disjoint-cycle notation without fixed points, e.g. "(1 3 2)"; the
  // identity prints as "()".
  std::string to_string() const {
    std::string out;
    for (const auto& c : cycles()) {
      if (c.size() == 1) continue;
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i]);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  static Permutation parse(std::size_t n, std::string_view text);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

inline Permutation Permutation::parse(std::size_t n, std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation '" + std::string(text) + "'");
    ++i;
    std::vector<std::size_t> cyc;
    while (true) {
      skip();
      if (i >= text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i || i - start > 9) throw ParseError("bad cycle entry in '" + std::string(text) + "'");
      cyc.push_back(std::stoul(std::string(text.substr(start, i - start))));
    }
    cycles.push_back(std::move(cyc));
    skip();
  }
  try {
    return from_cycles(n, cycles);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

// n unit squares glued by `right` (step one square right) and `up`.
class OrigamiDiagram {
 public:
  OrigamiDiagram(Permutation right, Permutation up) : right_(std::move(right)), up_(std::move(up)) {
    if (right_.size() == 0) throw InvalidInput("an origami needs at least one square");
    if (right_.size() != up_.size()) throw InvalidInput("right and up act on different square counts");
  }

  std::size_t squares() const { return right_.size(); }
  const Permutation& right() const { return right_; }
  const Permutation& up() const { return up_; }

  OrigamiDiagram relabeled(const Permutation& sigma) const {
    return {right_.conjugated_by(sigma), up_.conjugated_by(sigma)};
  }

  // "n; right=cycles; up=cycles"
  std::string to_string() const {
    return std::to_string(squares()) + "; right=" + right_.to_string() + "; up=" + up_.to_string();
  }
  static OrigamiDiagram parse(std::string_view text);

  friend bool operator==(const OrigamiDiagram&, const OrigamiDiagram&) = default;

 private:
  Permutation right_;
  Permutation up_;
};

inline OrigamiDiagram OrigamiDiagram::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (parts.size() != 3) throw ParseError("expected 'n; right=...; up=...', got '" + std::string(text) + "'");
  const std::string_view count = parts[0];
  if (count.empty() || count.size() > 9 ||
      !std::all_of(count.begin(), count.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("bad square count '" + std::string(count) + "'");
  const std::size_t n = std::stoul(std::string(count));
  if (n == 0) throw ParseError("an origami needs at least one square");
  auto field = [&](std::string_view part, std::string_view key) {
    if (part.substr(0, key.size()) != key) throw ParseError("expected '" + std::string(key) + "' in '" + std::string(part) + "'");
    return Permutation::parse(n, part.substr(key.size()));
  };
  return {field(parts[1], "right="), field(parts[2], "up=")};
}

// g^-1 h^-1 g h with g = right, h = up, applied left to right.
inline Permutation commutator(const OrigamiDiagram& d) {
  return d.right().inverse().then(d.up().inverse()).then(d.right()).then(d.up());
}

inline std::vector<std::size_t> monodromy_cycle_type(const OrigamiDiagram& d) {
  return commutator(d).cycle_type();
}

inline std::size_t vertex_count(const OrigamiDiagram& d) { return commutator(d).cycles().size(); }

inline bool is_connected(const OrigamiDiagram& d) {
  const std::size_t n = d.squares();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t next : {d.right()(s), d.up()(s)}) {
      if (!seen[next]) {
        seen[next] = true;
        ++reached;
        stack.push_back(next);
      }
    }
  }
  return reached == n;
}

// Euler: V - 2n + n = 2 - 2g.
inline int genus(const OrigamiDiagram& d) {
  if (!is_connected(d)) throw NotConnected("origami " + d.to_string() + " is disconnected");
  const long v = static_cast<long>(vertex_count(d));
  const long twice = 2 - v + static_cast<long>(d.squares());
  if (twice % 2 != 0 || twice < 0) throw PipelineError("Euler characteristic is not even");
  return static_cast<int>(twice / 2);
}

// 2g-1 squares in alternating up/right steps:
//   right = (2 3)(4 5)...(2g-2 2g-1),  up = (1 2)(3 4)...(2g-3 2g-2).
inline OrigamiDiagram staircase(int g) {
  if (g < 1) throw InvalidGenus("staircase genus must be at least 1, got " + std::to_string(g));
  const auto n = static_cast<std::size_t>(2 * g - 1);
  std::vector<std::vector<std::size_t>> right, up;
  for (std::size_t a = 2; a + 1 <= n; a += 2) right.push_back({a, a + 1});
  for (std::size_t a = 1; a + 1 <= n - 1; a += 2) up.push_back({a, a + 1});
  return {Permutation::from_cycles(n, right), Permutation::from_cycles(n, up)};
}

}  // namespace ramcover
