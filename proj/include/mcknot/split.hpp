// Copyright 2026 The mcknot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Splits: non-crossing perfect matchings of 2n points on a circle, labeled
// 0..2n-1 clockwise.  A split is the smoothing of an n-crossing; the same
// type also serves as the exterior closure of a single-crossing diagram.
//
// An overstrand is a chord through boundary gaps g and g+n, where gap g sits
// immediately before point g.  Walking the chord from gap g, the points
// g..g+n-1 are on its east (clockwise) side and the rest on its west side.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mcknot {

class Split {
 public:
  Split() = default;

  /// Validates that `partner` is a fixed-point-free involution without
  /// interleaved pairs.
  static Split from_partner(std::vector<int> partner) {
    Split s;
    const int m = static_cast<int>(partner.size());
    if (m == 0 || m % 2 != 0) throw std::invalid_argument("split needs an even, positive number of points");
    s.partner_.resize(partner.size());
    for (int p = 0; p < m; ++p) {
      const int q = partner[static_cast<std::size_t>(p)];
      if (q < 0 || q >= m || q == p || partner[static_cast<std::size_t>(q)] != p)
        throw std::invalid_argument("split: point " + std::to_string(p) + " is not matched exactly once");
      s.partner_[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(q);
    }
    if (!s.noncrossing()) throw std::invalid_argument("split: pairs interleave");
    return s;
  }

  static Split from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw std::invalid_argument("split order must be positive");
    std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || a == b)
        throw std::invalid_argument("split: endpoint out of range");
      if (partner[static_cast<std::size_t>(a)] != -1 || partner[static_cast<std::size_t>(b)] != -1)
        throw std::invalid_argument("split: duplicate endpoint");
      partner[static_cast<std::size_t>(a)] = b;
      partner[static_cast<std::size_t>(b)] = a;
    }
    if (static_cast<int>(pairs.size()) != n) throw std::invalid_argument("split: dangling endpoint");
    return from_partner(std::move(partner));
  }

  /// "(0,1)(2,3)(4,5)"; commas between pairs are tolerated.
  static Split parse(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t i = 0;
    auto skip = [&]() {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
    };
    auto number = [&]() {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("malformed split: " + text);
      return std::stoi(text.substr(start, i - start));
    };
    skip();
    while (i < text.size()) {
      if (text[i] != '(') throw std::invalid_argument("malformed split: " + text);
      ++i;
      int a = number();
      skip();
      int b = number();
      skip();
      if (i >= text.size() || text[i] != ')') throw std::invalid_argument("malformed split: " + text);
      ++i;
      pairs.emplace_back(a, b);
      skip();
    }
    return from_pairs(static_cast<int>(pairs.size()), pairs);
  }

  int order() const { return static_cast<int>(partner_.size()) / 2; }
  int points() const { return static_cast<int>(partner_.size()); }
  int partner(int p) const { return partner_[static_cast<std::size_t>(p)]; }
  const std::vector<std::int8_t>& partners() const { return partner_; }

  /// Canonical pair list: (min, max), sorted by first coordinate.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < points(); ++p)
      if (p < partner(p)) out.emplace_back(p, partner(p));
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (auto [a, b] : pairs()) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return out;
  }

  /// p -> p + k (mod 2n).
  Split rotated(int k) const {
    const int m = points();
    std::vector<int> partner(partner_.size());
    for (int p = 0; p < m; ++p) partner[static_cast<std::size_t>(((p + k) % m + m) % m)] = ((this->partner(p) + k) % m + m) % m;
    return from_partner_unchecked(partner);
  }

  /// Reflection through the diameter at point 0: p -> -p (mod 2n).
  Split flipped() const {
    const int m = points();
    std::vector<int> partner(partner_.size());
    for (int p = 0; p < m; ++p) partner[static_cast<std::size_t>((m - p) % m)] = (m - this->partner(p)) % m;
    return from_partner_unchecked(partner);
  }

  friend bool operator==(const Split&, const Split&) = default;
  friend auto operator<=>(const Split& a, const Split& b) { return a.pairs() <=> b.pairs(); }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : partner_) h = (h ^ static_cast<std::uint8_t>(v)) * 1099511628211ull;
    return h;
  }

 private:
  static Split from_partner_unchecked(const std::vector<int>& partner) {
    Split s;
    s.partner_.assign(partner.begin(), partner.end());
    return s;
  }

  bool noncrossing() const {
    for (int a = 0; a < points(); ++a) {
      const int b = partner(a);
      if (b < a) continue;
      for (int c = a + 1; c < b; ++c) {
        const int d = partner(c);
        if (d < a || d > b) return false;
      }
    }
    return true;
  }

  std::vector<std::int8_t> partner_;
};

struct SplitHash {
  std::size_t operator()(const Split& s) const { return s.hash(); }
};

inline constexpr int kMaxSplitOrder = 10;

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

namespace detail {

// Each stack entry is a half-open interval still to be matched; `done` runs
// once per completed matching.
inline void fill_noncrossing(std::vector<int>& partner, std::vector<std::pair<int, int>>& stack,
                             const std::function<void()>& done) {
  if (stack.empty()) {
    done();
    return;
  }
  auto [lo, hi] = stack.back();
  stack.pop_back();
  if (lo >= hi) {
    fill_noncrossing(partner, stack, done);
    stack.emplace_back(lo, hi);
    return;
  }
  for (int q = lo + 1; q < hi; q += 2) {
    partner[static_cast<std::size_t>(lo)] = q;
    partner[static_cast<std::size_t>(q)] = lo;
    // Inside (lo, q) first so the pair list grows in lexicographic order.
    stack.emplace_back(q + 1, hi);
    stack.emplace_back(lo + 1, q);
    fill_noncrossing(partner, stack, done);
    stack.pop_back();
    stack.pop_back();
  }
  stack.emplace_back(lo, hi);
}

}  // namespace detail

/// Every split of order n in canonical (lexicographic pair-list) order.
inline std::vector<Split> enumerate_splits(int n) {
  if (n < 1 || n > kMaxSplitOrder) throw std::out_of_range("enumerate_splits: n must be in 1..10");
  std::vector<Split> out;
  out.reserve(catalan(n));
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  std::vector<std::pair<int, int>> stack{{0, 2 * n}};
  detail::fill_noncrossing(partner, stack, [&]() { out.push_back(Split::from_partner(partner)); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Replaces arcs a and b (indices into pairs()) by the other non-crossing
/// pairing of their four endpoints, if that keeps the split non-crossing.
inline std::optional<Split> try_split_move(const Split& s, int a, int b) {
  const auto pairs = s.pairs();
  if (a < 0 || b < 0 || a >= static_cast<int>(pairs.size()) || b >= static_cast<int>(pairs.size()) || a == b)
    return std::nullopt;
  std::array<int, 4> e{pairs[static_cast<std::size_t>(a)].first, pairs[static_cast<std::size_t>(a)].second,
                       pairs[static_cast<std::size_t>(b)].first, pairs[static_cast<std::size_t>(b)].second};
  std::sort(e.begin(), e.end());
  std::vector<int> partner(s.partners().begin(), s.partners().end());
  // The current pairing is either (e0e1)(e2e3) or (e0e3)(e1e2); swap to the other.
  auto set = [&](int x, int y) {
    partner[static_cast<std::size_t>(x)] = y;
    partner[static_cast<std::size_t>(y)] = x;
  };
  if (s.partner(e[0]) == e[1]) {
    set(e[0], e[3]);
    set(e[1], e[2]);
  } else if (s.partner(e[0]) == e[3]) {
    set(e[0], e[1]);
    set(e[2], e[3]);
  } else {
    return std::nullopt;
  }
  try {
    return Split::from_partner(std::move(partner));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

inline Split split_move(const Split& s, int a, int b) {
  auto out = try_split_move(s, a, b);
  if (!out) throw std::invalid_argument("split_move: arcs " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
  return *out;
}

/// All splits one move away, deduplicated, canonical order.
inline std::vector<Split> split_neighbors(const Split& s) {
  std::vector<Split> out;
  for (int a = 0; a < s.order(); ++a)
    for (int b = a + 1; b < s.order(); ++b)
      if (auto t = try_split_move(s, a, b)) out.push_back(*t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Number of cycles in the union of two matchings on the same points.
inline int closure_count(const Split& s, const Split& t) {
  if (s.order() != t.order()) throw std::invalid_argument("closure_count: mismatched orders");
  const int m = s.points();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  int cycles = 0;
  for (int start = 0; start < m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    int p = start;
    do {
      seen[static_cast<std::size_t>(p)] = 1;
      const int q = s.partner(p);
      seen[static_cast<std::size_t>(q)] = 1;
      p = t.partner(q);
    } while (p != start);
  }
  return cycles;
}

/// Immutable table of every split of one order with its move adjacency.
/// Shared process-wide; safe for concurrent readers.
class SplitCatalog {
 public:
  static const SplitCatalog& of(int n) {
    if (n < 1 || n > kMaxSplitOrder) throw std::out_of_range("split catalog: n must be in 1..10");
    static std::array<std::once_flag, kMaxSplitOrder + 1> flags;
    static std::array<std::unique_ptr<SplitCatalog>, kMaxSplitOrder + 1> tables;
    std::call_once(flags[static_cast<std::size_t>(n)],
                   [n]() { tables[static_cast<std::size_t>(n)].reset(new SplitCatalog(n)); });
    return *tables[static_cast<std::size_t>(n)];
  }

  int order() const { return n_; }
  std::size_t size() const { return splits_.size(); }
  const std::vector<Split>& splits() const { return splits_; }
  const Split& at(int i) const { return splits_[static_cast<std::size_t>(i)]; }
  int index(const Split& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::invalid_argument("split not of this order: " + s.to_string());
    return it->second;
  }
  int index_of_partners(const std::vector<int>& partner) const {
    auto it = index_.find(Split::from_partner(partner));
    if (it == index_.end()) throw std::invalid_argument("split not of this order");
    return it->second;
  }
  const std::vector<int>& neighbors(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }

 private:
  explicit SplitCatalog(int n) : n_(n), splits_(enumerate_splits(n)) {
    for (std::size_t i = 0; i < splits_.size(); ++i) index_.emplace(splits_[i], static_cast<int>(i));
    adjacency_.resize(splits_.size());
    for (std::size_t i = 0; i < splits_.size(); ++i)
      for (const auto& t : split_neighbors(splits_[i])) adjacency_[i].push_back(index_.at(t));
  }

  int n_;
  std::vector<Split> splits_;
  std::unordered_map<Split, int, SplitHash> index_;
  std::vector<std::vector<int>> adjacency_;
};

/// Breadth-first distances over a catalog, caching one row per source.
/// Not thread-safe; give each worker its own instance.
class SplitGraph {
 public:
  explicit SplitGraph(int n) : catalog_(&SplitCatalog::of(n)) {}

  int order() const { return catalog_->order(); }
  const SplitCatalog& catalog() const { return *catalog_; }

  /// Distances from split i to every split; -1 marks unreachable.
  const std::vector<int>& distances_from(int i) {
    auto it = rows_.find(i);
    if (it != rows_.end()) return it->second;
    std::vector<int> dist(catalog_->size(), -1);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(i)] = 0;
    frontier.push(i);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v : catalog_->neighbors(u)) {
        if (dist[static_cast<std::size_t>(v)] != -1) continue;
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        frontier.push(v);
      }
    }
    return rows_.emplace(i, std::move(dist)).first->second;
  }

  int distance(int i, int j) { return distances_from(i)[static_cast<std::size_t>(j)]; }
  int distance(const Split& s, const Split& t) { return distance(catalog_->index(s), catalog_->index(t)); }

 private:
  const SplitCatalog* catalog_;
  std::unordered_map<int, std::vector<int>> rows_;
};

/// Minimum number of split moves from s to t (breadth-first search).
inline int split_distance(const Split& s, const Split& t) {
  if (s.order() != t.order()) throw std::invalid_argument("split_distance: mismatched orders");
  if (s == t) return 0;
  std::unordered_map<Split, int, SplitHash> dist{{s, 0}};
  std::queue<Split> frontier;
  frontier.push(s);
  while (!frontier.empty()) {
    Split u = frontier.front();
    frontier.pop();
    const int du = dist.at(u);
    for (auto& v : split_neighbors(u)) {
      if (dist.count(v)) continue;
      if (v == t) return du + 1;
      dist.emplace(v, du + 1);
      frontier.push(std::move(v));
    }
  }
  throw std::logic_error("split_distance: split-move graph disconnected");
}

/// Exterior splits are drawn outside the bounding circle; interleaving does
/// not depend on the side, so the reflected matching has the same labels.
inline Split reflect(const Split& s) { return s; }

struct OverstrandPos {
  int gap = 0;

  /// The chord through gaps g and g+n is the same for both; pick g < n.
  OverstrandPos canonical(int n) const { return OverstrandPos{((gap % n) + n) % n}; }
  /// Rotation clockwise past k endpoints (k may be negative).
  OverstrandPos rotated(int k, int n) const { return OverstrandPos{(((gap + k) % (2 * n)) + 2 * n) % (2 * n)}; }
  /// True if point p is on the east (clockwise-from-entry) side.
  bool east(int p, int n) const { return ((p - gap) % (2 * n) + 2 * n) % (2 * n) < n; }

  friend bool operator==(const OverstrandPos&, const OverstrandPos&) = default;
};

/// Indices (into s.pairs()) of arcs crossed by o, ordered along o from its
/// entry gap.
inline std::vector<int> crossed_arcs(const Split& s, OverstrandPos o) {
  const int n = s.order();
  const auto pairs = s.pairs();
  std::vector<std::pair<int, int>> keyed;  // (clockwise offset of east endpoint, arc)
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (o.east(a, n) == o.east(b, n)) continue;
    const int e = o.east(a, n) ? a : b;
    keyed.emplace_back(((e - o.gap) % (2 * n) + 2 * n) % (2 * n), static_cast<int>(i));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (auto [_, i] : keyed) out.push_back(i);
  return out;
}

/// |I(O,T)|: arcs with exactly one endpoint on the east side of o.
inline int intersections(const Split& s, OverstrandPos o) {
  const int n = s.order();
  int count = 0;
  for (int p = 0; p < s.points(); ++p)
    if (o.east(p, n) && !o.east(s.partner(p), n)) ++count;
  return count;
}

/// |I(O,O',T)|: arcs crossed by both chords.
inline int common_intersections(const Split& s, OverstrandPos o, OverstrandPos o2) {
  const int n = s.order();
  int count = 0;
  for (int p = 0; p < s.points(); ++p) {
    const int q = s.partner(p);
    if (q < p) continue;
    if (o.east(p, n) != o.east(q, n) && o2.east(p, n) != o2.east(q, n)) ++count;
  }
  return count;
}

/// Increasing / level / decreasing step counts over a window of rotations.
struct RotationCounts {
  int increasing = 0;
  int level = 0;
  int decreasing = 0;
};

struct RotationProfile {
  /// |I(r_j, T)| for j = 0..ceil(n/2).
  std::vector<int> clockwise;
  /// |I(rbar_j, T)| for j = 0..floor(n/2); entry 0 is r_0.
  std::vector<int> counterclockwise;

  static RotationCounts count(const std::vector<int>& seq, std::size_t steps) {
    RotationCounts c;
    for (std::size_t j = 1; j <= steps && j < seq.size(); ++j) {
      const int diff = seq[j] - seq[j - 1];
      if (diff > 0) ++c.increasing;
      else if (diff < 0) ++c.decreasing;
      else ++c.level;
    }
    return c;
  }
  RotationCounts clockwise_counts(std::size_t steps) const { return count(clockwise, steps); }
  RotationCounts counterclockwise_counts(std::size_t steps) const { return count(counterclockwise, steps); }
};

inline RotationProfile rotation_profile(const Split& s, OverstrandPos o) {
  const int n = s.order();
  RotationProfile prof;
  for (int j = 0; j <= (n + 1) / 2; ++j) prof.clockwise.push_back(intersections(s, o.rotated(j, n)));
  for (int j = 0; j <= n / 2; ++j) prof.counterclockwise.push_back(intersections(s, o.rotated(-j, n)));
  return prof;
}

/// Points on the boundary of each complementary region of the chord
/// diagram (chords plus bounding circle).  Face f is traced by starting on
/// the circle segment after point f's gap and alternately following the
/// circle clockwise and a chord.
inline std::vector<std::vector<int>> faces(const Split& s) {
  const int m = s.points();
  std::vector<char> used(static_cast<std::size_t>(m), 0);  // circle segment (p, p+1)
  std::vector<std::vector<int>> out;
  for (int start = 0; start < m; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<int> face;
    int seg = start;
    do {
      used[static_cast<std::size_t>(seg)] = 1;
      const int next = (seg + 1) % m;
      face.push_back(seg);
      face.push_back(next);
      seg = s.partner(next);
    } while (seg != start);
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    out.push_back(std::move(face));
  }
  return out;
}

inline bool share_face(const Split& s, int a, int b) {
  for (const auto& f : faces(s))
    if (std::binary_search(f.begin(), f.end(), a) && std::binary_search(f.begin(), f.end(), b)) return true;
  return false;
}

/// Arc surgery with respect to overstrand o.  `east` must be two separated
/// endpoints on the east side sharing a region, `west` likewise on the west
/// side.  Crossed arcs are deleted, the east and west pairs joined, and the
/// remaining freed endpoints rematched so every new arc crosses o.
inline Split arc_surgery(const Split& s, OverstrandPos o, std::pair<int, int> east, std::pair<int, int> west) {
  const int n = s.order();
  const int m = s.points();
  auto in_range = [&](int p) { return p >= 0 && p < m; };
  for (int p : {east.first, east.second, west.first, west.second})
    if (!in_range(p)) throw std::invalid_argument("arc surgery: endpoint out of range");
  if (east.first == east.second || west.first == west.second) throw std::invalid_argument("arc surgery: repeated endpoint");
  if (!o.east(east.first, n) || !o.east(east.second, n)) throw std::invalid_argument("east pair not east of the overstrand");
  if (o.east(west.first, n) || o.east(west.second, n)) throw std::invalid_argument("west pair not west of the overstrand");
  auto separated = [&](int p) { return o.east(p, n) != o.east(s.partner(p), n); };
  if (!separated(east.first) || !separated(east.second)) throw std::invalid_argument("east pair not separated");
  if (!separated(west.first) || !separated(west.second)) throw std::invalid_argument("west pair not separated");
  if (!share_face(s, east.first, east.second)) throw std::invalid_argument("east pair does not share a region");
  if (!share_face(s, west.first, west.second)) throw std::invalid_argument("west pair does not share a region");

  std::vector<int> partner(s.partners().begin(), s.partners().end());
  std::vector<int> free_east, free_west;
  for (int p = 0; p < m; ++p) {
    if (!separated(p)) continue;
    partner[static_cast<std::size_t>(p)] = -1;
    if (p == east.first || p == east.second || p == west.first || p == west.second) continue;
    (o.east(p, n) ? free_east : free_west).push_back(p);
  }
  auto join = [&](int a, int b) {
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  };
  join(east.first, east.second);
  join(west.first, west.second);
  // Order both sides by distance from the entry gap along the chord.
  auto offset = [&](int p) { return ((p - o.gap) % m + m) % m; };
  std::sort(free_east.begin(), free_east.end(), [&](int a, int b) { return offset(a) < offset(b); });
  std::sort(free_west.begin(), free_west.end(), [&](int a, int b) { return offset(a) > offset(b); });
  if (free_east.size() != free_west.size()) throw std::logic_error("arc surgery: unbalanced separated endpoints");
  for (std::size_t i = 0; i < free_east.size(); ++i) join(free_east[i], free_west[i]);
  return Split::from_partner(std::move(partner));
}

}  // namespace mcknot
