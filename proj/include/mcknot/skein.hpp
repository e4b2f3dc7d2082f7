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

// Crossing types and n-skein relations.
//
// A relation is built by stripping the top strand, building the relation of
// the remaining (n-1)-crossing, laying the strand back on top of every term
// and resolving each double crossing it makes as an A- or B-smoothing.
//
// Smoothing convention at a double crossing between the overstrand O and a
// crossed arc: with O running from its top endpoint to its bottom endpoint
// and the arc's east end clockwise of O's top, the A-smoothing joins O's
// upper half to the east half of the arc and O's lower half to the west
// half.  For the 2-crossing with overstrand on spokes {0, 2} this gives
// A = (0,1)(2,3) and B = (0,3)(1,2).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcknot/laurent.hpp"
#include "mcknot/split.hpp"

namespace mcknot {

inline constexpr int kMaxTypeOrder = 8;

/// Heights of the strands at spokes 0..n-1, read clockwise from the top
/// strand; spoke k + n carries the same strand as spoke k.
class CrossingType {
 public:
  CrossingType() = default;

  static CrossingType from_heights(std::vector<int> heights) {
    const int n = static_cast<int>(heights.size());
    if (n < 1) throw std::invalid_argument("crossing type is empty");
    std::vector<int> sorted = heights;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (sorted[static_cast<std::size_t>(i)] != i + 1) throw std::invalid_argument("crossing type is not a permutation of 1..n");
    if (heights[0] != 1) throw std::invalid_argument("crossing type must start with the top strand");
    CrossingType t;
    t.heights_ = std::move(heights);
    return t;
  }

  /// "13524" or "1,3,5,2,4".
  static CrossingType parse(const std::string& text) {
    std::vector<int> h;
    if (text.find(',') != std::string::npos) {
      std::size_t start = 0;
      while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        h.push_back(std::stoi(text.substr(start, end - start)));
        start = end + 1;
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw std::invalid_argument("malformed crossing type: " + text);
        h.push_back(c - '0');
      }
    }
    return from_heights(std::move(h));
  }

  static CrossingType standard(int n) {
    std::vector<int> h(static_cast<std::size_t>(n));
    std::iota(h.begin(), h.end(), 1);
    return from_heights(std::move(h));
  }

  int order() const { return static_cast<int>(heights_.size()); }
  const std::vector<int>& heights() const { return heights_; }
  int height_at(int spoke) const { return heights_[static_cast<std::size_t>(spoke % order())]; }
  /// Spoke in 0..n-1 of the strand with height h.
  int spoke_of(int h) const {
    return static_cast<int>(std::find(heights_.begin(), heights_.end(), h) - heights_.begin());
  }

  std::string to_string() const {
    std::string out;
    const bool wide = order() > 9;
    for (std::size_t i = 0; i < heights_.size(); ++i) {
      if (wide && i) out += ',';
      out += std::to_string(heights_[i]);
    }
    return out;
  }

  /// Mirror image through the diameter at spoke 0: (h0, h_{n-1}, ..., h1).
  CrossingType reflected() const {
    std::vector<int> h{heights_[0]};
    for (int k = order() - 1; k >= 1; --k) h.push_back(heights_[static_cast<std::size_t>(k)]);
    return from_heights(std::move(h));
  }

  friend bool operator==(const CrossingType&, const CrossingType&) = default;
  friend auto operator<=>(const CrossingType&, const CrossingType&) = default;

 private:
  std::vector<int> heights_;
};

/// All (n-1)! types of order n in lexicographic order.
inline std::vector<CrossingType> all_types(int n) {
  if (n < 2 || n > kMaxTypeOrder) throw std::out_of_range("all_types: n must be in 2..8");
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<CrossingType> out;
  do {
    std::vector<int> h{1};
    h.insert(h.end(), rest.begin(), rest.end());
    out.push_back(CrossingType::from_heights(std::move(h)));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

struct Removal {
  CrossingType parent;
  /// Gap of the parent crossing where the removed strand lay, aligned so
  /// that its top endpoint sits in this gap.
  OverstrandPos insertion;
};

/// Deletes the top strand, relabels heights 2..n to 1..n-1 and re-reads
/// from the new top strand.
inline Removal remove_top(const CrossingType& t) {
  const int n = t.order();
  if (n < 3) throw std::invalid_argument("remove_top needs order at least 3");
  const int p = t.spoke_of(2);
  std::vector<int> h;
  for (int j = 0; j < n - 1; ++j) h.push_back(t.height_at(1 + (p - 1 + j) % (n - 1)) - 1);
  return Removal{CrossingType::from_heights(std::move(h)), OverstrandPos{(2 * n - 1 - p) % (2 * n - 2)}};
}

/// Lays a new top strand over `parent` with its top endpoint in gap g.
inline CrossingType add_overstrand(const CrossingType& parent, OverstrandPos o) {
  const int m = parent.order();
  std::vector<int> h{1};
  for (int j = 1; j <= m; ++j) h.push_back(parent.height_at(((o.gap + j - 1) % (2 * m) + 2 * m) % (2 * m)) + 1);
  return CrossingType::from_heights(std::move(h));
}

/// Child label of parent point q when a strand is laid over an order-m
/// split at gap g.  The new strand occupies child points 0 and m + 1.
inline int overlay_label(int q, int gap, int m) {
  const int off = ((q - gap) % (2 * m) + 2 * m) % (2 * m);
  return off < m ? off + 1 : off + 2;
}

/// Lays an overstrand over `parent` at gap o and resolves the double
/// crossings it makes.  `a_smoothing[i]` chooses A at the i-th crossed arc
/// counted from the top of the overstrand.  Returns the child split on
/// 2(m+1) points with the new strand at points 0 and m+1.
inline Split resolve_overstrand(const Split& parent, OverstrandPos o, const std::vector<bool>& a_smoothing) {
  const int m = parent.order();
  const int n = m + 1;
  const auto crossed = crossed_arcs(parent, o);
  if (a_smoothing.size() != crossed.size()) throw std::invalid_argument("resolve_overstrand: one choice per crossed arc");
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  auto join = [&](int a, int b) {
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  };
  const auto pairs = parent.pairs();
  std::vector<char> is_crossed(pairs.size(), 0);
  for (int i : crossed) is_crossed[static_cast<std::size_t>(i)] = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!is_crossed[i]) join(overlay_label(pairs[i].first, o.gap, m), overlay_label(pairs[i].second, o.gap, m));
  if (crossed.empty()) {
    join(0, n);
    return Split::from_partner(std::move(partner));
  }
  // Walk the overstrand top to bottom; `open` is the boundary point whose
  // path currently enters the next crossing from above.
  int open = 0;
  for (std::size_t i = 0; i < crossed.size(); ++i) {
    auto [a, b] = pairs[static_cast<std::size_t>(crossed[i])];
    const int east = o.east(a, m) ? overlay_label(a, o.gap, m) : overlay_label(b, o.gap, m);
    const int west = o.east(a, m) ? overlay_label(b, o.gap, m) : overlay_label(a, o.gap, m);
    if (a_smoothing[i]) {
      join(open, east);
      open = west;
    } else {
      join(open, west);
      open = east;
    }
  }
  join(open, n);
  return Split::from_partner(std::move(partner));
}

struct SkeinTerm {
  Split split;
  int power = 0;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const SkeinTerm&, const SkeinTerm&) = default;
};

class SkeinRelation {
 public:
  struct Packed {
    std::uint16_t split;  // index into SplitCatalog::of(order())
    std::int16_t power;
    std::uint64_t multiplicity;

    friend bool operator==(const Packed&, const Packed&) = default;
  };

  SkeinRelation() = default;
  SkeinRelation(CrossingType type, std::vector<Packed> terms) : type_(std::move(type)), terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(), [](const Packed& x, const Packed& y) {
      return x.split != y.split ? x.split < y.split : x.power > y.power;
    });
  }

  const CrossingType& type() const { return type_; }
  int order() const { return type_.order(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Packed>& packed() const { return terms_; }

  SkeinTerm term(std::size_t i) const {
    const auto& t = terms_[i];
    return SkeinTerm{SplitCatalog::of(order()).at(t.split), t.power, t.multiplicity};
  }
  std::vector<SkeinTerm> terms() const {
    std::vector<SkeinTerm> out;
    for (std::size_t i = 0; i < terms_.size(); ++i) out.push_back(term(i));
    return out;
  }

  int high() const {
    int h = terms_.front().power;
    for (const auto& t : terms_) h = std::max<int>(h, t.power);
    return h;
  }
  int low() const {
    int l = terms_.front().power;
    for (const auto& t : terms_) l = std::min<int>(l, t.power);
    return l;
  }
  int width() const { return high() - low(); }

  std::uint64_t total_multiplicity() const {
    std::uint64_t s = 0;
    for (const auto& t : terms_) s += t.multiplicity;
    return s;
  }

  /// power -> summed multiplicity.
  std::map<int, std::uint64_t> power_histogram() const {
    std::map<int, std::uint64_t> h;
    for (const auto& t : terms_) h[t.power] += t.multiplicity;
    return h;
  }

  /// Number of distinct splits with a nonzero coefficient.
  std::size_t support_size() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (i == 0 || terms_[i].split != terms_[i - 1].split) ++k;
    return k;
  }

  /// The Laurent coefficient attached to each split index that appears.
  std::vector<std::pair<int, BasicLaurent<std::int64_t>>> split_coefficients() const {
    std::vector<std::pair<int, BasicLaurent<std::int64_t>>> out;
    for (const auto& t : terms_) {
      auto mono = BasicLaurent<std::int64_t>::monomial(static_cast<std::int64_t>(t.multiplicity), t.power);
      if (out.empty() || out.back().first != t.split) out.emplace_back(t.split, mono);
      else out.back().second += mono;
    }
    return out;
  }

 private:
  CrossingType type_;
  std::vector<Packed> terms_;
};

namespace detail {

struct OverlayOutcome {
  std::uint16_t child;
  std::int16_t delta;
  std::uint32_t count;
};

/// For every parent split of order m and every insertion gap, the child
/// splits reachable by resolving, with power change and path count.
class OverlayTable {
 public:
  static const OverlayTable& of(int m) {
    if (m < 1 || m >= kMaxTypeOrder) throw std::out_of_range("overlay table order out of range");
    static std::array<std::once_flag, kMaxTypeOrder> flags;
    static std::array<std::unique_ptr<OverlayTable>, kMaxTypeOrder> tables;
    std::call_once(flags[static_cast<std::size_t>(m)], [m]() { tables[static_cast<std::size_t>(m)].reset(new OverlayTable(m)); });
    return *tables[static_cast<std::size_t>(m)];
  }

  const std::vector<OverlayOutcome>& outcomes(int gap, int parent) const {
    return table_[static_cast<std::size_t>(gap) * parents_ + static_cast<std::size_t>(parent)];
  }

 private:
  explicit OverlayTable(int m) {
    const auto& pcat = SplitCatalog::of(m);
    const auto& ccat = SplitCatalog::of(m + 1);
    parents_ = pcat.size();
    table_.resize(static_cast<std::size_t>(2 * m) * parents_);
    for (int g = 0; g < 2 * m; ++g) {
      for (std::size_t s = 0; s < parents_; ++s) {
        const Split& parent = pcat.at(static_cast<int>(s));
        const std::size_t k = crossed_arcs(parent, OverstrandPos{g}).size();
        std::map<std::pair<int, int>, std::uint32_t> merged;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
          std::vector<bool> a(k);
          int delta = 0;
          for (std::size_t i = 0; i < k; ++i) {
            a[i] = (mask >> i) & 1u;
            delta += a[i] ? 1 : -1;
          }
          const int child = ccat.index(resolve_overstrand(parent, OverstrandPos{g}, a));
          ++merged[{child, delta}];
        }
        auto& row = table_[static_cast<std::size_t>(g) * parents_ + s];
        for (auto [key, count] : merged)
          row.push_back(OverlayOutcome{static_cast<std::uint16_t>(key.first), static_cast<std::int16_t>(key.second), count});
      }
    }
  }

  std::size_t parents_ = 0;
  std::vector<std::vector<OverlayOutcome>> table_;
};

inline SkeinRelation base_relation() {
  const auto& cat = SplitCatalog::of(2);
  return SkeinRelation(CrossingType::standard(2),
                       {{static_cast<std::uint16_t>(cat.index(Split::parse("(0,1)(2,3)"))), 1, 1},
                        {static_cast<std::uint16_t>(cat.index(Split::parse("(0,3)(1,2)"))), -1, 1}});
}

inline SkeinRelation extend_relation(const CrossingType& t, const SkeinRelation& parent, OverstrandPos gap) {
  const int n = t.order();
  const int span = n * (n - 1) / 2;
  const int slots = 2 * span + 1;
  const auto& table = OverlayTable::of(n - 1);
  const std::size_t children = SplitCatalog::of(n).size();
  std::vector<std::uint64_t> acc(children * static_cast<std::size_t>(slots), 0);
  for (const auto& term : parent.packed())
    for (const auto& out : table.outcomes(gap.gap, term.split))
      acc[out.child * static_cast<std::size_t>(slots) + static_cast<std::size_t>(term.power + out.delta + span)] +=
          term.multiplicity * out.count;
  std::vector<SkeinRelation::Packed> terms;
  for (std::size_t c = 0; c < children; ++c)
    for (int p = 0; p < slots; ++p)
      if (auto m = acc[c * static_cast<std::size_t>(slots) + static_cast<std::size_t>(p)])
        terms.push_back({static_cast<std::uint16_t>(c), static_cast<std::int16_t>(p - span), m});
  return SkeinRelation(t, std::move(terms));
}

}  // namespace detail

/// Process-wide memo of relations keyed by type.  Concurrent lookups share
/// a reader lock; a miss computes outside the lock and inserts under the
/// writer lock (a racing duplicate computation yields an identical value).
class SkeinCache {
 public:
  static SkeinCache& global() {
    static SkeinCache cache;
    return cache;
  }

  std::shared_ptr<const SkeinRelation> get(const CrossingType& t) {
    {
      std::shared_lock lock(mutex_);
      auto it = memo_.find(t.heights());
      if (it != memo_.end()) return it->second;
    }
    auto rel = std::make_shared<const SkeinRelation>(compute(t));
    std::unique_lock lock(mutex_);
    return memo_.emplace(t.heights(), std::move(rel)).first->second;
  }

  /// Builds without memoizing t itself (its parents are still cached).
  SkeinRelation compute(const CrossingType& t) {
    if (t.order() < 2 || t.order() > kMaxTypeOrder) throw std::out_of_range("build_relation: n must be in 2..8");
    if (t.order() == 2) return detail::base_relation();
    auto removal = remove_top(t);
    auto parent = get(removal.parent);
    return detail::extend_relation(t, *parent, removal.insertion);
  }

  void clear() {
    std::unique_lock lock(mutex_);
    memo_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::vector<int>, std::shared_ptr<const SkeinRelation>> memo_;
};

inline std::shared_ptr<const SkeinRelation> build_relation(const CrossingType& t) { return SkeinCache::global().get(t); }

inline int width(const SkeinRelation& r) { return r.width(); }

/// Widths of every type of order n, counted per type (reflections counted
/// separately).
inline std::map<int, int> realized_widths(int n) {
  std::map<int, int> out;
  for (const auto& t : all_types(n)) {
    if (n < kMaxTypeOrder) ++out[build_relation(t)->width()];
    else ++out[SkeinCache::global().compute(t).width()];
  }
  return out;
}

/// Covering relation on the terms of r: edge (i, j) means term i is covered
/// by term j (one split move apart and power(i) = power(j) - 2).
inline std::vector<std::pair<int, int>> term_order(const SkeinRelation& r) {
  const auto& cat = SplitCatalog::of(r.order());
  std::map<std::pair<int, int>, int> lookup;
  const auto& terms = r.packed();
  for (std::size_t i = 0; i < terms.size(); ++i) lookup[{terms[i].split, terms[i].power}] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t j = 0; j < terms.size(); ++j)
    for (int nb : cat.neighbors(terms[j].split)) {
      auto it = lookup.find({nb, terms[j].power - 2});
      if (it != lookup.end()) edges.emplace_back(it->second, static_cast<int>(j));
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

struct HighLow {
  std::vector<int> high;  // term indices with nothing above them
  std::vector<int> low;   // term indices with nothing below them
};

inline HighLow high_low_terms(const SkeinRelation& r) {
  std::vector<char> below(r.size(), 0), above(r.size(), 0);
  for (auto [i, j] : term_order(r)) {
    above[static_cast<std::size_t>(i)] = 1;
    below[static_cast<std::size_t>(j)] = 1;
  }
  HighLow hl;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!above[i]) hl.high.push_back(static_cast<int>(i));
    if (!below[i]) hl.low.push_back(static_cast<int>(i));
  }
  return hl;
}

enum class Turn { clockwise, counterclockwise, straight, neither };

inline const char* to_string(Turn t) {
  switch (t) {
    case Turn::clockwise: return "clockwise";
    case Turn::counterclockwise: return "counterclockwise";
    case Turn::straight: return "straight";
    default: return "neither";
  }
}

/// Direction in which the arcs leaving the newest overstrand's endpoints
/// (`top` and `top + n`) turn away from it.
inline Turn classify_offspring(const Split& child, int top = 0) {
  const int n = child.order();
  if (top < 0 || top >= 2 * n) throw std::invalid_argument("classify_offspring: overstrand endpoint out of range");
  const int bottom = (top + n) % (2 * n);
  if (child.partner(top) == bottom) return Turn::straight;
  auto east = [&](int p) {
    const int off = ((p - top) % (2 * n) + 2 * n) % (2 * n);
    return off > 0 && off < n;
  };
  const bool top_east = east(child.partner(top));
  const bool bottom_east = east(child.partner(bottom));
  if (top_east && !bottom_east) return Turn::counterclockwise;
  if (!top_east && bottom_east) return Turn::clockwise;
  return Turn::neither;
}

}  // namespace mcknot
