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

// Exhaustive brute-force checks of the combinatorial laws satisfied by
// splits and skein relations.  Each check enumerates every case at one
// order and returns the number of cases examined plus a reproducer string
// for every violation (capped).

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mcknot/skein.hpp"
#include "mcknot/split.hpp"

namespace mcknot {

struct LawReport {
  std::string law;
  int n = 0;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;  // first few reproducers

  LawReport() = default;
  LawReport(std::string law_name, int order) : law(std::move(law_name)), n(order) {}

  bool ok() const { return violation_count == 0; }

  void fail(const std::string& what) {
    ++violation_count;
    if (violations.size() < 16) violations.push_back(what);
  }
};

namespace detail {

inline std::string gap_str(OverstrandPos o) { return "gap " + std::to_string(o.gap); }

/// Steps in the rotation window used by the rotation laws.  Clockwise and
/// counterclockwise both stop at floor(n/2): for odd n the extra clockwise
/// step r_ceil(n/2) lands on the chord already reached by the counter-
/// clockwise sweep, and including it breaks the parallel-split base case
/// (n = 3, profile 3 -> 1 -> 1).
inline std::size_t rotation_window(int n) { return static_cast<std::size_t>(n / 2); }

}  // namespace detail

/// d(S,T) = n - ||S,T|| over all pairs; also confirms connectivity.
inline LawReport check_split_distance(int n) {
  LawReport rep{"split distance equals n minus closure count", n};
  SplitGraph graph(n);
  const auto& cat = graph.catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& row = graph.distances_from(static_cast<int>(i));
    for (std::size_t j = 0; j < cat.size(); ++j) {
      ++rep.checked;
      const int cc = closure_count(cat.at(static_cast<int>(i)), cat.at(static_cast<int>(j)));
      if (row[j] != n - cc)
        rep.fail(cat.at(static_cast<int>(i)).to_string() + " vs " + cat.at(static_cast<int>(j)).to_string() + ": d=" +
                 std::to_string(row[j]) + " closure=" + std::to_string(cc));
    }
  }
  return rep;
}

/// Each split move changes the closure count against any fixed exterior
/// split by exactly one.
inline LawReport check_move_closure(int n) {
  LawReport rep{"split move changes closure count by one", n};
  const auto& cat = SplitCatalog::of(n);
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (int j : cat.neighbors(static_cast<int>(i)))
      for (const auto& t : cat.splits()) {
        ++rep.checked;
        const int diff = closure_count(cat.at(static_cast<int>(i)), t) - closure_count(cat.at(j), t);
        if (diff != 1 && diff != -1)
          rep.fail(cat.at(static_cast<int>(i)).to_string() + " -> " + cat.at(j).to_string() + " against " + t.to_string());
      }
  return rep;
}

/// With |I(O,T)| = n - 2m: 2c + l <= 2m and 2cbar + lbar <= 2m.
inline LawReport check_rotation_counts(int n, std::size_t window) {
  LawReport rep{"rotation counts 2c + l <= 2m", n};
  for (const auto& t : SplitCatalog::of(n).splits())
    for (int g = 0; g < 2 * n; ++g) {
      const OverstrandPos o{g};
      const int m = (n - intersections(t, o)) / 2;
      const auto prof = rotation_profile(t, o);
      const auto cw = RotationProfile::count(prof.clockwise, window);
      const auto ccw = RotationProfile::count(prof.counterclockwise, window);
      ++rep.checked;
      if (2 * cw.increasing + cw.level > 2 * m || 2 * ccw.increasing + ccw.level > 2 * m)
        rep.fail(t.to_string() + " " + detail::gap_str(o));
    }
  return rep;
}

inline LawReport check_rotation_counts(int n) { return check_rotation_counts(n, detail::rotation_window(n)); }

/// With |I(O',T)| = n - 2m: |I(r_{m+j},T)| <= n - 2j for m + j inside the
/// rotation window, in both directions.
inline LawReport check_rotation_bound(int n, std::size_t window) {
  LawReport rep{"rotated overstrand bound |I(r_{m+j},T)| <= n - 2j", n};
  for (const auto& t : SplitCatalog::of(n).splits())
    for (int g = 0; g < 2 * n; ++g) {
      const OverstrandPos o{g};
      const int m = (n - intersections(t, o)) / 2;
      for (int j = 0; m + j <= static_cast<int>(window); ++j) {
        rep.checked += 2;
        if (intersections(t, o.rotated(m + j, n)) > n - 2 * j)
          rep.fail(t.to_string() + " " + detail::gap_str(o) + " clockwise j=" + std::to_string(j));
        if (intersections(t, o.rotated(-(m + j), n)) > n - 2 * j)
          rep.fail(t.to_string() + " " + detail::gap_str(o) + " counterclockwise j=" + std::to_string(j));
      }
    }
  return rep;
}

inline LawReport check_rotation_bound(int n) { return check_rotation_bound(n, detail::rotation_window(n)); }

/// If |I(O',S)| + |I(O',T)| = n + p then |I(O,S)| + |I(O,T)| - 2I* <= n - p
/// for every O, with I* = min(|I(O,O',S)|, |I(O,O',T)|).  Quantified over
/// all pairs of splits.
inline LawReport check_istar(int n) {
  LawReport rep{"common-intersection bound", n};
  const auto& splits = SplitCatalog::of(n).splits();
  for (const auto& s : splits)
    for (const auto& t : splits)
      for (int g2 = 0; g2 < n; ++g2) {
        const OverstrandPos o2{g2};
        const int p = intersections(s, o2) + intersections(t, o2) - n;
        for (int g = 0; g < n; ++g) {
          const OverstrandPos o{g};
          const int istar = std::min(common_intersections(s, o, o2), common_intersections(t, o, o2));
          ++rep.checked;
          if (intersections(s, o) + intersections(t, o) - 2 * istar > n - p)
            rep.fail(s.to_string() + " / " + t.to_string() + " O=" + std::to_string(g) + " O'=" + std::to_string(g2));
        }
      }
  return rep;
}

/// Power-difference bound between two terms of one relation in terms of
/// the most intersections a single overstrand makes with both splits.
inline int power_gap_bound(int n, int max_sum) {
  const int base = n * n / 2;
  if (n % 2 == 0) {
    const int k = (max_sum - n) / 2;
    return base - 2 * k * k;
  }
  const int k = (max_sum - n - 1) / 2;
  return base - 2 * k * k - 2 * k;
}

/// |P(T) - P(S)| <= floor(n^2/2) - 2k^2 (even) or - 2k^2 - 2k (odd), where
/// max_O |I(O,S)| + |I(O,T)| = n + 2k (even) or n + 1 + 2k (odd).  Pairs with
/// negative k are checked with the same formula and counted separately.
struct PowerGapReport {
  LawReport law;
  std::uint64_t negative_k_pairs = 0;
};

inline PowerGapReport check_power_gap(int n) {
  PowerGapReport rep{LawReport{"power gap bound between terms", n}};
  for (const auto& type : all_types(n)) {
    auto rel = build_relation(type);
    const auto& cat = SplitCatalog::of(n);
    const auto& terms = rel->packed();
    for (std::size_t i = 0; i < terms.size(); ++i)
      for (std::size_t j = i; j < terms.size(); ++j) {
        const Split& s = cat.at(terms[i].split);
        const Split& t = cat.at(terms[j].split);
        int best = 0;
        for (int g = 0; g < n; ++g) best = std::max(best, intersections(s, OverstrandPos{g}) + intersections(t, OverstrandPos{g}));
        const int k = n % 2 == 0 ? (best - n) / 2 : (best - n - 1) / 2;
        const int gap = std::abs(terms[i].power - terms[j].power);
        const bool bad = gap > power_gap_bound(n, best);
        if (k < 0) ++rep.negative_k_pairs;
        ++rep.law.checked;
        if (bad)
          rep.law.fail(type.to_string() + ": " + s.to_string() + "@" + std::to_string(terms[i].power) + " vs " +
                       t.to_string() + "@" + std::to_string(terms[j].power));
      }
  }
  return rep;
}

/// Width at most floor(n^2/2) for every type of order n.
inline LawReport check_width_bound(int n) {
  LawReport rep{"width at most floor(n^2/2)", n};
  for (const auto& t : all_types(n)) {
    ++rep.checked;
    const int w = n < kMaxTypeOrder ? build_relation(t)->width() : SkeinCache::global().compute(t).width();
    if (w > n * n / 2) rep.fail(t.to_string() + " width " + std::to_string(w));
  }
  return rep;
}

/// Relation of the reflected type equals the flipped relation with powers
/// negated.
inline LawReport check_reflection(int n) {
  LawReport rep{"reflected type has flipped, negated relation", n};
  const auto& cat = SplitCatalog::of(n);
  for (const auto& t : all_types(n)) {
    ++rep.checked;
    auto r = build_relation(t);
    auto rr = build_relation(t.reflected());
    std::vector<SkeinRelation::Packed> flipped;
    for (const auto& term : r->packed())
      flipped.push_back({static_cast<std::uint16_t>(cat.index(cat.at(term.split).flipped())),
                         static_cast<std::int16_t>(-term.power), term.multiplicity});
    if (SkeinRelation(t.reflected(), flipped).packed() != rr->packed()) rep.fail(t.to_string());
  }
  return rep;
}

namespace detail {

/// Every leaf of the recursive construction as (split, power), unmerged.
inline std::vector<std::pair<Split, int>> naive_leaves(const CrossingType& t) {
  if (t.order() == 2) return {{Split::parse("(0,1)(2,3)"), 1}, {Split::parse("(0,3)(1,2)"), -1}};
  const auto removal = remove_top(t);
  std::vector<std::pair<Split, int>> out;
  for (const auto& [parent, power] : naive_leaves(removal.parent)) {
    const std::size_t k = crossed_arcs(parent, removal.insertion).size();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<bool> a(k);
      int delta = 0;
      for (std::size_t i = 0; i < k; ++i) {
        a[i] = (mask >> i) & 1u;
        delta += a[i] ? 1 : -1;
      }
      out.emplace_back(resolve_overstrand(parent, removal.insertion, a), power + delta);
    }
  }
  return out;
}

}  // namespace detail

/// The memoized, merged relation equals a plain unmerged replay of the
/// recursion; total multiplicity equals the number of leaf paths.
inline LawReport check_leaf_paths(int n) {
  LawReport rep{"relation matches unmerged leaf replay", n};
  for (const auto& t : all_types(n)) {
    ++rep.checked;
    const auto leaves = detail::naive_leaves(t);
    std::map<std::pair<Split, int>, std::uint64_t> merged;
    for (const auto& leaf : leaves) ++merged[leaf];
    std::map<std::pair<Split, int>, std::uint64_t> built;
    auto rel = build_relation(t);
    for (const auto& term : rel->terms()) built[{term.split, term.power}] = term.multiplicity;
    if (merged != built || rel->total_multiplicity() != leaves.size()) rep.fail(t.to_string());
  }
  return rep;
}

/// Switching a term down (up) a covering never raises (lowers) the top
/// (bottom) exponent of its state summand against any exterior closure.
inline LawReport check_cover_monotone(int n) {
  LawReport rep{"covering moves are monotone on extreme summand exponents", n};
  const auto& cat = SplitCatalog::of(n);
  for (const auto& type : all_types(n)) {
    auto rel = build_relation(type);
    const auto& terms = rel->packed();
    for (auto [lo, hi] : term_order(*rel))
      for (const auto& e : cat.splits()) {
        ++rep.checked;
        const int loops_lo = closure_count(cat.at(terms[static_cast<std::size_t>(lo)].split), e);
        const int loops_hi = closure_count(cat.at(terms[static_cast<std::size_t>(hi)].split), e);
        const int p_lo = terms[static_cast<std::size_t>(lo)].power;
        const int p_hi = terms[static_cast<std::size_t>(hi)].power;
        if (p_lo + 2 * (loops_lo - 1) > p_hi + 2 * (loops_hi - 1) || p_hi - 2 * (loops_hi - 1) < p_lo - 2 * (loops_lo - 1))
          rep.fail(type.to_string() + " cover " + std::to_string(lo) + "<" + std::to_string(hi) + " exterior " + e.to_string());
      }
  }
  return rep;
}

/// High/low laws for every type of order n: the covering order has no
/// cycles; no split is both high and low; high and low splits are at least
/// two moves apart; high splits turn counterclockwise or run straight, low
/// splits clockwise or straight; straight splits occur only for odd n.
inline std::vector<LawReport> check_high_low(int n) {
  LawReport acyclic{"covering order is acyclic", n};
  LawReport disjoint{"no split both high and low", n};
  LawReport apart{"high and low splits at least two moves apart", n};
  LawReport turning{"high splits counterclockwise or straight, low clockwise or straight", n};
  LawReport straight{"straight splits only for odd order", n};
  SplitGraph graph(n);
  const auto& cat = graph.catalog();
  for (const auto& type : all_types(n)) {
    auto rel = build_relation(type);
    const auto& terms = rel->packed();
    ++acyclic.checked;
    for (auto [lo, hi] : term_order(*rel))
      if (terms[static_cast<std::size_t>(lo)].power >= terms[static_cast<std::size_t>(hi)].power) acyclic.fail(type.to_string());
    const auto hl = high_low_terms(*rel);
    std::set<int> high, low;
    for (int i : hl.high) high.insert(terms[static_cast<std::size_t>(i)].split);
    for (int i : hl.low) low.insert(terms[static_cast<std::size_t>(i)].split);
    for (int h : high) {
      ++disjoint.checked;
      if (low.count(h)) disjoint.fail(type.to_string() + " split " + cat.at(h).to_string());
      for (int l : low) {
        ++apart.checked;
        if (graph.distance(h, l) < 2) apart.fail(type.to_string() + " " + cat.at(h).to_string() + " ~ " + cat.at(l).to_string());
      }
      ++turning.checked;
      const Turn t = classify_offspring(cat.at(h));
      if (t != Turn::counterclockwise && t != Turn::straight)
        turning.fail(type.to_string() + " high " + cat.at(h).to_string() + " is " + to_string(t));
    }
    for (int l : low) {
      ++turning.checked;
      const Turn t = classify_offspring(cat.at(l));
      if (t != Turn::clockwise && t != Turn::straight)
        turning.fail(type.to_string() + " low " + cat.at(l).to_string() + " is " + to_string(t));
    }
    for (const auto& term : terms) {
      ++straight.checked;
      if (n % 2 == 0 && classify_offspring(cat.at(term.split)) == Turn::straight)
        straight.fail(type.to_string() + " " + cat.at(term.split).to_string());
    }
  }
  return {acyclic, disjoint, apart, turning, straight};
}

/// Arc surgery on every split of order n at every overstrand and every
/// admissible east/west pair: the result is a split of the same order with
/// exactly two fewer crossings with the overstrand.  Also checks that every
/// split with fewer than n crossings has an inverse surgery, and records the
/// largest split distance seen across one surgery.
struct SurgeryReport {
  LawReport forward;
  LawReport inverse;
  int max_split_distance = 0;
};

inline std::vector<std::pair<int, int>> surgery_pairs(const Split& s, OverstrandPos o, bool east_side) {
  const int n = s.order();
  std::vector<int> pts;
  for (int p = 0; p < s.points(); ++p)
    if (o.east(p, n) == east_side && o.east(s.partner(p), n) != east_side) pts.push_back(p);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (share_face(s, pts[i], pts[j])) out.emplace_back(pts[i], pts[j]);
  return out;
}

inline SurgeryReport check_arc_surgery(int n) {
  SurgeryReport rep{LawReport{"arc surgery removes two crossings", n}, LawReport{"every reducible split has an inverse surgery", n}};
  SplitGraph graph(n);
  const auto& cat = graph.catalog();
  for (int g = 0; g < n; ++g) {
    const OverstrandPos o{g};
    std::set<int> reached;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const Split& t0 = cat.at(static_cast<int>(i));
      const int before = intersections(t0, o);
      for (auto e : surgery_pairs(t0, o, true))
        for (auto w : surgery_pairs(t0, o, false)) {
          ++rep.forward.checked;
          Split t1 = arc_surgery(t0, o, e, w);
          if (t1.order() != n || intersections(t1, o) != before - 2) {
            rep.forward.fail(t0.to_string() + " " + detail::gap_str(o));
            continue;
          }
          const int j = cat.index(t1);
          reached.insert(j);
          rep.max_split_distance = std::max(rep.max_split_distance, graph.distance(static_cast<int>(i), j));
        }
    }
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (intersections(cat.at(static_cast<int>(i)), o) >= n) continue;
      ++rep.inverse.checked;
      if (!reached.count(static_cast<int>(i))) rep.inverse.fail(cat.at(static_cast<int>(i)).to_string() + " " + detail::gap_str(o));
    }
  }
  return rep;
}

/// Adding an overstrand O to a split T and resolving gives T'; a second
/// overstrand O' then meets T' at most once more than it met T.  Equality
/// holds exactly when O meets no arc that O' also meets (in particular when
/// O meets nothing), or O is counterclockwise of O' and every crossing of O
/// with a shared arc is an A-smoothing, or O is clockwise of O' and every
/// such crossing is a B-smoothing.
///
/// "Clockwise of" is read relative to the shared arcs: O is clockwise of O'
/// when rotating O' clockwise onto O sweeps past no endpoint of a shared arc.
/// The shared arcs occupy one pair of opposite sectors between the two
/// chords, so exactly one rotation direction avoids them.
inline std::vector<LawReport> check_added_overstrand(int n) {
  LawReport bound{"second overstrand gains at most one crossing", n};
  LawReport equality{"equality exactly under the homogeneous-smoothing conditions", n};
  for (const auto& t : SplitCatalog::of(n).splits())
    for (int g = 0; g < n; ++g) {
      const OverstrandPos o{g};
      const auto crossed = crossed_arcs(t, o);
      const std::size_t k = crossed.size();
      const auto pairs = t.pairs();
      for (int g2 = 0; g2 < n; ++g2) {
        if (g2 == g) continue;
        const OverstrandPos o2{g2};
        const int i = ((g - g2) % n + n) % n;
        auto swept = [&](int p) {
          return ((p - g2) % n + n) % n < i;
        };
        const int before = intersections(t, o2);
        // O' in child coordinates: the gap before the child label of g2.
        const OverstrandPos child_o2{overlay_label(g2, g, n)};
        std::vector<char> shared(k);
        bool any_shared = false;
        bool sweeps_shared = false;
        for (std::size_t c = 0; c < k; ++c) {
          auto [a, b] = pairs[static_cast<std::size_t>(crossed[c])];
          shared[c] = o2.east(a, n) != o2.east(b, n);
          if (!shared[c]) continue;
          any_shared = true;
          sweeps_shared = sweeps_shared || swept(a) || swept(b);
        }
        const bool clockwise = !sweeps_shared;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
          std::vector<bool> a(k);
          bool all_a = true, all_b = true;
          for (std::size_t c = 0; c < k; ++c) {
            a[c] = (mask >> c) & 1u;
            if (shared[c]) {
              all_a = all_a && a[c];
              all_b = all_b && !a[c];
            }
          }
          const int after = intersections(resolve_overstrand(t, o, a), child_o2);
          ++bound.checked;
          ++equality.checked;
          const std::string where = t.to_string() + " O=" + std::to_string(g) + " O'=" + std::to_string(g2) +
                                    " mask=" + std::to_string(mask);
          if (after > before + 1) bound.fail(where);
          const bool predicted = !any_shared || (!clockwise && all_a) || (clockwise && all_b);
          if ((after == before + 1) != predicted)
            equality.fail(where + " after=" + std::to_string(after) + " before=" + std::to_string(before));
        }
      }
    }
  return {bound, equality};
}

}  // namespace mcknot
