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

// Combinatorial multi-crossing link diagrams and the bracket polynomial.
//
// A diagram is a list of crossings (each a CrossingType of some order n)
// plus a perfect matching ("edges") on the crossing spokes.  Spoke k of an
// order-n crossing continues through the crossing to spoke k + n.  Free
// loops are crossingless unknotted components.
//
// Two independent bracket paths are provided: bracket() sums over skein
// terms of the multi-crossings, bracket_oracle() perturbs every crossing
// into double crossings and sums over plain A/B states.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcknot/laurent.hpp"
#include "mcknot/skein.hpp"
#include "mcknot/split.hpp"

namespace mcknot {

struct Endpoint {
  int crossing = 0;
  int spoke = 0;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

using Edge = std::pair<Endpoint, Endpoint>;

struct MultiCrossingDiagram {
  int free_loops = 0;
  std::vector<CrossingType> crossings;
  std::vector<Edge> edges;

  int order(int c) const { return crossings[static_cast<std::size_t>(c)].order(); }
  int crossing_count() const { return static_cast<int>(crossings.size()); }

  friend bool operator==(const MultiCrossingDiagram&, const MultiCrossingDiagram&) = default;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  /// Returns true if a and b were in different sets.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::size_t size() const { return parent_.size(); }
  /// Copies other's state without reallocating.
  void assign(const DisjointSets& other) { parent_.assign(other.parent_.begin(), other.parent_.end()); }

 private:
  std::vector<int> parent_;
};

namespace detail {

/// Endpoints flattened to ids: crossing c spoke s -> base[c] + s.
struct Flat {
  std::vector<int> base;
  std::vector<int> mate;
  int endpoints = 0;

  int id(const Endpoint& e) const { return base[static_cast<std::size_t>(e.crossing)] + e.spoke; }
};

inline Flat flatten(const MultiCrossingDiagram& d) {
  Flat f;
  for (const auto& t : d.crossings) {
    f.base.push_back(f.endpoints);
    f.endpoints += 2 * t.order();
  }
  f.mate.assign(static_cast<std::size_t>(f.endpoints), -1);
  auto check = [&](const Endpoint& e) {
    if (e.crossing < 0 || e.crossing >= d.crossing_count() || e.spoke < 0 || e.spoke >= 2 * d.order(e.crossing))
      throw std::invalid_argument("edge endpoint out of range: crossing " + std::to_string(e.crossing) + " spoke " +
                                  std::to_string(e.spoke));
  };
  for (const auto& [a, b] : d.edges) {
    check(a);
    check(b);
    const int ia = f.id(a), ib = f.id(b);
    if (ia == ib || f.mate[static_cast<std::size_t>(ia)] != -1 || f.mate[static_cast<std::size_t>(ib)] != -1)
      throw std::invalid_argument("duplicate endpoint: crossing " + std::to_string(f.mate[static_cast<std::size_t>(ia)] != -1 || ia == ib ? a.crossing : b.crossing) +
                                  " spoke " + std::to_string(f.mate[static_cast<std::size_t>(ia)] != -1 || ia == ib ? a.spoke : b.spoke));
    f.mate[static_cast<std::size_t>(ia)] = ib;
    f.mate[static_cast<std::size_t>(ib)] = ia;
  }
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 2 * d.order(c); ++s)
      if (f.mate[static_cast<std::size_t>(f.base[static_cast<std::size_t>(c)] + s)] == -1)
        throw std::invalid_argument("dangling endpoint: crossing " + std::to_string(c) + " spoke " + std::to_string(s));
  if (d.free_loops < 0) throw std::invalid_argument("negative free loop count");
  return f;
}

}  // namespace detail

struct Validation {
  int components = 0;             // link components
  int projection_components = 0;  // connected pieces of the projection
};

inline Validation validate(const MultiCrossingDiagram& d) {
  const auto f = detail::flatten(d);
  DisjointSets strands(static_cast<std::size_t>(f.endpoints));
  DisjointSets pieces(d.crossings.size());
  for (int i = 0; i < f.endpoints; ++i) strands.unite(i, f.mate[static_cast<std::size_t>(i)]);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int n = d.order(c);
    for (int s = 0; s < n; ++s) strands.unite(f.base[static_cast<std::size_t>(c)] + s, f.base[static_cast<std::size_t>(c)] + s + n);
  }
  for (const auto& [a, b] : d.edges) pieces.unite(a.crossing, b.crossing);
  Validation v;
  for (int i = 0; i < f.endpoints; ++i)
    if (strands.find(i) == i) ++v.components;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (pieces.find(c) == c) ++v.projection_components;
  v.components += d.free_loops;
  v.projection_components += d.free_loops;
  return v;
}

/// One crossing of order n whose spokes are joined outside by `exterior`.
inline MultiCrossingDiagram single_crossing_diagram(const CrossingType& type, const Split& exterior) {
  if (exterior.order() != type.order()) throw std::invalid_argument("exterior split order does not match crossing");
  MultiCrossingDiagram d;
  d.crossings.push_back(type);
  for (auto [a, b] : exterior.pairs()) d.edges.push_back({{0, a}, {0, b}});
  return d;
}

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

/// Counts loops for one choice of split per crossing.
class LoopCounter {
 public:
  LoopCounter(const MultiCrossingDiagram& d, const Flat& f) : d_(&d), f_(&f), base_(static_cast<std::size_t>(f.endpoints)) {
    for (int i = 0; i < f.endpoints; ++i) base_.unite(i, f.mate[static_cast<std::size_t>(i)]);
  }

  /// `partners[c]` is the chosen split at crossing c.
  int loops(const std::vector<const Split*>& chosen) const {
    DisjointSets& ds = scratch_;
    ds.assign(base_);
    int merges = 0;
    for (std::size_t c = 0; c < chosen.size(); ++c) {
      const int b = f_->base[c];
      const Split& s = *chosen[c];
      for (int p = 0; p < s.points(); ++p)
        if (p < s.partner(p) && ds.unite(b + p, b + s.partner(p))) ++merges;
    }
    // Each endpoint pair glued by an edge starts as one set.
    return f_->endpoints / 2 - merges + d_->free_loops;
  }

 private:
  const MultiCrossingDiagram* d_;
  const Flat* f_;
  DisjointSets base_;
  mutable DisjointSets scratch_;
};

template <typename Coeff>
LaurentPoly bracket_sum(const MultiCrossingDiagram& d, const Flat& f,
                        const std::vector<std::vector<std::pair<int, BasicLaurent<std::int64_t>>>>& options) {
  const int nc = d.crossing_count();
  std::vector<const SplitCatalog*> cats;
  for (int c = 0; c < nc; ++c) cats.push_back(&SplitCatalog::of(d.order(c)));
  LoopCounter counter(d, f);
  std::map<int, BasicLaurent<Coeff>> by_loops;
  std::vector<std::size_t> digit(static_cast<std::size_t>(nc), 0);
  std::vector<const Split*> chosen(static_cast<std::size_t>(nc));
  while (true) {
    BasicLaurent<Coeff> term(Coeff(1));
    for (int c = 0; c < nc; ++c) {
      const auto& opt = options[static_cast<std::size_t>(c)][digit[static_cast<std::size_t>(c)]];
      chosen[static_cast<std::size_t>(c)] = &cats[static_cast<std::size_t>(c)]->at(opt.first);
      term *= opt.second.template convert<Coeff>();
    }
    by_loops[counter.loops(chosen)] += term;
    int c = 0;
    while (c < nc && ++digit[static_cast<std::size_t>(c)] == options[static_cast<std::size_t>(c)].size()) digit[static_cast<std::size_t>(c++)] = 0;
    if (c == nc) break;
  }
  LaurentPoly out;
  for (const auto& [loops, poly] : by_loops) out += poly.template convert<BigInt>() * delta_power(loops - 1);
  return out;
}

}  // namespace detail

/// Kauffman bracket by state sum over the skein terms of each crossing.
inline LaurentPoly bracket(const MultiCrossingDiagram& d) {
  const auto f = detail::flatten(d);
  if (d.crossings.empty()) {
    if (d.free_loops == 0) throw std::invalid_argument("bracket of the empty diagram");
    return delta_power(d.free_loops - 1);
  }
  std::vector<std::vector<std::pair<int, BasicLaurent<std::int64_t>>>> options;
  std::uint64_t bound = 1;
  for (const auto& t : d.crossings) {
    options.push_back(build_relation(t)->split_coefficients());
    std::uint64_t mass = 0;
    for (const auto& [split, poly] : options.back())
      for (auto c : poly.dense()) mass += static_cast<std::uint64_t>(c < 0 ? -c : c);
    bound = detail::saturating_mul(bound, mass);
  }
  if (bound < (std::uint64_t{1} << 62)) return detail::bracket_sum<std::int64_t>(d, f, options);
  return detail::bracket_sum<BigInt>(d, f, options);
}

enum class Wiring { bubble, insertion };

/// Replaces every crossing of order n > 2 by n(n-1)/2 double crossings: the
/// n strands are laid out as wires across a box and sorted into reverse
/// order by adjacent transpositions; at each transposition the wire with
/// the smaller height passes over.  Order-2 crossings are copied as is.
inline MultiCrossingDiagram perturb(const MultiCrossingDiagram& d, Wiring wiring = Wiring::bubble) {
  detail::flatten(d);
  MultiCrossingDiagram out;
  out.free_loops = d.free_loops;
  std::map<Endpoint, Endpoint> moved;  // old boundary spoke -> new spoke
  const CrossingType two = CrossingType::standard(2);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& t = d.crossings[static_cast<std::size_t>(c)];
    const int n = t.order();
    if (n == 2) {
      const int id = out.crossing_count();
      out.crossings.push_back(t);
      for (int s = 0; s < 4; ++s) moved[{c, s}] = {id, s};
      continue;
    }
    // Wire w enters at spoke w (left side, bottom to top) and leaves at
    // spoke w + n; right-side position p (from the bottom) is spoke 2n-1-p.
    std::vector<int> at(static_cast<std::size_t>(n));
    std::iota(at.begin(), at.end(), 0);
    std::vector<std::optional<Endpoint>> loose(static_cast<std::size_t>(n));
    auto attach = [&](int w, Endpoint e) {
      auto& end = loose[static_cast<std::size_t>(w)];
      if (end) out.edges.push_back({*end, e});
      else moved[{c, w}] = e;
      end = std::nullopt;
    };
    auto transpose = [&](int j) {
      const int a = at[static_cast<std::size_t>(j)];      // lower wire, moving up
      const int b = at[static_cast<std::size_t>(j + 1)];  // upper wire, moving down
      const int id = out.crossing_count();
      out.crossings.push_back(two);
      // Clockwise corners NW, NE, SE, SW; spoke 0 is on the overstrand.
      const bool b_over = t.height_at(b) < t.height_at(a);
      const int nw = b_over ? 0 : 3, ne = b_over ? 1 : 0, se = b_over ? 2 : 1, sw = b_over ? 3 : 2;
      attach(a, {id, sw});
      attach(b, {id, nw});
      loose[static_cast<std::size_t>(a)] = Endpoint{id, ne};
      loose[static_cast<std::size_t>(b)] = Endpoint{id, se};
      std::swap(at[static_cast<std::size_t>(j)], at[static_cast<std::size_t>(j + 1)]);
    };
    if (wiring == Wiring::bubble) {
      for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n - i; ++j) transpose(j);
    } else {
      for (int i = 1; i < n; ++i)
        for (int j = i - 1; j >= 0; --j) transpose(j);
    }
    for (int p = 0; p < n; ++p) {
      const int w = at[static_cast<std::size_t>(p)];
      moved[{c, 2 * n - 1 - p}] = *loose[static_cast<std::size_t>(w)];
    }
  }
  for (const auto& [a, b] : d.edges) out.edges.push_back({moved.at(a), moved.at(b)});
  return out;
}

/// Bracket of perturb(d) from the 2-crossing rule alone: at each double
/// crossing (overstrand on spokes 0 and 2) the A-state joins (0,1)(2,3) and
/// the B-state joins (0,3)(1,2).
inline LaurentPoly bracket_oracle(const MultiCrossingDiagram& d, Wiring wiring = Wiring::bubble) {
  const auto p = perturb(d, wiring);
  const auto f = detail::flatten(p);
  const int nc = p.crossing_count();
  if (nc == 0) {
    if (p.free_loops == 0) throw std::invalid_argument("bracket of the empty diagram");
    return delta_power(p.free_loops - 1);
  }
  if (nc > 28) throw std::length_error("bracket_oracle: too many double crossings for a full state sum");
  DisjointSets glued(static_cast<std::size_t>(f.endpoints));
  for (int i = 0; i < f.endpoints; ++i) glued.unite(i, f.mate[static_cast<std::size_t>(i)]);
  const int max_loops = f.endpoints / 2 + p.free_loops + 1;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>((2 * nc + 1) * max_loops), 0);
  DisjointSets ds;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nc); ++mask) {
    ds.assign(glued);
    int merges = 0;
    int a_count = 0;
    for (int c = 0; c < nc; ++c) {
      const int b = f.base[static_cast<std::size_t>(c)];
      if ((mask >> c) & 1u) {
        ++a_count;
        merges += ds.unite(b + 0, b + 1);
        merges += ds.unite(b + 2, b + 3);
      } else {
        merges += ds.unite(b + 0, b + 3);
        merges += ds.unite(b + 1, b + 2);
      }
    }
    const int loops = f.endpoints / 2 - merges + p.free_loops;
    const int power = a_count - (nc - a_count);
    ++counts[static_cast<std::size_t>((power + nc) * max_loops + loops)];
  }
  LaurentPoly out;
  for (int loops = 1; loops < max_loops; ++loops) {
    std::vector<std::pair<int, BigInt>> terms;
    for (int power = -nc; power <= nc; ++power)
      if (auto k = counts[static_cast<std::size_t>((power + nc) * max_loops + loops)]) terms.emplace_back(power, BigInt(k));
    if (!terms.empty()) out += LaurentPoly::from_terms(terms) * delta_power(loops - 1);
  }
  return out;
}

/// Per-component direction flags; component i is numbered by first
/// appearance when scanning flattened endpoint ids in increasing order.
struct Orientation {
  std::vector<bool> reversed;
};

/// Signed crossing count of the perturbed diagram.  Each component is
/// traversed from its lowest endpoint id, leaving through that spoke.
inline int writhe(const MultiCrossingDiagram& d, const Orientation& orientation = {}) {
  const auto p = perturb(d);
  const auto f = detail::flatten(p);
  // exit[id] = true if a traversal leaves the crossing through that spoke.
  std::vector<int> exit(static_cast<std::size_t>(f.endpoints), -1);
  int component = 0;
  for (int start = 0; start < f.endpoints; ++start) {
    if (exit[static_cast<std::size_t>(start)] != -1) continue;
    const bool rev = static_cast<std::size_t>(component) < orientation.reversed.size() && orientation.reversed[static_cast<std::size_t>(component)];
    ++component;
    int x = start;
    do {
      // x is an exit spoke; its mate is entered, and the antipode leaves.
      const int in = f.mate[static_cast<std::size_t>(x)];
      exit[static_cast<std::size_t>(x)] = rev ? 0 : 1;
      exit[static_cast<std::size_t>(in)] = rev ? 1 : 0;
      const int c = static_cast<int>(std::upper_bound(f.base.begin(), f.base.end(), in) - f.base.begin()) - 1;
      const int b = f.base[static_cast<std::size_t>(c)];
      x = b + (in - b + 2) % 4;
    } while (x != start);
  }
  int w = 0;
  for (int c = 0; c < p.crossing_count(); ++c) {
    const int b = f.base[static_cast<std::size_t>(c)];
    const int over_exit = exit[static_cast<std::size_t>(b)] == 1 ? 0 : 2;
    const int under_exit = exit[static_cast<std::size_t>(b + 1)] == 1 ? 1 : 3;
    w += under_exit == (over_exit + 3) % 4 ? 1 : -1;
  }
  return w;
}

/// Jones polynomial in A: (-A^3)^(-w) <d>.  Knots only.
inline LaurentPoly jones_from_bracket(const LaurentPoly& bracket_poly, int w) {
  LaurentPoly f = bracket_poly.shifted(-3 * w);
  return w % 2 == 0 ? f : -f;
}

inline LaurentPoly jones(const MultiCrossingDiagram& d) {
  if (validate(d).components != 1) throw std::invalid_argument("jones: diagram is not a knot");
  return jones_from_bracket(bracket(d), writhe(d));
}

inline LaurentPoly jones_oracle(const MultiCrossingDiagram& d) {
  if (validate(d).components != 1) throw std::invalid_argument("jones: diagram is not a knot");
  return jones_from_bracket(bracket_oracle(d), writhe(d));
}

/// Mirror image: every crossing's heights reversed (h -> n + 1 - h) and
/// re-read from the new top strand.
inline MultiCrossingDiagram mirror(const MultiCrossingDiagram& d) {
  MultiCrossingDiagram out;
  out.free_loops = d.free_loops;
  std::vector<int> shift;
  for (const auto& t : d.crossings) {
    const int n = t.order();
    const int p = t.spoke_of(n);
    std::vector<int> h;
    for (int j = 0; j < n; ++j) h.push_back(n + 1 - t.height_at(p + j));
    out.crossings.push_back(CrossingType::from_heights(std::move(h)));
    shift.push_back(p);
  }
  auto remap = [&](Endpoint e) {
    const int n = d.order(e.crossing);
    return Endpoint{e.crossing, ((e.spoke - shift[static_cast<std::size_t>(e.crossing)]) % (2 * n) + 2 * n) % (2 * n)};
  };
  for (const auto& [a, b] : d.edges) out.edges.push_back({remap(a), remap(b)});
  return out;
}

/// Splices d1 and d2 at one edge each: edges (a1,b1) and (a2,b2) become
/// (a1,a2) and (b1,b2).  A crossingless single loop acts as the identity.
inline MultiCrossingDiagram connect_sum(const MultiCrossingDiagram& d1, int edge1, const MultiCrossingDiagram& d2, int edge2) {
  if (validate(d1).components != 1 || validate(d2).components != 1) throw std::invalid_argument("connect_sum: inputs must be knots");
  if (d1.crossings.empty()) return d2;
  if (d2.crossings.empty()) return d1;
  if (edge1 < 0 || edge1 >= static_cast<int>(d1.edges.size()) || edge2 < 0 || edge2 >= static_cast<int>(d2.edges.size()))
    throw std::out_of_range("connect_sum: edge index out of range");
  MultiCrossingDiagram out;
  out.crossings = d1.crossings;
  out.crossings.insert(out.crossings.end(), d2.crossings.begin(), d2.crossings.end());
  const int shift = d1.crossing_count();
  auto moved = [&](Endpoint e) { return Endpoint{e.crossing + shift, e.spoke}; };
  for (int i = 0; i < static_cast<int>(d1.edges.size()); ++i)
    if (i != edge1) out.edges.push_back(d1.edges[static_cast<std::size_t>(i)]);
  for (int i = 0; i < static_cast<int>(d2.edges.size()); ++i)
    if (i != edge2) out.edges.push_back({moved(d2.edges[static_cast<std::size_t>(i)].first), moved(d2.edges[static_cast<std::size_t>(i)].second)});
  const auto [a1, b1] = d1.edges[static_cast<std::size_t>(edge1)];
  const auto [a2, b2] = d2.edges[static_cast<std::size_t>(edge2)];
  out.edges.push_back({a1, moved(a2)});
  out.edges.push_back({b1, moved(b2)});
  return out;
}

struct ExtremalStates {
  int M = 0;              // max over states of power + 2(loops - 1)
  int m = 0;              // min over states of power - 2(loops - 1)
  int size_smax = 0;      // loops of an all-high state attaining M
  int size_smin = 0;      // loops of an all-low state attaining m
  bool high_attains = false;
  bool low_attains = false;
};

inline constexpr std::uint64_t kStateBudget = 10'000'000;

inline ExtremalStates extremal_states(const MultiCrossingDiagram& d) {
  const auto f = detail::flatten(d);
  ExtremalStates out;
  const int nc = d.crossing_count();
  if (nc == 0) {
    out.M = out.m = 0;
    out.size_smax = out.size_smin = d.free_loops;
    out.high_attains = out.low_attains = true;
    out.M = 2 * (d.free_loops - 1);
    out.m = -2 * (d.free_loops - 1);
    return out;
  }
  // Per crossing: every split with its highest and lowest power, plus the
  // high and low terms.
  struct Option {
    int split;
    int top;
    int bottom;
  };
  std::vector<std::vector<Option>> options(static_cast<std::size_t>(nc));
  std::vector<std::vector<std::pair<int, int>>> highs(static_cast<std::size_t>(nc)), lows(static_cast<std::size_t>(nc));
  std::vector<const SplitCatalog*> cats;
  std::uint64_t states = 1;
  for (int c = 0; c < nc; ++c) {
    auto rel = build_relation(d.crossings[static_cast<std::size_t>(c)]);
    cats.push_back(&SplitCatalog::of(d.order(c)));
    for (const auto& t : rel->packed()) {
      auto& opts = options[static_cast<std::size_t>(c)];
      if (opts.empty() || opts.back().split != t.split) opts.push_back({t.split, t.power, t.power});
      opts.back().top = std::max<int>(opts.back().top, t.power);
      opts.back().bottom = std::min<int>(opts.back().bottom, t.power);
    }
    const auto hl = high_low_terms(*rel);
    for (int i : hl.high) highs[static_cast<std::size_t>(c)].emplace_back(rel->packed()[static_cast<std::size_t>(i)].split, rel->packed()[static_cast<std::size_t>(i)].power);
    for (int i : hl.low) lows[static_cast<std::size_t>(c)].emplace_back(rel->packed()[static_cast<std::size_t>(i)].split, rel->packed()[static_cast<std::size_t>(i)].power);
    states = detail::saturating_mul(states, rel->size());
  }
  if (states > kStateBudget) throw std::length_error("extremal_states: state count exceeds budget");
  detail::LoopCounter counter(d, f);
  std::vector<const Split*> chosen(static_cast<std::size_t>(nc));
  bool first = true;
  std::vector<std::size_t> digit(static_cast<std::size_t>(nc), 0);
  while (true) {
    int top = 0, bottom = 0;
    for (int c = 0; c < nc; ++c) {
      const auto& o = options[static_cast<std::size_t>(c)][digit[static_cast<std::size_t>(c)]];
      chosen[static_cast<std::size_t>(c)] = &cats[static_cast<std::size_t>(c)]->at(o.split);
      top += o.top;
      bottom += o.bottom;
    }
    const int loops = counter.loops(chosen);
    const int hi = top + 2 * (loops - 1), lo = bottom - 2 * (loops - 1);
    if (first || hi > out.M) out.M = hi;
    if (first || lo < out.m) out.m = lo;
    first = false;
    int c = 0;
    while (c < nc && ++digit[static_cast<std::size_t>(c)] == options[static_cast<std::size_t>(c)].size()) digit[static_cast<std::size_t>(c++)] = 0;
    if (c == nc) break;
  }
  // Among all-high (all-low) states, the largest loop count attaining M (m).
  auto scan = [&](const std::vector<std::vector<std::pair<int, int>>>& lists, bool upper, int target, int& size, bool& attains) {
    std::vector<std::size_t> dg(static_cast<std::size_t>(nc), 0);
    while (true) {
      int power = 0;
      for (int c = 0; c < nc; ++c) {
        const auto& o = lists[static_cast<std::size_t>(c)][dg[static_cast<std::size_t>(c)]];
        chosen[static_cast<std::size_t>(c)] = &cats[static_cast<std::size_t>(c)]->at(o.first);
        power += o.second;
      }
      const int loops = counter.loops(chosen);
      const int value = upper ? power + 2 * (loops - 1) : power - 2 * (loops - 1);
      if (value == target) {
        attains = true;
        size = std::max(size, loops);
      }
      int c = 0;
      while (c < nc && ++dg[static_cast<std::size_t>(c)] == lists[static_cast<std::size_t>(c)].size()) dg[static_cast<std::size_t>(c++)] = 0;
      if (c == nc) break;
    }
  };
  scan(highs, true, out.M, out.size_smax, out.high_attains);
  scan(lows, false, out.m, out.size_smin, out.low_attains);
  return out;
}

struct BoundCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool ok() const { return lhs <= rhs; }
};

struct SpanReport {
  int span = 0;
  int width_sum = 0;
  ExtremalStates extremal;
  std::vector<BoundCheck> checks;
  std::vector<std::string> notes;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok(); }) && extremal.high_attains &&
           extremal.low_attains;
  }
};

/// Evaluates every applicable span and component inequality on d.
/// `petal_strands` > 0 additionally checks the petal bound for a petal
/// diagram with that many strands.
inline SpanReport verify_span_bound(const MultiCrossingDiagram& d, const LaurentPoly& bracket_poly, int petal_strands = 0) {
  SpanReport r;
  r.span = bracket_poly.span();
  r.extremal = extremal_states(d);
  for (const auto& t : d.crossings) r.width_sum += build_relation(t)->width();
  const int smax = r.extremal.size_smax, smin = r.extremal.size_smin;
  r.checks.push_back({"span <= M - m", r.span, r.extremal.M - r.extremal.m});
  if (!d.crossings.empty())
    r.checks.push_back({"span <= sum of widths + 2(|s_max| + |s_min| - 2)", r.span, r.width_sum + 2 * (smax + smin - 2)});
  std::set<int> orders;
  for (const auto& t : d.crossings) orders.insert(t.order());
  const long long c = d.crossing_count();
  if (orders.size() == 1) {
    const int n = *orders.begin();
    if (n == 2) {
      r.checks.push_back({"span <= 4 c_2", r.span, 4 * c});
    } else {
      r.checks.push_back({"|s_max| + |s_min| <= (2n - 4) c_n + 2", smax + smin, (2 * n - 4) * c + 2});
      r.checks.push_back({"span <= (floor(n^2/2) + 4n - 8) c_n", r.span, (n * n / 2 + 4 * n - 8) * c});
    }
    if (n == 5) {
      long long c12 = 0;
      for (const auto& t : d.crossings)
        if (build_relation(t)->width() == 12) ++c12;
      r.checks.push_back({"span <= 20 c_5 + 4 c_5,12", r.span, 20 * c + 4 * c12});
    }
  }
  if (petal_strands > 0) {
    const int p = petal_strands;
    r.checks.push_back({"span <= floor((p-1)^2/2) + 4p - 12", r.span, (p - 1) * (p - 1) / 2 + 4 * p - 12});
  }
  if (!r.extremal.high_attains) r.notes.push_back("no all-high state attains M");
  if (!r.extremal.low_attains) r.notes.push_back("no all-low state attains m");
  return r;
}

inline SpanReport verify_span_bound(const MultiCrossingDiagram& d, int petal_strands = 0) {
  return verify_span_bound(d, bracket(d), petal_strands);
}

/// Projection-component sums over splits at a single-crossing diagram:
/// k_U + k_V <= 2n - d(U, V) for every pair of splits U, V.  Resolving the
/// crossing by U leaves ||U, T|| crossingless circles.
inline BoundCheck check_split_components(const MultiCrossingDiagram& d) {
  if (d.crossing_count() != 1 || d.free_loops != 0) throw std::invalid_argument("check_split_components: single-crossing diagram expected");
  const int n = d.order(0);
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (const auto& [a, b] : d.edges) {
    partner[static_cast<std::size_t>(a.spoke)] = b.spoke;
    partner[static_cast<std::size_t>(b.spoke)] = a.spoke;
  }
  const Split exterior = Split::from_partner(partner);
  const auto& cat = SplitCatalog::of(n);
  SplitGraph graph(n);
  BoundCheck worst{"k_U + k_V <= 2n - d(U,V)", 0, 0};
  long long slack = std::numeric_limits<long long>::max();
  for (std::size_t u = 0; u < cat.size(); ++u) {
    const int ku = closure_count(cat.at(static_cast<int>(u)), exterior);
    for (std::size_t v = u; v < cat.size(); ++v) {
      const int kv = closure_count(cat.at(static_cast<int>(v)), exterior);
      const long long rhs = 2 * n - graph.distance(static_cast<int>(u), static_cast<int>(v));
      if (rhs - (ku + kv) < slack) {
        slack = rhs - (ku + kv);
        worst.lhs = ku + kv;
        worst.rhs = rhs;
      }
    }
  }
  return worst;
}

/// Order doubling.  A companion curve follows the knot from the basepoint
/// edge, passing through every crossing alongside the strand it follows and
/// switching sides there.  Each order-n crossing thus gains n strands and
/// becomes an order-2n crossing; the companion lies over the knot, its own
/// strands ranked by order of traversal.  Splicing the companion into the
/// knot at the basepoint edge yields a diagram of the same knot.
inline MultiCrossingDiagram double_order(const MultiCrossingDiagram& d, int basepoint = 0) {
  if (validate(d).components != 1 || d.crossings.empty() || d.free_loops != 0)
    throw std::invalid_argument("double_order: input must be a knot diagram with crossings");
  const int n = d.order(0);
  for (const auto& t : d.crossings)
    if (t.order() != n) throw std::invalid_argument("double_order: all crossings must have the same order");
  if (basepoint < 0 || basepoint >= static_cast<int>(d.edges.size())) throw std::out_of_range("double_order: basepoint edge out of range");
  const auto f = detail::flatten(d);
  const int nc = d.crossing_count();

  // Passages through crossings in traversal order, starting after the
  // basepoint edge.
  struct Passage {
    int crossing, in, out;
    bool ccw;  // companion on the counterclockwise side of the strand
  };
  std::vector<Passage> passages;
  const Endpoint first = d.edges[static_cast<std::size_t>(basepoint)].second;
  const Endpoint last = d.edges[static_cast<std::size_t>(basepoint)].first;
  Endpoint at = first;
  for (int t = 0;; ++t) {
    const int out = (at.spoke + n) % (2 * n);
    // Entering on the traveller's right is the counterclockwise side.
    passages.push_back({at.crossing, at.spoke, out, t % 2 == 0});
    if (Endpoint{at.crossing, out} == last) break;
    const int mate = f.mate[static_cast<std::size_t>(f.id({at.crossing, out}))];
    const int c = static_cast<int>(std::upper_bound(f.base.begin(), f.base.end(), mate) - f.base.begin()) - 1;
    at = {c, mate - f.base[static_cast<std::size_t>(c)]};
  }

  // Per crossing: side of the companion at each old spoke and companion
  // heights by traversal order.
  std::vector<std::vector<int>> side(static_cast<std::size_t>(nc), std::vector<int>(static_cast<std::size_t>(2 * n), -1));
  std::vector<std::vector<int>> rank(static_cast<std::size_t>(nc), std::vector<int>(static_cast<std::size_t>(n), 0));
  std::vector<int> seen(static_cast<std::size_t>(nc), 0);
  for (const auto& p : passages) {
    side[static_cast<std::size_t>(p.crossing)][static_cast<std::size_t>(p.in)] = p.ccw;
    side[static_cast<std::size_t>(p.crossing)][static_cast<std::size_t>(p.out)] = p.ccw;
    rank[static_cast<std::size_t>(p.crossing)][static_cast<std::size_t>(p.in % n)] = ++seen[static_cast<std::size_t>(p.crossing)];
  }
  // New spoke of old spoke k: 2k + 1 if the companion sits counterclockwise
  // of it (and takes 2k), else 2k (companion at 2k + 1).  The labels are then
  // rotated so that spoke 0 carries the top strand.
  MultiCrossingDiagram out;
  std::vector<int> shift(static_cast<std::size_t>(nc));
  for (int c = 0; c < nc; ++c) {
    const auto& t = d.crossings[static_cast<std::size_t>(c)];
    std::vector<int> h(static_cast<std::size_t>(4 * n));
    for (int k = 0; k < 2 * n; ++k) {
      const bool ccw = side[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] == 1;
      h[static_cast<std::size_t>(2 * k + (ccw ? 1 : 0))] = t.height_at(k) + n;
      h[static_cast<std::size_t>(2 * k + (ccw ? 0 : 1))] = rank[static_cast<std::size_t>(c)][static_cast<std::size_t>(k % n)];
    }
    const int top = static_cast<int>(std::find(h.begin(), h.end(), 1) - h.begin());
    std::vector<int> heights;
    for (int j = 0; j < 2 * n; ++j) heights.push_back(h[static_cast<std::size_t>((top + j) % (4 * n))]);
    out.crossings.push_back(CrossingType::from_heights(std::move(heights)));
    shift[static_cast<std::size_t>(c)] = top;
  }
  auto relabel = [&](int c, int spoke) { return Endpoint{c, ((spoke - shift[static_cast<std::size_t>(c)]) % (4 * n) + 4 * n) % (4 * n)}; };
  auto knot_end = [&](Endpoint e) {
    const bool ccw = side[static_cast<std::size_t>(e.crossing)][static_cast<std::size_t>(e.spoke)] == 1;
    return relabel(e.crossing, 2 * e.spoke + (ccw ? 1 : 0));
  };
  auto companion_end = [&](int c, int k) {
    const bool ccw = side[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] == 1;
    return relabel(c, 2 * k + (ccw ? 0 : 1));
  };
  for (int i = 0; i < static_cast<int>(d.edges.size()); ++i)
    if (i != basepoint) out.edges.push_back({knot_end(d.edges[static_cast<std::size_t>(i)].first), knot_end(d.edges[static_cast<std::size_t>(i)].second)});
  for (std::size_t t = 0; t + 1 < passages.size(); ++t)
    out.edges.push_back({companion_end(passages[t].crossing, passages[t].out), companion_end(passages[t + 1].crossing, passages[t + 1].in)});
  // Splice: the knot leaves the last crossing into the companion's end,
  // runs back along it, and continues from the companion's start.
  out.edges.push_back({knot_end(last), companion_end(passages.back().crossing, passages.back().out)});
  out.edges.push_back({companion_end(passages.front().crossing, passages.front().in), knot_end(first)});
  return out;
}

/// Two order-n crossings joined by k >= 2 (even) parallel edges; the
/// remaining spokes in each gap between consecutive joining spokes are
/// matched without crossings inside that gap.
struct TwoCrossingShape {
  CrossingType first, second;
  std::vector<int> joined_first;   // clockwise joining spokes of crossing 0
  std::vector<int> joined_second;  // clockwise joining spokes of crossing 1
  int offset = 0;                  // joined_first[i] meets joined_second[(offset - i) mod k]
};

namespace detail {

/// Gaps of `n2` spokes between consecutive members of `joined`, each as the
/// list of spokes clockwise.
inline std::vector<std::vector<int>> spoke_gaps(const std::vector<int>& joined, int n2) {
  std::vector<std::vector<int>> gaps;
  for (std::size_t i = 0; i < joined.size(); ++i) {
    std::vector<int> g;
    const int from = joined[i], to = joined[(i + 1) % joined.size()];
    for (int s = (from + 1) % n2; s != to; s = (s + 1) % n2) g.push_back(s);
    gaps.push_back(std::move(g));
  }
  return gaps;
}

}  // namespace detail

/// Builds the diagram of `shape` with the given per-gap split indices
/// (gaps of crossing 0 first, then of crossing 1; empty gaps skipped).
/// Returns nullopt if some gap has odd size.
inline std::optional<MultiCrossingDiagram> two_crossing_diagram(const TwoCrossingShape& shape, const std::vector<int>& gap_choices) {
  const int n2 = 2 * shape.first.order();
  const std::size_t k = shape.joined_first.size();
  MultiCrossingDiagram d;
  d.crossings = {shape.first, shape.second};
  for (std::size_t i = 0; i < k; ++i)
    d.edges.push_back({{0, shape.joined_first[i]}, {1, shape.joined_second[(static_cast<std::size_t>(shape.offset) + k - i) % k]}});
  std::size_t choice = 0;
  for (int c = 0; c < 2; ++c) {
    for (const auto& g : detail::spoke_gaps(c == 0 ? shape.joined_first : shape.joined_second, n2)) {
      if (g.size() % 2) return std::nullopt;
      if (g.empty()) continue;
      const auto& split = SplitCatalog::of(static_cast<int>(g.size() / 2)).at(gap_choices.at(choice++));
      for (auto [a, b] : split.pairs()) d.edges.push_back({{c, g[static_cast<std::size_t>(a)]}, {c, g[static_cast<std::size_t>(b)]}});
    }
  }
  return d;
}

/// Visits every two-crossing diagram of order n (all types, joining sets,
/// offsets and gap matchings) in a fixed order; stops when fn returns false.
template <typename Fn>
void for_each_two_crossing_diagram(int n, Fn&& fn) {
  const int n2 = 2 * n;
  const auto types = all_types(n);
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << n2); ++mask) {
    const int k = __builtin_popcount(static_cast<unsigned>(mask));
    if (k < 2 || k % 2) continue;
    std::vector<int> s;
    for (int i = 0; i < n2; ++i)
      if (mask >> i & 1) s.push_back(i);
    bool even = true;
    for (const auto& g : detail::spoke_gaps(s, n2)) even = even && g.size() % 2 == 0;
    if (even) subsets.push_back(std::move(s));
  }
  for (const auto& t0 : types)
    for (const auto& t1 : types)
      for (const auto& s0 : subsets)
        for (const auto& s1 : subsets) {
          if (s0.size() != s1.size()) continue;
          for (int off = 0; off < static_cast<int>(s0.size()); ++off) {
            TwoCrossingShape shape{t0, t1, s0, s1, off};
            std::vector<int> radix;
            for (const auto* joined : {&s0, &s1})
              for (const auto& g : detail::spoke_gaps(*joined, n2))
                if (!g.empty()) radix.push_back(static_cast<int>(catalan(static_cast<int>(g.size() / 2))));
            std::vector<int> digit(radix.size(), 0);
            while (true) {
              if (!fn(*two_crossing_diagram(shape, digit))) return;
              std::size_t i = 0;
              while (i < radix.size() && ++digit[i] == radix[i]) digit[i++] = 0;
              if (i == radix.size()) break;
            }
          }
        }
}

/// A seeded random two-crossing diagram of order n.
template <typename Rng>
MultiCrossingDiagram random_two_crossing_diagram(int n, Rng& rng) {
  const int n2 = 2 * n;
  const auto types = all_types(n);
  auto pick = [&](std::size_t size) { return static_cast<std::size_t>(rng() % size); };
  auto random_joined = [&](int k) {
    while (true) {
      std::vector<int> spokes(static_cast<std::size_t>(n2));
      std::iota(spokes.begin(), spokes.end(), 0);
      for (std::size_t i = spokes.size(); i > 1; --i) std::swap(spokes[i - 1], spokes[pick(i)]);
      std::vector<int> s(spokes.begin(), spokes.begin() + k);
      std::sort(s.begin(), s.end());
      bool even = true;
      for (const auto& g : detail::spoke_gaps(s, n2)) even = even && g.size() % 2 == 0;
      if (even) return s;
    }
  };
  const int k = 2 * (1 + static_cast<int>(pick(static_cast<std::size_t>(n))));
  TwoCrossingShape shape{types[pick(types.size())], types[pick(types.size())], random_joined(k), random_joined(k), static_cast<int>(pick(static_cast<std::size_t>(k)))};
  std::vector<int> choices;
  for (const auto* joined : {&shape.joined_first, &shape.joined_second})
    for (const auto& g : detail::spoke_gaps(*joined, n2))
      if (!g.empty()) choices.push_back(static_cast<int>(pick(catalan(static_cast<int>(g.size() / 2)))));
  return *two_crossing_diagram(shape, choices);
}

}  // namespace mcknot
