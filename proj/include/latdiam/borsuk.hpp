#pragma once

// Discrete Borsuk partitions: split a lattice point set into parts of strictly
// smaller lattice diameter. A labeling does this iff it properly colors the
// graph joining pairs at lattice distance ldiam(S).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "latdiam/core.hpp"
#include "latdiam/oracle.hpp"

namespace latdiam {

struct BorsukGraph {
  PointSet vertices;
  /// Index pairs (i, j), i < j, into `vertices`.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adjacency;
  Integer diam;

  std::size_t degree(std::size_t i) const { return adjacency[i].size(); }
  std::size_t max_degree() const {
    std::size_t m = 0;
    for (const auto& a : adjacency) m = std::max(m, a.size());
    return m;
  }
  bool adjacent(std::size_t i, std::size_t j) const {
    const auto& a = adjacency[i];
    return std::binary_search(a.begin(), a.end(), j);
  }
};

struct BorsukPartition {
  std::vector<PointSet> parts;
  std::map<LatticePoint, std::size_t> labels;
};

inline BorsukGraph build_borsuk_graph(
    const PointSet& s, std::size_t budget = kDefaultOraclePointBudget) {
  if (s.size() < 2) throw ValidationError("Borsuk graph needs >= 2 points");
  const OracleReport report = brute_force_diameter(s, budget);
  BorsukGraph g{s, {}, std::vector<std::vector<std::size_t>>(s.size()),
                report.ldiam};
  for (const auto& [x, y] : report.segments) {
    std::size_t i = *s.index_of(x), j = *s.index_of(y);
    g.edges.emplace_back(i, j);
    g.adjacency[i].push_back(j);
    g.adjacency[j].push_back(i);
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  return g;
}

inline bool is_proper_coloring(const BorsukGraph& g,
                               const std::vector<std::size_t>& colors) {
  if (colors.size() != g.vertices.size()) return false;
  return std::none_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
    return colors[e.first] == colors[e.second];
  });
}

inline BorsukPartition partition_from_colors(
    const PointSet& s, const std::vector<std::size_t>& colors) {
  std::size_t k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<std::vector<LatticePoint>> buckets(k);
  BorsukPartition out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    buckets[colors[i]].push_back(s[i]);
    out.labels.emplace(s[i], colors[i]);
  }
  for (auto& b : buckets) out.parts.emplace_back(std::move(b));
  return out;
}

/// Every part is nonempty and has oracle lattice diameter below ldiam(S).
inline bool is_valid_borsuk_partition(const PointSet& s,
                                      const BorsukPartition& partition) {
  const Integer diam = oracle_ldiam(s);
  std::size_t covered = 0;
  for (const auto& part : partition.parts) {
    if (part.empty()) return false;
    for (const auto& x : part)
      if (!s.contains(x)) return false;
    covered += part.size();
    if (oracle_ldiam(part) >= diam) return false;
  }
  return covered == s.size();
}

/// Greedy coloring of the Borsuk graph in canonical (lexicographic) order.
/// Greedy never needs more than max_degree + 1 <= 2^d colors.
inline BorsukPartition greedy_partition(
    const PointSet& s, std::size_t budget = kDefaultOraclePointBudget) {
  const BorsukGraph g = build_borsuk_graph(s, budget);
  const std::size_t n = s.size();
  constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);
  std::vector<std::size_t> colors(n, kUncolored);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> used(g.degree(i) + 1, false);
    for (std::size_t j : g.adjacency[i])
      if (colors[j] != kUncolored && colors[j] < used.size()) used[colors[j]] = true;
    colors[i] = static_cast<std::size_t>(
        std::find(used.begin(), used.end(), false) - used.begin());
  }
  if (!is_proper_coloring(g, colors))
    throw std::logic_error("greedy coloring is not proper");
  BorsukPartition p = partition_from_colors(s, colors);
  for (const auto& part : p.parts)
    if (oracle_ldiam(part, budget) >= g.diam)
      throw std::logic_error("Borsuk part keeps the full lattice diameter");
  return p;
}

namespace detail {

// DSATUR-ordered branch and bound for the chromatic number.
class ChromaticSearch {
 public:
  ChromaticSearch(const BorsukGraph& g, std::uint64_t node_budget)
      : g_(g), budget_(node_budget), colors_(g.vertices.size(), kNone) {}

  /// Smallest k in [lower, upper] admitting a proper k-coloring; `upper` must
  /// be achievable.
  std::size_t run(std::size_t lower, std::size_t upper) {
    std::size_t best = upper;
    while (best > lower) {
      std::fill(colors_.begin(), colors_.end(), kNone);
      if (!extend(best - 1, 0)) break;
      best -= 1;
    }
    return best;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool extend(std::size_t k, std::size_t colored) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("chromatic search exceeded " +
                           std::to_string(budget_) + " nodes");
    const std::size_t n = colors_.size();
    if (colored == n) return true;
    // Uncolored vertex with the most distinct neighbor colors, then degree.
    std::size_t pick = kNone, pick_sat = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors_[v] != kNone) continue;
      std::size_t sat = saturation(v, k);
      if (pick == kNone || sat > pick_sat ||
          (sat == pick_sat && g_.degree(v) > g_.degree(pick))) {
        pick = v;
        pick_sat = sat;
      }
    }
    std::size_t highest = 0;
    for (std::size_t c : colors_)
      if (c != kNone) highest = std::max(highest, c + 1);
    // Colors beyond the first unused one are symmetric.
    for (std::size_t c = 0; c < k && c <= highest; ++c) {
      bool clash = false;
      for (std::size_t w : g_.adjacency[pick])
        if (colors_[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colors_[pick] = c;
      if (extend(k, colored + 1)) return true;
      colors_[pick] = kNone;
    }
    return false;
  }

  std::size_t saturation(std::size_t v, std::size_t k) const {
    std::vector<bool> seen(k, false);
    std::size_t s = 0;
    for (std::size_t w : g_.adjacency[v])
      if (colors_[w] != kNone && colors_[w] < k && !seen[colors_[w]]) {
        seen[colors_[w]] = true;
        ++s;
      }
    return s;
  }

  const BorsukGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> colors_;
};

inline void grow_clique(const BorsukGraph& g, std::vector<std::size_t>& clique,
                        std::vector<std::size_t> candidates, std::size_t& best) {
  if (clique.size() + candidates.size() <= best) return;
  if (candidates.empty()) {
    best = std::max(best, clique.size());
    return;
  }
  while (!candidates.empty()) {
    if (clique.size() + candidates.size() <= best) return;
    std::size_t v = candidates.back();
    candidates.pop_back();
    std::vector<std::size_t> next;
    for (std::size_t w : candidates)
      if (g.adjacent(v, w)) next.push_back(w);
    clique.push_back(v);
    grow_clique(g, clique, std::move(next), best);
    clique.pop_back();
  }
}

}  // namespace detail

/// Size of a largest clique of the Borsuk graph (exhaustive; the graph has
/// maximum degree <= 2^d - 1, so cliques stay small).
inline std::size_t clique_number(const BorsukGraph& g) {
  std::size_t best = g.vertices.empty() ? 0 : 1;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    std::vector<std::size_t> clique{v};
    std::vector<std::size_t> later;
    for (std::size_t w : g.adjacency[v])
      if (w > v) later.push_back(w);
    detail::grow_clique(g, clique, std::move(later), best);
  }
  return best;
}

inline constexpr std::uint64_t kDefaultChromaticBudget = 2'000'000;

/// Exact lattice Borsuk number, the chromatic number of the Borsuk graph,
/// bracketed by the clique number and the greedy bound. Throws BudgetExceeded
/// when the search tree grows past `node_budget`.
inline std::size_t exact_borsuk_number(
    const PointSet& s, std::uint64_t node_budget = kDefaultChromaticBudget) {
  if (s.size() < 2) throw ValidationError("Borsuk number needs >= 2 points");
  const BorsukGraph g = build_borsuk_graph(s);
  const std::size_t lower = clique_number(g);
  const std::size_t upper = greedy_partition(s).parts.size();
  if (lower == upper) return lower;
  return detail::ChromaticSearch(g, node_budget).run(lower, upper);
}

/// Components where chi = max degree + 1 is forced (complete graphs, odd
/// cycles). Classification only; no Delta-coloring is attempted.
struct BrooksReport {
  std::size_t max_degree = 0;
  std::size_t components = 0;
  std::size_t complete_components = 0;
  std::size_t odd_cycle_components = 0;
  /// chi(G) == max_degree + 1 for the whole graph.
  bool delta_plus_one_tight = false;
};

inline BrooksReport classify_brooks(const BorsukGraph& g) {
  BrooksReport r;
  r.max_degree = g.max_degree();
  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> comp(n, static_cast<std::size_t>(-1));
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != static_cast<std::size_t>(-1)) continue;
    std::vector<std::size_t> members{s};
    comp[s] = r.components;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t w : g.adjacency[members[i]])
        if (comp[w] == static_cast<std::size_t>(-1)) {
          comp[w] = r.components;
          members.push_back(w);
        }
    ++r.components;
    const std::size_t m = members.size();
    std::size_t deg = 0;
    bool regular = true;
    for (std::size_t v : members) {
      deg = std::max(deg, g.degree(v));
      regular = regular && g.degree(v) == g.degree(members[0]);
    }
    bool complete = regular && g.degree(members[0]) == m - 1;
    bool odd_cycle = regular && deg == 2 && m % 2 == 1;
    if (complete) ++r.complete_components;
    if (odd_cycle && !complete) ++r.odd_cycle_components;
    if ((complete || odd_cycle) && deg == r.max_degree) r.delta_plus_one_tight = true;
  }
  return r;
}

/// Whether S is exactly the lattice points of a translated box [0, m]^d, the
/// obvious axis-aligned case of a lattice cube. Coarse evidence for which sets
/// attain 2^d parts; not a unimodular-equivalence test.
inline bool is_axis_cube(const PointSet& s) {
  if (s.empty()) return false;
  const std::size_t d = s.dim();
  std::vector<Integer> lo(s[0].coords), hi(s[0].coords);
  for (const auto& p : s)
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  const Integer m = hi[0] - lo[0];
  Integer expected = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (hi[i] - lo[i] != m) return false;
    expected *= m + 1;
  }
  // Every point lies in the box, so the counts agree iff S fills it.
  return Integer(s.size()) == expected;
}

}  // namespace latdiam
