#pragma once

// Lattice diameter of a lattice polygon via edge/opposite-vertex triangles.
//
// For every edge e and every vertex v minimizing the edge's outward normal
// functional, the triangle conv(e, v) is scanned level by level in that
// functional, starting next to v. The first lattice points reached span the
// lines through v with the most lattice points in the triangle; at most three
// such lines can be diameter lines of P, so three candidates per triangle
// suffice. Every diameter direction of P has a diameter line of this form.
//
// The level scan is pseudo-polynomial in the lattice width of the triangle
// (one extended-Euclid solve per polygon edge, O(1) integer work per level)
// rather than polynomial via a planar integer program.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "latdiam/core.hpp"
#include "latdiam/lines2d.hpp"

namespace latdiam {

struct OppositePair {
  std::size_t edge_index = 0;
  LatticePoint edge_from, edge_to;
  LatticePoint vertex;
  /// Primitive outward normal of the edge; <normal, vertex> is minimal over P.
  LatticePoint normal;
};

struct DiameterReport {
  Integer ldiam;
  /// Every lattice diameter line of P, canonical order.
  std::vector<LatticeLine> lines;
  /// Normalized diameter directions, sorted.
  std::vector<Direction> directions;
  /// L ∩ P for one vertex-incident diameter line per direction, same order as
  /// `directions`.
  std::vector<ClippedSegment> representative_segments;
  /// The diameter lines produced by the triangle search itself (each passes
  /// through a vertex); a subset of `lines` covering every direction.
  std::vector<LatticeLine> vertex_lines;
};

inline std::vector<OppositePair> opposite_pairs(const Polygon2& p) {
  std::vector<OppositePair> out;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [from, to] = p.edge(i);
    LatticePoint d = to - from;
    // Interior is to the left of a counter-clockwise edge.
    LatticePoint a(std::vector<Integer>{d[1], -d[0]});
    Integer g = content(a);
    a[0] /= g;
    a[1] /= g;
    Integer best = dot(a, p.vertex(0));
    for (const auto& v : p.vertices()) best = std::min(best, dot(a, v));
    std::vector<LatticePoint> opposite;
    for (const auto& v : p.vertices())
      if (dot(a, v) == best) opposite.push_back(v);
    std::sort(opposite.begin(), opposite.end());
    for (auto& v : opposite)
      out.push_back(OppositePair{i, from, to, std::move(v), a});
  }
  return out;
}

/// Up to three lines through v, greedily chosen from the lattice points of
/// T = conv(e, v) in increasing order of <a, .>: each new point must avoid
/// the lines already chosen. Lines through points of lower level contain at
/// least as many lattice points of T.
inline std::vector<LatticeLine> local_diameter_lines(
    const LatticePoint& edge_from, const LatticePoint& edge_to,
    const LatticePoint& v, const LatticePoint& a) {
  const auto region = ConvexRegion2::from_polygon(
      Polygon2({edge_from, edge_to, v}));
  const Integer start = dot(a, v);
  const Integer stop = dot(a, edge_from);
  if (dot(a, edge_to) != stop || stop <= start)
    throw ValidationError("vertex is not opposite to the edge");

  auto [g, s, t] = extended_gcd(a[0], a[1]);
  if (g != 1) throw ValidationError("edge normal must be primitive");
  const LatticePoint step(std::vector<Integer>{-a[1], a[0]});

  std::vector<LatticeLine> lines;
  for (Integer level = start + 1; level <= stop && lines.size() < 3; ++level) {
    LatticePoint x0(std::vector<Integer>{s * level, t * level});
    auto range = lattice_parameter_range(region, x0, step);
    if (!range) continue;
    // Each chosen line meets this level at most once, so at most
    // lines.size() parameters get skipped here.
    for (Integer k = range->lo; k <= range->hi && lines.size() < 3; ++k) {
      LatticePoint w = x0 + k * step;
      bool covered = false;
      for (const auto& l : lines)
        if (l.contains(w)) {
          covered = true;
          break;
        }
      if (!covered) lines.push_back(LatticeLine::through(v, w));
    }
  }
  return lines;
}

inline std::vector<LatticeLine> local_diameter_lines(const OppositePair& pair) {
  return local_diameter_lines(pair.edge_from, pair.edge_to, pair.vertex,
                              pair.normal);
}

/// Minimum and maximum of <a, v> over the vertices.
inline std::pair<Integer, Integer> level_range(const Polygon2& p,
                                               const LatticePoint& a) {
  Integer lo = dot(a, p.vertex(0)), hi = lo;
  for (const auto& v : p.vertices()) {
    Integer x = dot(a, v);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return {lo, hi};
}

/// Lattice point counts of every u-lattice line meeting the region, keyed by
/// level <(-u2, u1), x>.
inline std::map<Integer, Integer> direction_profile(const Polygon2& p,
                                                    const Direction& u) {
  const auto region = ConvexRegion2::from_polygon(p);
  auto [lo, hi] = level_range(p, transverse_normal(u));
  std::map<Integer, Integer> profile;
  for (Integer level = lo; level <= hi; ++level)
    profile.emplace(level, lattice_count(region, line_at_level(u, level)));
  return profile;
}

/// All u-lattice lines of P containing exactly `target` lattice points of P.
inline std::vector<LatticeLine> lines_in_direction_with_count(
    const Polygon2& p, const Direction& u, const Integer& target) {
  const auto region = ConvexRegion2::from_polygon(p);
  auto [lo, hi] = level_range(p, transverse_normal(u));
  std::vector<LatticeLine> out;
  for (Integer level = lo; level <= hi; ++level) {
    LatticeLine l = line_at_level(u, level);
    if (lattice_count(region, l) == target) out.push_back(std::move(l));
  }
  return out;
}

inline DiameterReport compute_diameter(const Polygon2& p) {
  const auto region = ConvexRegion2::from_polygon(p);
  std::set<LatticeLine> candidates;
  for (const auto& pair : opposite_pairs(p))
    for (auto& l : local_diameter_lines(pair)) candidates.insert(std::move(l));

  Integer best = 0;
  std::vector<std::pair<LatticeLine, Integer>> counted;
  for (const auto& l : candidates) {
    Integer c = lattice_count(region, l);
    best = std::max(best, c);
    counted.emplace_back(l, c);
  }

  DiameterReport report;
  report.ldiam = best - 1;
  std::set<Direction> dirs;
  for (const auto& [l, c] : counted)
    if (c == best) {
      report.vertex_lines.push_back(l);
      dirs.insert(l.dir());
    }
  report.directions.assign(dirs.begin(), dirs.end());

  std::set<LatticeLine> all;
  for (const auto& u : report.directions) {
    for (auto& l : lines_in_direction_with_count(p, u, best))
      all.insert(std::move(l));
    auto first = std::find_if(
        report.vertex_lines.begin(), report.vertex_lines.end(),
        [&](const LatticeLine& l) { return l.dir() == u; });
    report.representative_segments.push_back(*clip_line(region, *first));
  }
  report.lines.assign(all.begin(), all.end());
  return report;
}

struct DirectionalDiameter {
  LatticeLine line;
  Integer count;
};

/// A u-lattice line with the most lattice points of P among all lines with
/// direction u. Some such line passes through a vertex, so the vertex lines
/// are the only candidates. Ties resolve to the first vertex in polygon order.
inline std::optional<DirectionalDiameter> u_diameter_line(const Polygon2& p,
                                                          const Direction& u) {
  if (u.dim() != 2) throw ValidationError("direction must be planar");
  const auto region = ConvexRegion2::from_polygon(p);
  std::optional<DirectionalDiameter> best;
  for (const auto& v : p.vertices()) {
    LatticeLine l(v, u);
    Integer c = lattice_count(region, l);
    if (!best || c > best->count) best = DirectionalDiameter{l, c};
  }
  return best;
}

}  // namespace latdiam
