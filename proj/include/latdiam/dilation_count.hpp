#pragma once

// LD_P(k): the number of lattice diameter lines of the dilate kP, its
// eventual quasi-polynomial, and the q-block view of a parallelogram chamber.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "latdiam/core.hpp"
#include "latdiam/diameter2d.hpp"
#include "latdiam/lines2d.hpp"

namespace latdiam {

/// The fitted function failed to reproduce a sampled count.
class FitError : public Error {
 public:
  FitError(const std::string& what, Integer k) : Error(what), k_(std::move(k)) {}
  const Integer& offending_k() const { return k_; }

 private:
  Integer k_;
};

/// k -> slope_i * k + intercept_i for k = i (mod period), k >= valid_from.
struct QuasiPolynomial {
  Integer period;
  /// (slope, intercept) indexed by residue k mod period.
  std::vector<std::pair<Rational, Rational>> pieces;
  Integer valid_from;
  /// Denominator of the largest normalized diameter-line length of P; the
  /// minimal period divides it.
  Integer derived_q;

  Rational evaluate(const Integer& k) const {
    const auto& [slope, intercept] =
        pieces[mod_floor(k, period).convert_to<std::size_t>()];
    return slope * Rational(k) + intercept;
  }

  bool has_linear_piece() const {
    return std::any_of(pieces.begin(), pieces.end(),
                       [](const auto& p) { return p.first != 0; });
  }
};

/// Number of distinct lattice diameter lines of kP. Each diameter direction
/// of kP contributes the transverse levels whose line reaches ldiam + 1
/// lattice points.
inline Integer count_diameter_lines(const Polygon2& p, const Integer& k) {
  if (k < 1) throw ValidationError("dilation factor must be >= 1");
  const Polygon2 kp = p.dilate(k);
  const DiameterReport report = compute_diameter(kp);
  Integer total = 0;
  for (const auto& u : report.directions)
    total += lines_in_direction_with_count(kp, u, report.ldiam + 1).size();
  return total;
}

/// LD_P(1), ..., LD_P(k_max), spread over up to `threads` workers.
inline std::vector<Integer> count_diameter_lines_range(const Polygon2& p,
                                                       std::size_t k_max,
                                                       std::size_t threads = 1) {
  std::vector<Integer> out(k_max);
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(k_max, 1));
  if (threads == 1) {
    for (std::size_t k = 1; k <= k_max; ++k)
      out[k - 1] = count_diameter_lines(p, k);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t k = t + 1; k <= k_max; k += threads)
          out[k - 1] = count_diameter_lines(p, k);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Largest nvol(L ∩ P) over the lattice diameter lines L of P.
inline Rational max_diameter_nvol(const Polygon2& p) {
  const auto region = ConvexRegion2::from_polygon(p);
  Rational best = 0;
  for (const auto& l : compute_diameter(p).lines)
    best = std::max(best, nvol(*clip_line(region, l)));
  return best;
}

/// The q of the period argument: denominator of max_diameter_nvol(P).
inline Integer derived_period(const Polygon2& p) {
  return denominator(max_diameter_nvol(p));
}

/// Smallest k_max giving every residue class three samples in [q, k_max].
inline Integer minimum_fit_range(const Integer& q) { return 4 * q - 1; }

/// Fits LD_P with one linear piece per residue of the derived period q.
/// Pieces come from the two largest samples of each residue and are checked
/// against every sample k >= q; valid_from is the smallest k from which all
/// samples agree. The reported period is the smallest divisor of q that
/// reproduces the same pieces.
inline QuasiPolynomial fit_quasipolynomial(const Polygon2& p,
                                           const Integer& k_max,
                                           std::size_t threads = 1) {
  const Integer q = derived_period(p);
  if (k_max < minimum_fit_range(q))
    throw ValidationError("k_max = " + k_max.str() + " is too small; need >= " +
                          minimum_fit_range(q).str() + " for period " +
                          q.str());
  const auto n = k_max.convert_to<std::size_t>();
  const auto qn = q.convert_to<std::size_t>();
  const auto values = count_diameter_lines_range(p, n, threads);
  auto ld = [&](std::size_t k) { return Rational(values[k - 1]); };

  QuasiPolynomial fit;
  fit.derived_q = q;
  fit.period = q;
  fit.pieces.resize(qn);
  for (std::size_t i = 0; i < qn; ++i) {
    std::size_t k2 = n - (n + qn - i) % qn;  // largest k <= n with k = i mod q
    std::size_t k1 = k2 - qn;
    Rational slope = (ld(k2) - ld(k1)) / Rational(k2 - k1);
    fit.pieces[i] = {slope, ld(k2) - slope * Rational(k2)};
  }

  std::size_t last_bad = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (fit.evaluate(k) != ld(k)) last_bad = k;
  if (last_bad >= qn)
    throw FitError("quasi-polynomial fit fails at k = " +
                       std::to_string(last_bad),
                   Integer(last_bad));
  fit.valid_from = last_bad + 1;

  for (std::size_t d = 1; d < qn; ++d) {
    if (qn % d != 0) continue;
    bool same = true;
    for (std::size_t i = 0; i < qn && same; ++i)
      same = fit.pieces[i] == fit.pieces[i % d];
    if (same) {
      fit.pieces.resize(d);
      fit.period = d;
      break;
    }
  }
  return fit;
}

// ---------------------------------------------------------------------------
// Parallelogram chambers and q-blocks

/// Rational parallelogram, vertices counter-clockwise.
struct RationalParallelogram {
  std::vector<RationalPoint> vertices;
};

struct ResidueBlocks {
  Integer n;    ///< diameter lines per q-block
  Integer r;    ///< diameter lines among the lines outside full q-blocks
  Integer rem;  ///< number of lines outside full q-blocks, (i*w + 1) mod q
};

struct BlockDecomposition {
  Integer q;
  Integer w;
  std::vector<ResidueBlocks> per_residue;

  /// floor((k*w + 1) / q): the number of full q-blocks of kR.
  Integer blocks(const Integer& k) const { return floor_div(k * w + 1, q); }

  /// n_i * blocks_i(k) + r_i with i = k mod q.
  Integer evaluate(const Integer& k) const {
    const auto& row = per_residue[mod_floor(k, q).convert_to<std::size_t>()];
    return row.n * blocks(k) + row.r;
  }
};

namespace detail {

struct ChamberFrame {
  ConvexRegion2 region;
  Integer low;   // lower level of the u-edges
  Integer w;     // level difference between the u-edges
  Integer q;
};

inline ChamberFrame chamber_frame(const RationalParallelogram& r,
                                  const Direction& u) {
  const auto& v = r.vertices;
  if (v.size() != 4) throw ValidationError("parallelogram needs 4 vertices");
  if (u.dim() != 2) throw ValidationError("direction must be planar");
  for (const auto& x : v)
    if (x.dim() != 2) throw ValidationError("vertices must be planar");
  for (std::size_t c = 0; c < 2; ++c)
    if (v[0][c] + v[2][c] != v[1][c] + v[3][c])
      throw ValidationError("vertices do not form a parallelogram");

  const LatticePoint a = transverse_normal(u);
  auto level = [&](const RationalPoint& x) {
    return Rational(a[0]) * x[0] + Rational(a[1]) * x[1];
  };
  // Edges i and i+2 are parallel; find the pair parallel to u.
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < 2; ++i)
    if (level(v[i]) == level(v[i + 1])) first = i;
  if (!first) throw ValidationError("no pair of edges is parallel to u");
  for (std::size_t e : {*first, *first + 2}) {
    const auto& p = v[e];
    const auto& s = v[(e + 1) % 4];
    if (!p.is_lattice() && !s.is_lattice())
      throw ValidationError("every u-edge needs an integral vertex");
  }
  Rational l0 = level(v[*first]), l1 = level(v[*first + 2]);
  if (l0 == l1) throw ValidationError("parallelogram is degenerate");
  Integer lo = numerator(std::min(l0, l1)), hi = numerator(std::max(l0, l1));

  // Side edge direction, scaled to a primitive integer vector.
  const auto& side_from = v[(*first + 1) % 4];
  const auto& side_to = v[(*first + 2) % 4];
  Rational sx = side_to[0] - side_from[0];
  Rational sy = side_to[1] - side_from[1];
  Integer l = boost::multiprecision::lcm(denominator(sx), denominator(sy));
  LatticePoint d(std::vector<Integer>{numerator(sx * l), numerator(sy * l)});
  Integer g = content(d);
  d[0] /= g;
  d[1] /= g;
  Integer q = abs(dot(a, d));

  std::vector<RationalPoint> ccw = v;
  Rational area2 = 0;
  for (std::size_t i = 0; i < 4; ++i)
    area2 += ccw[i][0] * ccw[(i + 1) % 4][1] - ccw[i][1] * ccw[(i + 1) % 4][0];
  if (area2 < 0) std::reverse(ccw.begin(), ccw.end());
  return {ConvexRegion2::from_ccw(ccw), lo, hi - lo, q};
}

inline ConvexRegion2 dilate_region(const ConvexRegion2& r, const Integer& k) {
  std::vector<HalfPlane> hp = r.planes();
  for (auto& h : hp) h.offset *= k;
  return ConvexRegion2(std::move(hp));
}

/// chi_k(j) for j = 0..k*w: whether the u-line at level k*low + j is a
/// u-lattice diameter line of kR.
inline std::vector<bool> diameter_indicator(const ChamberFrame& f,
                                            const Direction& u,
                                            const Integer& k) {
  const ConvexRegion2 kr = dilate_region(f.region, k);
  const Integer lines = k * f.w + 1;
  std::vector<Integer> counts;
  counts.reserve(lines.convert_to<std::size_t>());
  for (Integer j = 0; j < lines; ++j)
    counts.push_back(lattice_count(kr, line_at_level(u, k * f.low + j)));
  const Integer best = *std::max_element(counts.begin(), counts.end());
  std::vector<bool> chi;
  chi.reserve(counts.size());
  for (const auto& c : counts) chi.push_back(c == best);
  return chi;
}

}  // namespace detail

/// LD_{R,u}(k) by direct counting over all u-lines of kR.
inline Integer count_u_diameter_lines(const RationalParallelogram& r,
                                      const Direction& u, const Integer& k) {
  if (k < 1) throw ValidationError("dilation factor must be >= 1");
  const auto chi = detail::diameter_indicator(detail::chamber_frame(r, u), u, k);
  return static_cast<long long>(std::count(chi.begin(), chi.end(), true));
}

/// q-block decomposition of a rational parallelogram R whose two u-edges each
/// contain an integral vertex. Per residue i the counts are read off the
/// representative dilate (q + i)R: n_i over its first q lines, r_i over the
/// rem_i lines past its last full block.
inline BlockDecomposition chamber_decomposition(const RationalParallelogram& r,
                                                const Direction& u) {
  const auto frame = detail::chamber_frame(r, u);
  BlockDecomposition out{frame.q, frame.w, {}};
  const auto qn = frame.q.convert_to<std::size_t>();
  for (std::size_t i = 0; i < qn; ++i) {
    const Integer k = frame.q + i;
    const auto chi = detail::diameter_indicator(frame, u, k);
    ResidueBlocks row;
    row.n = static_cast<long long>(std::count(chi.begin(), chi.begin() + qn, true));
    row.rem = mod_floor(Integer(i) * frame.w + 1, frame.q);
    const auto full = (out.blocks(k) * frame.q).convert_to<std::size_t>();
    row.r = static_cast<long long>(std::count(chi.begin() + full, chi.end(), true));
    if (Integer(chi.size() - full) != row.rem)
      throw std::logic_error("q-block bookkeeping is inconsistent");
    out.per_residue.push_back(row);
  }
  return out;
}

/// The chamber of P between vertex levels lo < hi in direction u, as a
/// parallelogram when its two side edges are parallel; nullopt otherwise.
inline std::optional<RationalParallelogram> parallel_chamber(
    const Polygon2& p, const Direction& u, const Integer& lo,
    const Integer& hi) {
  const LatticePoint a = transverse_normal(u);
  for (const auto& v : p.vertices()) {
    Integer l = dot(a, v);
    if (l > lo && l < hi)
      throw ValidationError("chamber levels must be consecutive vertex levels");
  }
  const auto region = ConvexRegion2::from_polygon(p);
  auto bottom = clip_line(region, line_at_level(u, lo));
  auto top = clip_line(region, line_at_level(u, hi));
  if (!bottom || !top) return std::nullopt;
  if (bottom->t1 == bottom->t2 || top->t1 == top->t2) return std::nullopt;
  if (nvol(*bottom) != nvol(*top)) return std::nullopt;
  // Equal chord lengths on both bounding levels make the sides parallel.
  RationalParallelogram r{{bottom->a, bottom->b, top->b, top->a}};
  Rational area2 = 0;
  for (std::size_t i = 0; i < 4; ++i)
    area2 += r.vertices[i][0] * r.vertices[(i + 1) % 4][1] -
             r.vertices[i][1] * r.vertices[(i + 1) % 4][0];
  if (area2 < 0) std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

/// Sorted distinct vertex levels <(-u2, u1), v> of P.
inline std::vector<Integer> vertex_levels(const Polygon2& p,
                                          const Direction& u) {
  const LatticePoint a = transverse_normal(u);
  std::set<Integer> levels;
  for (const auto& v : p.vertices()) levels.insert(dot(a, v));
  return {levels.begin(), levels.end()};
}

}  // namespace latdiam
