#pragma once

// Exact arithmetic, lattice points, directions, polygons and point sets.
// Everything in latdiam is integer or rational; there is no floating point
// anywhere in the library.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latdiam {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (dimension mismatch, degenerate
/// polygon, bad construction parameters, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine refused an instance larger than its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Integer helpers

inline Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// floor(a / b) for b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Integer q = a / b;  // truncates toward zero
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// ceil(a / b) for b != 0.
inline Integer ceil_div(const Integer& a, const Integer& b) {
  return -floor_div(-a, b);
}

/// Representative of a in {0, ..., m-1}.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  return a - floor_div(a, m) * m;
}

inline Integer floor(const Rational& r) {
  return floor_div(boost::multiprecision::numerator(r),
                   boost::multiprecision::denominator(r));
}

inline Integer ceil(const Rational& r) {
  return ceil_div(boost::multiprecision::numerator(r),
                  boost::multiprecision::denominator(r));
}

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

/// num/den in lowest terms. Boost rejects negative denominators for
/// unbounded integers, so the sign moves to the numerator first.
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw ValidationError("zero denominator");
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct BezoutResult {
  Integer g, x, y;
};

inline BezoutResult extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

/// Exact decimal or "p/q" rendering.
inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "17", "-3" or "17/3". Throws ValidationError on malformed text.
inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw ValidationError("malformed number '" + text + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9')
        throw ValidationError("malformed number '" + text + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
  return ratio(num, den);
}

inline Integer parse_integer(const std::string& text) {
  Rational r = parse_rational(text);
  if (!is_integral(r))
    throw ValidationError("expected an integer, got '" + text + "'");
  return numerator(r);
}

// ---------------------------------------------------------------------------
// Points

/// A point of Z^d.
struct LatticePoint {
  std::vector<Integer> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<Integer> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<long long> c) {
    coords.reserve(c.size());
    for (long long v : c) coords.emplace_back(v);
  }

  std::size_t dim() const { return coords.size(); }
  const Integer& operator[](std::size_t i) const { return coords[i]; }
  Integer& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend std::strong_ordering operator<=>(const LatticePoint& a,
                                          const LatticePoint& b) {
    return std::lexicographical_compare_three_way(
        a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end(),
        [](const Integer& x, const Integer& y) {
          return x < y ? std::strong_ordering::less
                 : y < x ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
        });
  }
};

inline void require_same_dim(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim())
    throw ValidationError("dimension mismatch: " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
}

inline LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a, b);
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

inline LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a, b);
  LatticePoint r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

inline LatticePoint operator*(const Integer& k, const LatticePoint& a) {
  LatticePoint r = a;
  for (auto& c : r.coords) c *= k;
  return r;
}

inline Integer dot(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const LatticePoint& a) {
  return std::all_of(a.coords.begin(), a.coords.end(),
                     [](const Integer& c) { return c == 0; });
}

/// gcd of the absolute coordinates; 0 for the zero vector.
inline Integer content(const LatticePoint& v) {
  Integer g = 0;
  for (const auto& c : v.coords) g = gcd(g, c);
  return g;
}

/// Cross product of two planar vectors.
inline Integer cross(const LatticePoint& a, const LatticePoint& b) {
  return a[0] * b[1] - a[1] * b[0];
}

inline std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

/// A point of Q^d.
struct RationalPoint {
  std::vector<Rational> coords;

  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
  explicit RationalPoint(const LatticePoint& p)
      : coords(p.coords.begin(), p.coords.end()) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  bool is_lattice() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](const Rational& c) { return is_integral(c); });
  }

  /// Lossless conversion; throws when some coordinate is not an integer.
  LatticePoint to_lattice() const {
    LatticePoint p;
    p.coords.reserve(coords.size());
    for (const auto& c : coords) {
      if (!is_integral(c))
        throw ValidationError("rational point is not a lattice point");
      p.coords.push_back(numerator(c));
    }
    return p;
  }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

inline std::string to_string(const RationalPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Directions

/// Primitive integer vector, sign-normalized so its first nonzero entry is
/// positive. u and -u (and every nonzero multiple) normalize identically.
class Direction {
 public:
  explicit Direction(std::vector<Integer> v) : vec_(std::move(v)) {
    normalize();
  }
  explicit Direction(const LatticePoint& v) : Direction(v.coords) {}
  Direction(std::initializer_list<long long> v)
      : Direction(LatticePoint(v).coords) {}

  const std::vector<Integer>& vec() const { return vec_; }
  std::size_t dim() const { return vec_.size(); }
  const Integer& operator[](std::size_t i) const { return vec_[i]; }
  LatticePoint as_point() const { return LatticePoint(vec_); }

  friend bool operator==(const Direction&, const Direction&) = default;
  friend std::strong_ordering operator<=>(const Direction& a,
                                          const Direction& b) {
    return a.as_point() <=> b.as_point();
  }

 private:
  void normalize() {
    if (vec_.empty()) throw ValidationError("direction of dimension 0");
    Integer g = 0;
    for (const auto& c : vec_) g = gcd(g, c);
    if (g == 0) throw ValidationError("direction must be nonzero");
    auto first = std::find_if(vec_.begin(), vec_.end(),
                              [](const Integer& c) { return c != 0; });
    if (*first < 0) g = -g;
    for (auto& c : vec_) c /= g;
  }

  std::vector<Integer> vec_;
};

inline std::string to_string(const Direction& d) {
  return to_string(d.as_point());
}

/// Primitive normal of a planar direction: (-u2, u1).
inline LatticePoint transverse_normal(const Direction& u) {
  if (u.dim() != 2) throw ValidationError("transverse normal needs d = 2");
  return LatticePoint(std::vector<Integer>{-u[1], u[0]});
}

// ---------------------------------------------------------------------------
// Point sets

/// Finite deduplicated set of lattice points of a common dimension, stored in
/// lexicographic order.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<LatticePoint> pts) : points_(std::move(pts)) {
    if (!points_.empty()) {
      dim_ = points_.front().dim();
      if (dim_ == 0) throw ValidationError("points must have dimension >= 1");
      for (const auto& p : points_)
        if (p.dim() != dim_)
          throw ValidationError("point set mixes dimensions");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const LatticePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
  }

  /// Position of p in the canonical order, or nullopt.
  std::optional<std::size_t> index_of(const LatticePoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<LatticePoint> points_;
  std::size_t dim_ = 0;
};

// ---------------------------------------------------------------------------
// Polygons

/// Convex lattice polygon: counter-clockwise, strictly convex, >= 3 vertices.
/// Construction accepts either orientation and any starting vertex, and
/// rejects degenerate or non-convex vertex lists.
class Polygon2 {
 public:
  explicit Polygon2(std::vector<LatticePoint> vertices)
      : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw ValidationError("polygon needs at least 3 vertices");
    for (const auto& v : vertices_)
      if (v.dim() != 2) throw ValidationError("polygon vertices must be 2D");
    Integer area2 = 0;
    for (std::size_t i = 0; i < n; ++i)
      area2 += cross(vertices_[i], vertices_[(i + 1) % n]);
    if (area2 == 0) throw ValidationError("polygon is degenerate");
    if (area2 < 0) std::reverse(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = vertices_[i];
      const auto& b = vertices_[(i + 1) % n];
      const auto& c = vertices_[(i + 2) % n];
      if (cross(b - a, c - b) <= 0)
        throw ValidationError("polygon is not strictly convex at vertex " +
                              to_string(b));
    }
    // Strict left turns everywhere still admit a star polygon winding twice.
    if (winding_turns() != 1) throw ValidationError("polygon is not simple");
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const LatticePoint& vertex(std::size_t i) const {
    return vertices_[i % vertices_.size()];
  }
  /// Edge i runs from vertex(i) to vertex(i+1).
  std::pair<const LatticePoint&, const LatticePoint&> edge(
      std::size_t i) const {
    return {vertex(i), vertex(i + 1)};
  }

  /// Twice the Euclidean area (an integer).
  Integer twice_area() const {
    Integer a = 0;
    for (std::size_t i = 0; i < size(); ++i) a += cross(vertex(i), vertex(i + 1));
    return a;
  }

  Polygon2 dilate(const Integer& k) const {
    if (k <= 0) throw ValidationError("dilation factor must be positive");
    std::vector<LatticePoint> v;
    v.reserve(size());
    for (const auto& p : vertices_) v.push_back(k * p);
    return Polygon2(std::move(v));
  }

  /// Weak containment (boundary included).
  bool contains(const LatticePoint& p) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (cross(vertex(i + 1) - vertex(i), p - vertex(i)) < 0) return false;
    return true;
  }

  bool on_boundary(const LatticePoint& p) const {
    if (!contains(p)) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (cross(vertex(i + 1) - vertex(i), p - vertex(i)) == 0) return true;
    return false;
  }

  friend bool operator==(const Polygon2&, const Polygon2&) = default;

 private:
  // Number of full turns made by the edge directions; 1 for a convex polygon.
  int winding_turns() const {
    // Count edges whose direction crosses the positive x half-axis going
    // counter-clockwise; a convex polygon does this exactly once.
    int crossings = 0;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      LatticePoint d0 = vertex(i + 1) - vertex(i);
      LatticePoint d1 = vertex(i + 2) - vertex(i + 1);
      bool below0 = d0[1] < 0 || (d0[1] == 0 && d0[0] < 0);
      bool below1 = d1[1] < 0 || (d1[1] == 0 && d1[0] < 0);
      if (below0 && !below1) ++crossings;
    }
    return crossings;
  }

  std::vector<LatticePoint> vertices_;
};

// ---------------------------------------------------------------------------
// Half-plane view of convex planar regions

/// normal . x <= offset, with integer coefficients.
struct HalfPlane {
  Integer nx, ny, offset;
};

/// Half-plane representation of a planar convex region, used for exact line
/// clipping of both lattice and rational polygons.
class ConvexRegion2 {
 public:
  explicit ConvexRegion2(std::vector<HalfPlane> hp) : planes_(std::move(hp)) {}

  /// From counter-clockwise rational vertices (>= 3, strictly convex).
  static ConvexRegion2 from_ccw(std::span<const RationalPoint> vertices) {
    std::vector<HalfPlane> hp;
    const std::size_t n = vertices.size();
    if (n < 3) throw ValidationError("region needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = vertices[i];
      const auto& b = vertices[(i + 1) % n];
      // Interior lies left of a->b:  (b - a) x (x - a) >= 0
      //   <=>  dy*x - dx*y <= dy*ax - dx*ay.
      Rational dx = b[0] - a[0], dy = b[1] - a[1];
      Rational off = dy * a[0] - dx * a[1];
      Integer l = boost::multiprecision::lcm(
          boost::multiprecision::lcm(denominator(dx), denominator(dy)),
          denominator(off));
      Integer nx = numerator(dy * l), ny = numerator(-dx * l),
              o = numerator(off * l);
      Integer g = gcd(gcd(nx, ny), o);
      if (g > 1) {
        nx /= g;
        ny /= g;
        o /= g;
      }
      hp.push_back({nx, ny, o});
    }
    return ConvexRegion2(std::move(hp));
  }

  static ConvexRegion2 from_polygon(const Polygon2& p) {
    std::vector<RationalPoint> v;
    v.reserve(p.size());
    for (const auto& x : p.vertices()) v.emplace_back(x);
    return from_ccw(v);
  }

  const std::vector<HalfPlane>& planes() const { return planes_; }

  bool contains(const RationalPoint& x) const {
    for (const auto& h : planes_)
      if (h.nx * x[0] + h.ny * x[1] > h.offset) return false;
    return true;
  }

 private:
  std::vector<HalfPlane> planes_;
};

// ---------------------------------------------------------------------------
// Operations

/// |[x, y] ∩ Z^d| - 1, i.e. the gcd of the absolute coordinate differences.
inline Integer segment_lattice_count(const LatticePoint& x,
                                     const LatticePoint& y) {
  require_same_dim(x, y);
  Integer g = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) g = gcd(g, y[i] - x[i]);
  return g;
}

/// Exact integer range [lo, hi] of parameters s with base + s*dir inside the
/// region; nullopt when empty. Works on integer arithmetic only.
struct IntegerRange {
  Integer lo, hi;
  Integer count() const { return hi >= lo ? Integer(hi - lo + 1) : Integer(0); }
};

inline std::optional<IntegerRange> lattice_parameter_range(
    const ConvexRegion2& region, const LatticePoint& base,
    const LatticePoint& dir) {
  std::optional<Integer> lo, hi;
  for (const auto& h : region.planes()) {
    // h.n . (base + s dir) <= offset  <=>  s * (n.dir) <= offset - n.base
    Integer slope = h.nx * dir[0] + h.ny * dir[1];
    Integer rhs = h.offset - (h.nx * base[0] + h.ny * base[1]);
    if (slope == 0) {
      if (rhs < 0) return std::nullopt;
    } else if (slope > 0) {
      Integer b = floor_div(rhs, slope);
      if (!hi || b < *hi) hi = b;
    } else {
      Integer b = ceil_div(rhs, slope);
      if (!lo || b > *lo) lo = b;
    }
  }
  if (!lo || !hi) throw ValidationError("region is unbounded along the line");
  if (*lo > *hi) return std::nullopt;
  return IntegerRange{*lo, *hi};
}

/// P ∩ Z² by a column scan, in lexicographic order.
inline PointSet enumerate_lattice_points(const Polygon2& p) {
  const auto region = ConvexRegion2::from_polygon(p);
  Integer xmin = p.vertex(0)[0], xmax = xmin;
  for (const auto& v : p.vertices()) {
    xmin = std::min(xmin, v[0]);
    xmax = std::max(xmax, v[0]);
  }
  // Columns keep the lexicographic (x, then y) order without a re-sort.
  std::vector<LatticePoint> pts;
  const LatticePoint up{0, 1};
  for (Integer x = xmin; x <= xmax; ++x) {
    LatticePoint base(std::vector<Integer>{x, 0});
    auto r = lattice_parameter_range(region, base, up);
    if (!r) continue;
    for (Integer y = r->lo; y <= r->hi; ++y)
      pts.emplace_back(std::vector<Integer>{x, y});
  }
  return PointSet(std::move(pts));
}

/// |P ∩ Z²| via Pick's theorem: I + B = (2A + B + 2) / 2.
inline Integer count_lattice_points_polygon(const Polygon2& p) {
  Integer boundary = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    boundary += segment_lattice_count(p.vertex(i), p.vertex(i + 1));
  return (p.twice_area() + boundary + 2) / 2;
}

/// max <a,x> - min <a,x> over the given points.
inline Integer lattice_width(std::span<const LatticePoint> pts,
                             const LatticePoint& a) {
  if (pts.empty()) throw ValidationError("lattice width of an empty set");
  if (is_zero(a)) throw ValidationError("lattice width needs a nonzero functional");
  Integer lo = dot(a, pts[0]), hi = lo;
  for (const auto& x : pts) {
    Integer v = dot(a, x);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

inline Integer lattice_width(const PointSet& s, const LatticePoint& a) {
  return lattice_width(std::span<const LatticePoint>(s.points()), a);
}

inline Integer lattice_width(const Polygon2& p, const LatticePoint& a) {
  return lattice_width(std::span<const LatticePoint>(p.vertices()), a);
}

}  // namespace latdiam
