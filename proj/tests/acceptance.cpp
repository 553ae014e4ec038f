// Acceptance run: one PASS/FAIL line per criterion with pinned limits.
// Criteria 5 and 6 are known to fail as stated and are pinned as such; the
// exit status reports any result that differs from the pin.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "support.hpp"

using namespace latdiam;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  bool expected_pass;
  std::function<void(Outcome&)> run;
};

std::string str(const Integer& x) { return x.str(); }

void criterion1(Outcome& o) {
  const auto p = latdiam::testing::period3_quad();
  const auto v = count_diameter_lines_range(p, 6);
  o.expect(v == std::vector<Integer>{3, 4, 3, 9, 8, 5}, "counts for k = 1..6 differ");
  const auto fit = fit_quasipolynomial(p, minimum_fit_range(derived_period(p)));
  o.expect(fit.period == 3, "period " + str(fit.period));
  if (fit.pieces.size() != 3) return o.fail("wrong piece count");
  o.expect(fit.pieces[1] == std::make_pair(Rational(2), Rational(1)), "piece 1 differs");
  o.expect(fit.pieces[2] == std::make_pair(ratio(4, 3), ratio(4, 3)), "piece 2 differs");
  o.expect(fit.pieces[0] == std::make_pair(ratio(2, 3), Rational(1)), "piece 0 differs");
}

void criterion2(Outcome& o) {
  const auto c = reference_chamber();
  const auto dec = chamber_decomposition(c.region, c.u);
  o.expect(dec.q == 3 && dec.w == 2, "q = " + str(dec.q) + ", w = " + str(dec.w));
  if (dec.per_residue.size() != 3) return o.fail("wrong residue count");
  const long long want[3][3] = {{1, 1, 1}, {3, 0, 0}, {2, 2, 2}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& r = dec.per_residue[i];
    o.expect(r.n == want[i][0] && r.rem == want[i][1] && r.r == want[i][2],
             "row for residue " + std::to_string(i) + " differs");
  }
}

void criterion3(Outcome& o) {
  std::mt19937_64 rng(20260101);
  std::size_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const Polygon2 p = latdiam::testing::random_polygon(rng, 50, 10);
    const auto r = compute_diameter(p);
    const auto s = brute_force_diameter(enumerate_lattice_points(p));
    if (r.ldiam != s.ldiam || r.directions != s.directions) ++mismatches;
  }
  o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
}

void criterion4(Outcome& o) {
  const auto t = compute_diameter(Polygon2({{0, 1}, {1, 0}, {2, 2}}));
  o.expect(t.ldiam == 1 && t.directions.size() == 6, "triangle differs");
  const auto s = compute_diameter(Polygon2({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  o.expect(s.ldiam == 2 && s.lines.size() == 8 && s.directions.size() == 4, "square differs");
}

void criterion5(Outcome& o) {
  for (long long m = 2; m <= 5; ++m) {
    const auto poly = interior_diameter_polytope(m);
    const auto r = brute_force_diameter(poly.points);
    const LatticePoint a{-(m - 1), 0, 0}, b{m - 1, 0, 0};
    const std::string tag = "m = " + std::to_string(m) + ": ";
    if (r.ldiam != 2 * (m - 1)) {
      o.fail(tag + "ldiam " + str(r.ldiam));
      continue;
    }
    if (r.segments.size() != 1) {
      o.fail(tag + std::to_string(r.segments.size()) + " diameter segments");
      continue;
    }
    o.expect(r.segments[0] == std::make_pair(a, b), tag + "unexpected segment");
    o.expect(!poly.on_boundary(a) && !poly.on_boundary(b), tag + "endpoint on boundary");
  }
}

void criterion6(Outcome& o) {
  const Direction up({0, 0, 1});
  const auto solvable = verify_hardness_instance(hardness_instance(2, 2, 5));
  o.expect(solvable.directions == std::vector<Direction>{up}, "(2,2,5): direction set");
  o.expect(solvable.ldiam == solvable.Z - 1,
           "(2,2,5): ldiam " + str(solvable.ldiam) + ", Z - 1 = " + str(solvable.Z - 1));
  const auto other = verify_hardness_instance(hardness_instance(3, 5, 7));
  o.expect(other.ldiam < other.Z - 1,
           "(3,5,7): ldiam " + str(other.ldiam) + ", Z - 1 = " + str(other.Z - 1));
  const auto lifted = verify_hardness_instance(hardness_instance(2, 2, 5, 4));
  o.expect(lifted.ldiam == solvable.ldiam, "d = 4 lift changes ldiam");
}

void criterion7(Outcome& o) {
  const std::size_t want[] = {6, 28, 120};
  for (std::size_t d = 2; d <= 4; ++d) {
    const auto poly = direction_maximal_polytope(d);
    const auto r = brute_force_diameter(poly.points);
    o.expect(poly.points.size() == (std::size_t{1} << d) && r.ldiam == 1 &&
                 r.directions.size() == want[d - 2],
             "d = " + std::to_string(d) + ": " + std::to_string(r.directions.size()) +
                 " directions");
  }
}

void criterion8(Outcome& o) {
  std::mt19937_64 rng(88);
  std::size_t violations = 0;
  for (std::size_t d : {2, 3, 4}) {
    const int trials = d == 4 ? 500 : 5000;
    const std::size_t bound = std::size_t{1} << d;
    std::uniform_int_distribution<std::size_t> size(2, d == 4 ? 24 : 30);
    for (int i = 0; i < trials; ++i) {
      const auto s = latdiam::testing::random_point_set(rng, d, size(rng), 8);
      if (s.size() < 2) continue;
      const auto g = build_borsuk_graph(s);
      if (g.max_degree() > bound - 1) ++violations;
      const auto part = greedy_partition(s);
      if (part.parts.size() > bound || !is_valid_borsuk_partition(s, part)) ++violations;
    }
  }
  o.expect(violations == 0, std::to_string(violations) + " violations in (i)/(ii)");
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto beta = exact_borsuk_number(latdiam::testing::cube01(d));
    o.expect(beta == (std::size_t{1} << d), "cube d = " + std::to_string(d) + ": " +
                                                std::to_string(beta));
  }
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> c(-20, 20), dir(-5, 5);
  std::size_t violations = 0, pairs = 0;
  while (pairs < 10000) {
    const Polygon2 p = latdiam::testing::random_polygon(rng, 15, 8);
    const LatticePoint u{dir(rng), dir(rng)};
    if (is_zero(u)) continue;
    // Lines through a lattice point of P hit P; they cover the interesting cases.
    const auto pts = enumerate_lattice_points(p);
    const LatticeLine l(pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)],
                        Direction(u));
    const auto seg = clip_line(p, l);
    if (!seg) continue;
    ++pairs;
    const Integer count = lattice_count_on_clip(*seg);
    const Integer fl = floor(nvol(*seg));
    if (count < fl || count > fl + 1) ++violations;
    if ((is_integral(seg->t1) || is_integral(seg->t2)) && count != fl + 1) ++violations;
  }
  o.expect(violations == 0, std::to_string(violations) + " violations");
}

void criterion10(Outcome& o) {
  std::mt19937_64 rng(1010);
  std::size_t violations = 0;
  for (int i = 0; i < 5000; ++i) {
    const std::size_t d = 1 + i % 3;
    const auto s = latdiam::testing::random_point_set(
        rng, d, std::uniform_int_distribution<std::size_t>(1, 40)(rng), 6);
    const Integer ld = oracle_ldiam(s);
    // Half the instances sit exactly at the threshold m = ldiam + 1.
    const Integer m = i % 2 ? ld + 1 : Integer(std::uniform_int_distribution<int>(1, 8)(rng));
    if (!check_rabinowitz(s, m)) ++violations;
  }
  o.expect(violations == 0, std::to_string(violations) + " violations");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "dilation count regression and quasi-polynomial fit", 5, true, criterion1},
      {2, "chamber q-block table", 1, true, criterion2},
      {3, "diameter algorithm agrees with oracle", 120, true, criterion3},
      {4, "triangle and square regression", 1, true, criterion4},
      {5, "interior diameter segment, m = 2..5", 30, false, criterion5},
      {6, "hardness instances", 180, false, criterion6},
      {7, "direction-maximal polytopes", 60, true, criterion7},
      {8, "Borsuk suite", 180, true, criterion8},
      {9, "segment count sandwich", 60, true, criterion9},
      {10, "Rabinowitz bound", 60, true, criterion10},
  };
  int deviations = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.limit_seconds)
      o.fail("time " + std::to_string(secs) + " s over " + std::to_string(c.limit_seconds) + " s");
    std::printf("criterion %2d %s  %-52s %8.3f s / %g s%s%s%s\n", c.id, o.ok ? "PASS" : "FAIL",
                c.title, secs, c.limit_seconds, o.detail.empty() ? "" : "  (", o.detail.c_str(),
                o.detail.empty() ? "" : ")");
    if (o.ok != c.expected_pass) {
      ++deviations;
      std::printf("             unexpected: pinned as %s\n", c.expected_pass ? "PASS" : "FAIL");
    }
  }
  std::printf("%d result(s) differ from the pinned expectations\n", deviations);
  return deviations == 0 ? 0 : 1;
}
