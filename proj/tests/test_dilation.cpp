#include <gtest/gtest.h>

#include "support.hpp"

using namespace latdiam;
using latdiam::testing::period3_quad;

TEST(DilationCount, PeriodThreeQuad) {
  auto v = count_diameter_lines_range(period3_quad(), 9);
  EXPECT_EQ(v, (std::vector<Integer>{3, 4, 3, 9, 8, 5, 15, 12, 7}));
  EXPECT_EQ(count_diameter_lines_range(period3_quad(), 9, 4), v);
  EXPECT_THROW(count_diameter_lines(period3_quad(), 0), ValidationError);
}

TEST(DilationCount, UnitSquare) {
  Polygon2 sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  for (long long k = 1; k <= 8; ++k) EXPECT_EQ(count_diameter_lines(sq, k), 2 * k + 4);
}

TEST(DilationCount, MaxNvolAndPeriod) {
  EXPECT_EQ(max_diameter_nvol(period3_quad()), ratio(14, 3));
  EXPECT_EQ(derived_period(period3_quad()), 3);
  EXPECT_EQ(minimum_fit_range(3), 11);
}

TEST(Fit, PeriodThreeQuad) {
  auto fit = fit_quasipolynomial(period3_quad(), 12);
  EXPECT_EQ(fit.period, 3);
  EXPECT_EQ(fit.derived_q, 3);
  EXPECT_LE(fit.valid_from, 3);
  ASSERT_EQ(fit.pieces.size(), 3u);
  EXPECT_EQ(fit.pieces[0], std::make_pair(ratio(2, 3), Rational(1)));
  EXPECT_EQ(fit.pieces[1], std::make_pair(Rational(2), Rational(1)));
  EXPECT_EQ(fit.pieces[2], std::make_pair(ratio(4, 3), ratio(4, 3)));
  EXPECT_TRUE(fit.has_linear_piece());
  for (long long k = 1; k <= 20; ++k)
    EXPECT_EQ(fit.evaluate(k), Rational(count_diameter_lines(period3_quad(), k)));
}

TEST(Fit, RangeTooSmall) {
  EXPECT_THROW(fit_quasipolynomial(period3_quad(), 10), ValidationError);
}

TEST(Fit, RandomPolygonsReproduceCounts) {
  std::mt19937_64 rng(17);
  int fitted = 0;
  for (int i = 0; i < 25; ++i) {
    Polygon2 p = latdiam::testing::random_polygon(rng, 4, 6);
    const Integer q = derived_period(p);
    if (q > 4) continue;
    auto fit = fit_quasipolynomial(p, minimum_fit_range(q) + 2);
    EXPECT_EQ(fit.derived_q % fit.period, 0);
    const Integer k = minimum_fit_range(q) + 5;
    EXPECT_EQ(fit.evaluate(k), Rational(count_diameter_lines(p, k)));
    ++fitted;
  }
  EXPECT_GT(fitted, 5);
}

TEST(Dilation, DirectionsAndNvolStable) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    Polygon2 p = latdiam::testing::random_polygon(rng, 5, 6);
    const Integer q = derived_period(p);
    if (q > 5) continue;
    const auto base = compute_diameter(p.dilate(q));
    Rational m = max_diameter_nvol(p.dilate(q));
    for (Integer k = q + 1; k <= 3 * q; ++k) {
      const auto r = compute_diameter(p.dilate(k));
      EXPECT_EQ(r.directions, base.directions);
      EXPECT_EQ(max_diameter_nvol(p.dilate(k)), m * Rational(k) / Rational(q));
    }
  }
}

TEST(Chamber, ReferenceChamber) {
  auto c = reference_chamber();
  auto dec = chamber_decomposition(c.region, c.u);
  EXPECT_EQ(dec.q, 3);
  EXPECT_EQ(dec.w, 2);
  ASSERT_EQ(dec.per_residue.size(), 3u);
  auto row = [&](std::size_t i) {
    const auto& r = dec.per_residue[i];
    return std::vector<Integer>{r.n, r.rem, r.r};
  };
  EXPECT_EQ(row(1), (std::vector<Integer>{3, 0, 0}));
  EXPECT_EQ(row(2), (std::vector<Integer>{2, 2, 2}));
  EXPECT_EQ(row(0), (std::vector<Integer>{1, 1, 1}));
}

TEST(Chamber, BlockFormulaMatchesDirectCount) {
  auto c = reference_chamber();
  auto dec = chamber_decomposition(c.region, c.u);
  for (long long k = 1; k <= 30; ++k) {
    EXPECT_EQ(dec.evaluate(k), count_u_diameter_lines(c.region, c.u, k)) << "k=" << k;
    EXPECT_EQ(dec.blocks(k), floor_div(Integer(2 * k + 1), Integer(3)));
  }
}

TEST(Chamber, ExtractedFromPeriodThreeQuad) {
  const Direction u({1, 0});
  EXPECT_EQ(vertex_levels(period3_quad(), u), (std::vector<Integer>{0, 1, 3, 4}));
  auto r = parallel_chamber(period3_quad(), u, 1, 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->vertices, reference_chamber().region.vertices);
  EXPECT_FALSE(parallel_chamber(period3_quad(), u, 0, 1));
  EXPECT_THROW(parallel_chamber(period3_quad(), u, 0, 3), ValidationError);
}

TEST(Chamber, DiameterLinesConfinedToParallelChamber) {
  const Direction u({1, 0});
  for (long long k = 3; k <= 12; ++k) {
    const Polygon2 kp = period3_quad().dilate(k);
    const auto rep = compute_diameter(kp);
    ASSERT_EQ(rep.directions, std::vector<Direction>{u});
    for (const auto& l : rep.lines) {
      EXPECT_GE(l.level(), k * 1);
      EXPECT_LE(l.level(), k * 3);
    }
  }
}
