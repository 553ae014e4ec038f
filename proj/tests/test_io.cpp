#include <gtest/gtest.h>

#include "support.hpp"

using namespace latdiam;

TEST(Io, PolygonRoundTrip) {
  auto doc = polygon_document(latdiam::testing::period3_quad(), "q");
  auto back = parse_document(serialize_document(doc));
  EXPECT_EQ(back, doc);
  EXPECT_EQ(back.as_polygon().vertices(), latdiam::testing::period3_quad().vertices());
  EXPECT_EQ(back.as_point_set().size(), 17u);
}

TEST(Io, PointSetRoundTrip) {
  auto doc = point_set_document(latdiam::testing::cube01(3), "cube");
  auto back = parse_document(serialize_document(doc));
  EXPECT_EQ(back, doc);
  EXPECT_EQ(back.as_point_set(), latdiam::testing::cube01(3));
}

TEST(Io, NumbersAsStringsOrIntegers) {
  auto doc = parse_document(R"({"kind":"point_set","points":[[1,"2"],["-3",4]]})");
  EXPECT_EQ(doc.dimension, 2u);
  EXPECT_EQ(doc.as_point_set(), PointSet({{1, 2}, {-3, 4}}));
  auto big = parse_document(R"({"kind":"point_set","points":[["123456789012345678901234567890","0"]]})");
  EXPECT_EQ(big.as_point_set()[0][0], Integer("123456789012345678901234567890"));
}

TEST(Io, ConstructionRequest) {
  auto doc = parse_document(R"({"kind":"construction_request","construction":"hardness","params":{"a":2,"b":"2"}})");
  EXPECT_EQ(doc.kind, DocumentKind::construction_request);
  EXPECT_EQ(doc.params.at("a"), "2");
  EXPECT_EQ(doc.params.at("b"), "2");
  EXPECT_EQ(parse_document(serialize_document(doc)), doc);
}

TEST(Io, ParseErrorPosition) {
  try {
    parse_document("{\n  \"kind\": \"polygon\",\n  \"vertices\": [[0, 0]\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GE(e.line(), 3u);
    EXPECT_GE(e.column(), 1u);
  }
}

TEST(Io, ValidationErrors) {
  EXPECT_THROW(parse_document(R"({"kind":"blob"})"), ValidationError);
  EXPECT_THROW(parse_document(R"({"kind":"polygon","vertices":[[0,0],[1]]})"), ValidationError);
  EXPECT_THROW(parse_document(R"({"kind":"point_set","points":[["1/2",0]]})").as_point_set(), ValidationError);
  EXPECT_THROW(parse_document(R"([1,2])"), ValidationError);
  EXPECT_THROW(parse_document(R"({"kind":"point_set"})").as_polygon(), ValidationError);
}

TEST(Svg, RendersDiameterSegments) {
  Polygon2 p({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  const std::string svg = render_svg(p, compute_diameter(p));
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = svg.find("class=\"diameter\"", pos)) != std::string::npos; ++pos) ++lines;
  EXPECT_EQ(lines, 8u);
}
