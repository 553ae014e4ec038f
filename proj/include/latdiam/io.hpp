#pragma once

// JSON documents with exact numbers encoded as strings ("17/3").
//
//   {"kind": "polygon", "dimension": 2, "name": "...", "vertices": [["0","0"], ...]}
//   {"kind": "point_set", "dimension": 3, "points": [["1","0","0"], ...]}
//   {"kind": "construction_request", "construction": "hardness",
//    "params": {"a": "2", "b": "2", "c": "5"}}
//
// Plain JSON integers are accepted on input; output always uses strings.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "latdiam/core.hpp"

namespace latdiam {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

enum class DocumentKind { polygon, point_set, construction_request };

inline std::string to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::polygon: return "polygon";
    case DocumentKind::point_set: return "point_set";
    case DocumentKind::construction_request: return "construction_request";
  }
  return "";
}

struct InputDocument {
  DocumentKind kind = DocumentKind::point_set;
  std::size_t dimension = 0;
  std::string name;
  /// Vertices (polygon) or points (point_set).
  std::vector<RationalPoint> data;
  /// Construction name and parameters, or extra annotations on other kinds.
  std::string construction;
  std::map<std::string, std::string> params;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;

  Polygon2 as_polygon() const {
    if (kind != DocumentKind::polygon) throw ValidationError("document is not a polygon");
    if (dimension != 2) throw ValidationError("polygon documents must be 2-dimensional");
    std::vector<LatticePoint> v;
    for (const auto& p : data) v.push_back(p.to_lattice());
    return Polygon2(std::move(v));
  }

  /// Points of a point_set, or the lattice points of a polygon.
  PointSet as_point_set() const {
    if (kind == DocumentKind::polygon) return enumerate_lattice_points(as_polygon());
    if (kind != DocumentKind::point_set) throw ValidationError("document carries no points");
    std::vector<LatticePoint> v;
    for (const auto& p : data) v.push_back(p.to_lattice());
    return PointSet(std::move(v));
  }
};

namespace detail {

inline Rational json_number(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  throw ValidationError("exact numbers must be strings or integers");
}

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                       std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace detail

inline InputDocument document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("document must be a JSON object");
  InputDocument doc;
  const std::string kind = j.value("kind", "");
  if (kind == "polygon") doc.kind = DocumentKind::polygon;
  else if (kind == "point_set") doc.kind = DocumentKind::point_set;
  else if (kind == "construction_request") doc.kind = DocumentKind::construction_request;
  else throw ValidationError("unknown document kind '" + kind + "'");
  doc.name = j.value("name", "");
  if (j.contains("construction")) doc.construction = j.at("construction").get<std::string>();
  if (j.contains("params")) {
    for (const auto& [k, v] : j.at("params").items())
      doc.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  if (doc.kind == DocumentKind::construction_request) {
    if (doc.construction.empty()) throw ValidationError("construction request without construction");
    doc.dimension = j.value("dimension", std::size_t{0});
    return doc;
  }
  const char* field = doc.kind == DocumentKind::polygon ? "vertices" : "points";
  if (!j.contains(field) || !j.at(field).is_array())
    throw ValidationError(std::string("missing array '") + field + "'");
  for (const auto& row : j.at(field)) {
    if (!row.is_array() || row.empty()) throw ValidationError("points must be nonempty arrays");
    RationalPoint p;
    for (const auto& c : row) p.coords.push_back(detail::json_number(c));
    doc.data.push_back(std::move(p));
  }
  doc.dimension = j.contains("dimension") ? j.at("dimension").get<std::size_t>()
                  : doc.data.empty()      ? 0
                                          : doc.data.front().dim();
  for (const auto& p : doc.data)
    if (p.dim() != doc.dimension) throw ValidationError("point dimension disagrees with 'dimension'");
  return doc;
}

inline InputDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + e.what(),
                     line, col);
  }
  try {
    return document_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(e.what());
  }
}

inline nlohmann::ordered_json point_json(const RationalPoint& p) {
  auto row = nlohmann::ordered_json::array();
  for (const auto& c : p.coords) row.push_back(to_string(c));
  return row;
}

inline nlohmann::ordered_json point_json(const LatticePoint& p) {
  auto row = nlohmann::ordered_json::array();
  for (const auto& c : p.coords) row.push_back(to_string(c));
  return row;
}

inline nlohmann::ordered_json document_to_json(const InputDocument& doc) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(doc.kind);
  j["dimension"] = doc.dimension;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.construction.empty()) j["construction"] = doc.construction;
  if (!doc.params.empty()) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : doc.params) params[k] = v;
    j["params"] = params;
  }
  if (doc.kind != DocumentKind::construction_request) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& p : doc.data) rows.push_back(point_json(p));
    j[doc.kind == DocumentKind::polygon ? "vertices" : "points"] = rows;
  }
  return j;
}

inline std::string serialize_document(const InputDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

inline InputDocument polygon_document(const Polygon2& p, std::string name = {}) {
  InputDocument d;
  d.kind = DocumentKind::polygon;
  d.dimension = 2;
  d.name = std::move(name);
  for (const auto& v : p.vertices()) d.data.emplace_back(v);
  return d;
}

inline InputDocument point_set_document(const PointSet& s, std::string name = {}) {
  InputDocument d;
  d.kind = DocumentKind::point_set;
  d.dimension = s.dim();
  d.name = std::move(name);
  for (const auto& v : s) d.data.emplace_back(v);
  return d;
}

}  // namespace latdiam
