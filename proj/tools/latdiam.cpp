// latdiam: command-line front end for the lattice diameter library.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 validation error,
// 4 verification mismatch, 5 fit failure, 6 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "latdiam/latdiam.hpp"

namespace {

using namespace latdiam;
using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kValidation = 3, kMismatch = 4, kFit = 5, kBudget = 6 };

struct VerifyMismatch : Error {
  using Error::Error;
};

struct Options {
  std::string input;
  std::string svg;
  std::string format = "text";
  bool verify = false;
  bool fit = false;
  bool exact = false;
  long long k_max = 0;
  std::size_t budget = kDefaultOraclePointBudget;
  std::string kind;
  std::map<std::string, std::string> params;
};

std::size_t thread_count() {
  if (const char* env = std::getenv("LATTICEDIAM_THREADS")) {
    try {
      long long n = std::stoll(env);
      if (n >= 1) return static_cast<std::size_t>(n);
    } catch (...) {
    }
    throw ValidationError("LATTICEDIAM_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

InputDocument load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

Json direction_json(const Direction& u) { return point_json(u.as_point()); }

Json segment_json(const ClippedSegment& s) {
  return Json{{"from", point_json(s.a)}, {"to", point_json(s.b)}, {"direction", direction_json(s.line.dir())}};
}

std::string csv_point(const RationalPoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.dim(); ++i) s += (i ? " " : "") + to_string(p[i]);
  return s;
}

int cmd_diam2d(const Options& o) {
  const Polygon2 p = load(o.input).as_polygon();
  const DiameterReport r = compute_diameter(p);
  if (o.verify) {
    const OracleReport truth = brute_force_diameter(enumerate_lattice_points(p), o.budget);
    if (truth.ldiam != r.ldiam || truth.directions != r.directions)
      throw VerifyMismatch("diam2d disagrees with the oracle: oracle ldiam=" + to_string(truth.ldiam) +
                           " directions=" + std::to_string(truth.directions.size()));
  }
  if (!o.svg.empty()) {
    std::ofstream out(o.svg);
    if (!out) throw ValidationError("cannot write '" + o.svg + "'");
    out << render_svg(p, r);
  }
  if (o.format == "json") {
    Json j{{"ldiam", to_string(r.ldiam)}, {"directions", Json::array()}, {"lines", Json::array()},
           {"segments", Json::array()}};
    for (const auto& u : r.directions) j["directions"].push_back(direction_json(u));
    for (const auto& l : r.lines)
      j["lines"].push_back(Json{{"base", point_json(l.base())}, {"direction", direction_json(l.dir())}});
    for (const auto& s : r.representative_segments) j["segments"].push_back(segment_json(s));
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "direction,from,to\n";
    for (const auto& l : r.lines)
      if (const auto s = clip_line(p, l))
        std::cout << to_string(s->line.dir()) << ',' << csv_point(s->a) << ',' << csv_point(s->b) << "\n";
  } else {
    std::cout << "ldiam=" << r.ldiam << " directions=" << r.directions.size() << " lines=" << r.lines.size()
              << "\n";
    for (const auto& l : r.lines)
      if (const auto s = clip_line(p, l))
        std::cout << "  " << to_string(s->line.dir()) << "  " << to_string(s->a) << " -- " << to_string(s->b) << "\n";
  }
  return kOk;
}

int cmd_oracle(const Options& o) {
  const PointSet s = load(o.input).as_point_set();
  const OracleReport r = brute_force_diameter(s, o.budget);
  if (o.format == "json") {
    Json j{{"ldiam", to_string(r.ldiam)},
           {"points", s.size()},
           {"max_degree", r.max_degree()},
           {"directions", Json::array()},
           {"segments", Json::array()}};
    for (const auto& u : r.directions) j["directions"].push_back(direction_json(u));
    for (const auto& [x, y] : r.segments) j["segments"].push_back(Json::array({point_json(x), point_json(y)}));
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "from,to\n";
    for (const auto& [x, y] : r.segments)
      std::cout << csv_point(RationalPoint(x)) << ',' << csv_point(RationalPoint(y)) << "\n";
  } else {
    std::cout << "ldiam=" << r.ldiam << " segments=" << r.segments.size() << " directions=" << r.directions.size()
              << " max_degree=" << r.max_degree() << "\n";
  }
  return kOk;
}

int cmd_directions(const Options& o) {
  const InputDocument doc = load(o.input);
  std::vector<Direction> dirs = doc.kind == DocumentKind::polygon ? compute_diameter(doc.as_polygon()).directions
                                                                  : diameter_directions(doc.as_point_set(), o.budget);
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& u : dirs) j.push_back(direction_json(u));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& u : dirs) std::cout << to_string(u) << "\n";
  }
  return kOk;
}

Json fit_json(const QuasiPolynomial& f) {
  Json pieces = Json::array();
  for (std::size_t i = 0; i < f.pieces.size(); ++i)
    pieces.push_back(Json{{"residue", i}, {"slope", to_string(f.pieces[i].first)},
                          {"intercept", to_string(f.pieces[i].second)}});
  return Json{{"period", to_string(f.period)},
              {"derived_q", to_string(f.derived_q)},
              {"valid_from", to_string(f.valid_from)},
              {"pieces", pieces}};
}

int cmd_ld(const Options& o, bool fit_only) {
  const Polygon2 p = load(o.input).as_polygon();
  Integer k_max = o.k_max;
  if (fit_only && k_max == 0) k_max = minimum_fit_range(derived_period(p));
  if (k_max < 1) throw ValidationError("--k-max must be >= 1");
  const std::size_t threads = thread_count();
  std::optional<QuasiPolynomial> fit;
  if (fit_only || o.fit) fit = fit_quasipolynomial(p, k_max, threads);
  if (fit_only) {
    std::cout << fit_json(*fit).dump(2) << "\n";
    return kOk;
  }
  const auto counts = count_diameter_lines_range(p, k_max.convert_to<std::size_t>(), threads);
  if (o.format == "json") {
    Json j{{"counts", Json::array()}};
    for (std::size_t k = 0; k < counts.size(); ++k)
      j["counts"].push_back(Json{{"k", k + 1}, {"ld", to_string(counts[k])}});
    if (fit) j["fit"] = fit_json(*fit);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "k,ld\n";
    for (std::size_t k = 0; k < counts.size(); ++k) std::cout << k + 1 << ',' << counts[k] << "\n";
    if (fit) std::cout << fit_json(*fit).dump() << "\n";
  }
  return kOk;
}

int cmd_borsuk(const Options& o) {
  const PointSet s = load(o.input).as_point_set();
  if (s.empty()) throw ValidationError("empty point set");
  const std::size_t bound = std::size_t{1} << s.dim();
  BorsukPartition part;
  std::optional<std::size_t> chi;
  std::optional<bool> axis_cube;
  if (s.size() == 1) {
    part.parts = {s};
    part.labels[s[0]] = 0;
  } else {
    part = greedy_partition(s, o.budget);
    if (o.exact) {
      chi = exact_borsuk_number(s);
      if (*chi == bound) axis_cube = is_axis_cube(s);
    }
  }
  std::cout << "parts=" << part.parts.size() << " bound=2^d=" << bound;
  if (chi) std::cout << " chi=" << *chi;
  if (s.size() == 1) std::cout << " (single point, already minimal)";
  std::cout << "\n";
  Json j{{"parts", part.parts.size()}, {"bound", bound}, {"labels", Json::array()}};
  if (chi) j["chi"] = *chi;
  if (axis_cube) j["axis_cube"] = *axis_cube;
  for (const auto& [pt, label] : part.labels) j["labels"].push_back(Json{{"point", point_json(pt)}, {"part", label}});
  std::cout << j.dump(2) << "\n";
  return kOk;
}

Integer param(const Options& o, const std::string& name) {
  auto it = o.params.find(name);
  if (it == o.params.end() || it->second.empty()) throw ValidationError("missing --" + name);
  return parse_integer(it->second);
}

Json hardness_json(const HardnessInstance& h, const HardnessVerification& v) {
  Json dirs = Json::array();
  for (const auto& u : v.directions) dirs.push_back(direction_json(u));
  return Json{{"a", to_string(h.a)},       {"b", to_string(h.b)},         {"c", to_string(h.c)},
              {"d", h.d},                  {"Z", to_string(h.Z)},         {"min_f", to_string(v.min_f)},
              {"ldiam", to_string(v.ldiam)}, {"points", v.points},        {"directions", dirs},
              {"direction_ok", v.direction_ok}, {"equivalence_ok", v.equivalence_ok}};
}

int cmd_construct(const Options& o) {
  InputDocument doc;
  if (o.kind == "interior-diameter") {
    const Integer m = param(o, "m");
    const LatticePolytope p = interior_diameter_polytope(m);
    if (o.verify) {
      const OracleReport r = brute_force_diameter(p.points, o.budget);
      const bool ok = r.ldiam == 2 * (m - 1) && r.segments.size() == 1 && !p.on_boundary(r.segments[0].first) &&
                      !p.on_boundary(r.segments[0].second);
      if (!ok) throw VerifyMismatch("interior-diameter: diameter segment is not the unique interior axis segment");
    }
    doc = point_set_document(PointSet(p.vertices), "interior-diameter m=" + to_string(m) + " (vertices)");
  } else if (o.kind == "hardness") {
    long long d = o.params.count("d") && !o.params.at("d").empty() ? std::stoll(o.params.at("d")) : 3;
    if (d < 3) throw ValidationError("--d must be >= 3");
    const HardnessInstance h = hardness_instance(param(o, "a"), param(o, "b"), param(o, "c"), d);
    if (o.verify) {
      const auto v = verify_hardness_instance(h, o.budget);
      std::cerr << hardness_json(h, v).dump() << "\n";
      if (!v.direction_ok || !v.equivalence_ok) throw VerifyMismatch("hardness instance verification failed");
    }
    doc.kind = DocumentKind::construction_request;
    doc.construction = "hardness";
    doc.dimension = h.d;
    doc.name = "hardness gadget";
    doc.params = {{"a", to_string(h.a)}, {"b", to_string(h.b)}, {"c", to_string(h.c)},
                  {"d", std::to_string(h.d)}, {"Z", to_string(h.Z)}};
    for (std::size_t i = 0; i < h.description.size(); ++i)
      doc.params["constraint" + std::to_string(i + 1)] = h.description[i];
  } else if (o.kind == "slope-triangle") {
    const Polygon2 t = slope_triangle(param(o, "t"), param(o, "x"));
    if (o.verify) {
      const auto r = brute_force_diameter(enumerate_lattice_points(t), o.budget);
      if (r.ldiam != 1 || r.directions.size() != 6) throw VerifyMismatch("slope triangle check failed");
    }
    doc = polygon_document(t, "slope triangle");
  } else if (o.kind == "direction-maximal") {
    const auto d = param(o, "d").convert_to<std::size_t>();
    const LatticePolytope p = direction_maximal_polytope(d, true, o.budget);
    if (o.verify) {
      const auto r = brute_force_diameter(p.points, o.budget);
      const std::size_t n = std::size_t{1} << d;
      if (r.ldiam != 1 || p.points.size() != n || r.directions.size() != n * (n - 1) / 2)
        throw VerifyMismatch("direction-maximal check failed");
    }
    doc = point_set_document(p.points, "direction-maximal d=" + std::to_string(d));
  } else if (o.kind == "chamber") {
    const Chamber c = reference_chamber();
    doc.kind = DocumentKind::polygon;
    doc.dimension = 2;
    doc.name = "chamber";
    doc.data = c.region.vertices;
    doc.params = {{"u", to_string(c.u)}};
    if (o.verify) {
      const auto b = chamber_decomposition(c.region, c.u);
      if (b.q != 3 || b.w != 2) throw VerifyMismatch("chamber check failed");
    }
  } else {
    throw ValidationError("unknown construction '" + o.kind + "'");
  }
  std::cout << serialize_document(doc);
  return kOk;
}

int cmd_hardness_verify(const Options& o) {
  long long d = o.params.count("d") && !o.params.at("d").empty() ? std::stoll(o.params.at("d")) : 3;
  if (d < 3) throw ValidationError("--d must be >= 3");
  const HardnessInstance h = hardness_instance(param(o, "a"), param(o, "b"), param(o, "c"), d);
  const auto v = verify_hardness_instance(h, o.budget);
  std::cout << hardness_json(h, v).dump(2) << "\n";
  return v.direction_ok && v.equivalence_ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice diameters of polygons and point sets"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_budget = [&](CLI::App* c) { c->add_option("--budget", o.budget, "Maximum number of points for the oracle"); };

  auto* diam = app.add_subcommand("diam2d", "Lattice diameter of a polygon");
  diam->add_option("input", o.input)->required();
  diam->add_option("--svg", o.svg, "Write an SVG figure");
  diam->add_flag("--verify", o.verify, "Cross-check with the oracle");
  add_format(diam);
  add_budget(diam);

  auto* orc = app.add_subcommand("oracle", "Brute-force lattice diameter of a point set");
  orc->add_option("input", o.input)->required();
  add_format(orc);
  add_budget(orc);

  auto* dirs = app.add_subcommand("directions", "Lattice diameter directions");
  dirs->add_option("input", o.input)->required();
  add_format(dirs);
  add_budget(dirs);

  auto* ld = app.add_subcommand("ld-count", "Diameter lines of kP for k = 1..k-max");
  ld->alias("ld");
  ld->add_option("input", o.input)->required();
  ld->add_option("--k-max", o.k_max, "Largest dilation factor")->required()->check(CLI::PositiveNumber);
  ld->add_flag("--fit", o.fit, "Also fit the quasi-polynomial");
  add_format(ld);

  auto* fit = app.add_subcommand("ld-fit", "Fit the eventual quasi-polynomial of LD_P");
  fit->add_option("input", o.input)->required();
  fit->add_option("--k-max", o.k_max, "Largest dilation factor sampled (default 4q - 1)");

  auto* bor = app.add_subcommand("borsuk", "Partition into parts of smaller lattice diameter");
  bor->add_option("input", o.input)->required();
  bor->add_flag("--exact", o.exact, "Also compute the exact lattice Borsuk number");
  add_budget(bor);

  auto* con = app.add_subcommand("construct", "Emit a construction as a document");
  con->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"interior-diameter", "hardness", "slope-triangle", "direction-maximal", "chamber"}));
  for (const char* name : {"m", "a", "b", "c", "d", "t", "x"})
    con->add_option(std::string("--") + name, o.params[name]);
  con->add_flag("--verify", o.verify, "Verify the construction first");
  add_budget(con);

  auto* hv = app.add_subcommand("hardness-verify", "Verify a hardness gadget with the oracle");
  for (const char* name : {"a", "b", "c"}) hv->add_option(std::string("--") + name, o.params[name])->required();
  hv->add_option("--d", o.params["d"]);
  add_budget(hv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (diam->parsed()) return cmd_diam2d(o);
    if (orc->parsed()) return cmd_oracle(o);
    if (dirs->parsed()) return cmd_directions(o);
    if (ld->parsed()) return cmd_ld(o, false);
    if (fit->parsed()) return cmd_ld(o, true);
    if (bor->parsed()) return cmd_borsuk(o);
    if (con->parsed()) return cmd_construct(o);
    if (hv->parsed()) return cmd_hardness_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const VerifyMismatch& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const FitError& e) {
    std::cerr << "fit failed at k=" << e.offending_k() << ": " << e.what() << "\n";
    return kFit;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}
