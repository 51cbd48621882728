#include "json_io.hpp"

#include <string>

namespace sphere_lam::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_of(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::int64_t integer_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const Json& array_of(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array() || j.size() != n) fail(std::string(what) + " must be an array of " + std::to_string(n));
  return j;
}

Json tags_json(const std::array<Tagging, 4>& tags) {
  Json out = Json::array();
  for (const auto t : tags) out.push_back(to_json(t));
  return out;
}

std::array<Tagging, 4> tags_from_json(const Json& j) {
  std::array<Tagging, 4> tags{};
  const Json& a = array_of(j, 4, "tags");
  for (std::size_t i = 0; i < 4; ++i) tags[i] = tagging_from_json(a[i]);
  return tags;
}

}  // namespace

Json document() {
  Json j = Json::object();
  j["schema"] = kSchema;
  return j;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Slope& s) { return s.to_string(); }
Slope slope_from_json(const Json& j) { return parse_slope(text_of(j, "slope")); }

Json to_json(Puncture v) { return v.to_string(); }
Puncture puncture_from_json(const Json& j) { return parse_puncture(text_of(j, "puncture")); }

Json to_json(Tagging t) { return t == Tagging::Plain ? "plain" : "notched"; }
Tagging tagging_from_json(const Json& j) {
  const std::string s = text_of(j, "tag");
  if (s == "plain") return Tagging::Plain;
  if (s == "notched") return Tagging::Notched;
  fail("tag must be plain or notched, got '" + s + "'");
}

Json to_json(SpiralDir d) { return d == SpiralDir::CW ? "cw" : "ccw"; }
SpiralDir spiral_from_json(const Json& j) {
  const std::string s = text_of(j, "spiral");
  if (s == "cw") return SpiralDir::CW;
  if (s == "ccw") return SpiralDir::CCW;
  fail("spiral must be cw or ccw, got '" + s + "'");
}

Json to_json(const TaggedArc& arc) {
  Json ends = Json::array();
  for (const auto& e : arc.ends()) ends.push_back({{"v", to_json(e.v)}, {"tag", to_json(e.tag)}});
  return {{"slope", to_json(arc.slope())}, {"ends", ends}};
}

TaggedArc arc_from_json(const Json& j) {
  const Json& ends = array_of(field(j, "ends"), 2, "ends");
  const auto end = [](const Json& e) {
    return ArcEnd{puncture_from_json(field(e, "v")), tagging_from_json(field(e, "tag"))};
  };
  return TaggedArc(slope_from_json(field(j, "slope")), end(ends[0]), end(ends[1]));
}

Json to_json(const AllowableCurve& c) {
  if (c.is_closed()) return {{"closed", to_json(c.slope())}};
  Json ends = Json::array();
  for (const auto& e : c.ends()) ends.push_back({{"v", to_json(e.v)}, {"spiral", to_json(e.dir)}});
  return {{"slope", to_json(c.slope())}, {"ends", ends}};
}

AllowableCurve curve_from_json(const Json& j) {
  if (j.is_object() && j.contains("closed")) return AllowableCurve::closed(slope_from_json(j.at("closed")));
  const Json& ends = array_of(field(j, "ends"), 2, "ends");
  const auto end = [](const Json& e) {
    return SpiralEnd{puncture_from_json(field(e, "v")), spiral_from_json(field(e, "spiral"))};
  };
  return AllowableCurve::open(slope_from_json(field(j, "slope")), end(ends[0]), end(ends[1]));
}

bool is_arc_json(const Json& j) {
  return j.is_object() && j.contains("ends") && j.at("ends").is_array() && !j.at("ends").empty() &&
         j.at("ends")[0].is_object() && j.at("ends")[0].contains("tag");
}

Json to_json(const TriType& t) {
  Json slopes = Json::array();
  for (const auto& s : t.slopes) slopes.push_back(to_json(s));
  Json j{{"kind", std::string(to_string(t.kind))}, {"slopes", slopes}};
  if (t.kind != TriKind::I) j["v"] = to_json(t.v);
  if (t.kind == TriKind::III || t.kind == TriKind::IV) j["v_prime"] = to_json(t.v_prime);
  j["tags"] = tags_json(t.tags);
  return j;
}

TriType tri_type_from_json(const Json& j) {
  TriType t;
  t.kind = parse_tri_kind(text_of(field(j, "kind"), "kind"));
  const Json& slopes = field(j, "slopes");
  if (!slopes.is_array()) fail("slopes must be an array");
  for (const auto& s : slopes) t.slopes.push_back(slope_from_json(s));
  if (j.contains("v")) t.v = puncture_from_json(j.at("v"));
  if (j.contains("v_prime")) t.v_prime = puncture_from_json(j.at("v_prime"));
  if (j.contains("tags")) t.tags = tags_from_json(j.at("tags"));
  return t;
}

Json to_json(const TaggedTriangulation& t) {
  Json arcs = Json::array();
  for (const auto& a : t.arcs()) arcs.push_back(to_json(a));
  return {{"arcs", arcs}, {"type", to_json(classify(t))}};
}

TaggedTriangulation triangulation_from_json(const Json& j) {
  const Json& arcs = j.is_array() ? j : field(j, "arcs");
  array_of(arcs, 6, "arcs");
  std::vector<TaggedArc> out;
  for (const auto& a : arcs) out.push_back(arc_from_json(a));
  return TaggedTriangulation(std::move(out));
}

Json to_json(const TypeITri& t) {
  Json triple = Json::array();
  for (const auto& s : t.triple) triple.push_back(to_json(s));
  return {{"triple", triple}, {"tags", tags_json(t.tags)}};
}

TypeITri type_i_from_json(const Json& j) {
  TypeITri t;
  const Json& triple = array_of(field(j, "triple"), 3, "triple");
  for (std::size_t i = 0; i < 3; ++i) t.triple[i] = slope_from_json(triple[i]);
  if (j.contains("tags")) t.tags = tags_from_json(j.at("tags"));
  t.validate();
  return t;
}

Json to_json(const ShearVector& v) { return Json(std::vector<std::int64_t>(v.begin(), v.end())); }

ShearVector shear_vector_from_json(const Json& j) {
  const Json& a = array_of(j, 6, "vector");
  ShearVector v{};
  for (std::size_t i = 0; i < 6; ++i) v[i] = integer_of(a[i], "vector entry");
  return v;
}

Json to_json(const TorusVector& v) { return Json(std::vector<std::int64_t>(v.begin(), v.end())); }

Json to_json(const ExchangeMatrix& b) {
  Json rows = Json::array();
  for (const auto& row : b) rows.push_back(std::vector<std::int64_t>(row.begin(), row.end()));
  return rows;
}

ExchangeMatrix matrix_from_json(const Json& j) {
  const Json& rows = array_of(j, 6, "matrix");
  ExchangeMatrix b{};
  for (std::size_t i = 0; i < 6; ++i) {
    const Json& row = array_of(rows[i], 6, "matrix row");
    for (std::size_t k = 0; k < 6; ++k) b[i][k] = integer_of(row[k], "matrix entry");
  }
  return b;
}

Json to_json(const Tangle& x) {
  Json out = Json::array();
  for (const auto& [c, w] : x.terms()) out.push_back({{"curve", to_json(c)}, {"weight", w}});
  return out;
}

Tangle tangle_from_json(const Json& j) {
  if (!j.is_array()) fail("tangle must be an array of {curve, weight}");
  Tangle x;
  for (const auto& term : j) x.add(curve_from_json(field(term, "curve")), integer_of(field(term, "weight"), "weight"));
  return x;
}

Json to_json(const QuasiLamination& l) {
  Json out = Json::array();
  for (const auto& [c, w] : l.weights()) out.push_back({{"curve", to_json(c)}, {"weight", w}});
  return out;
}

QuasiLamination lamination_from_json(const Json& j) {
  if (!j.is_array()) fail("lamination must be an array of {curve, weight}");
  std::map<AllowableCurve, std::int64_t> weights;
  for (const auto& term : j) {
    const AllowableCurve c = curve_from_json(field(term, "curve"));
    if (!weights.emplace(c, integer_of(field(term, "weight"), "weight")).second) {
      fail("curve " + c.to_string() + " listed twice");
    }
  }
  return QuasiLamination(std::move(weights));
}

Json to_json(const Cone& c) {
  Json curves = Json::array();
  for (const auto& curve : c.source.curves()) curves.push_back(to_json(curve));
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(to_json(g));
  return {{"type", std::string(to_string(c.kind()))}, {"dim", c.dim}, {"curves", curves}, {"generators", gens}};
}

}  // namespace sphere_lam::io
