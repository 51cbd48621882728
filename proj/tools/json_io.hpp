#pragma once

#include <json.hpp>
#include <string_view>

#include "sphere_lam/fan.hpp"
#include "sphere_lam/shear.hpp"
#include "sphere_lam/triangulation.hpp"

// JSON forms of the library types. Every reader accepts what the matching writer emits and
// throws sphere_lam::Error(Parse) on malformed input.
namespace sphere_lam::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "sphere-lam/1";

// Object with the schema field set, for non-vector documents.
Json document();

Json parse_text(std::string_view text);

Json to_json(const Slope& s);
Slope slope_from_json(const Json& j);

Json to_json(Puncture v);
Puncture puncture_from_json(const Json& j);

Json to_json(Tagging t);
Tagging tagging_from_json(const Json& j);
Json to_json(SpiralDir d);
SpiralDir spiral_from_json(const Json& j);

// {"slope":"b/a","ends":[{"v":"00","tag":"plain"},...]}
Json to_json(const TaggedArc& arc);
TaggedArc arc_from_json(const Json& j);

// {"closed":"b/a"} or {"slope":"b/a","ends":[{"v":"00","spiral":"cw"},...]}
Json to_json(const AllowableCurve& c);
AllowableCurve curve_from_json(const Json& j);
bool is_arc_json(const Json& j);

// {"kind":"II","slopes":[...],"v":"00","v_prime":"01","tags":[4 taggings by puncture]}
Json to_json(const TriType& t);
TriType tri_type_from_json(const Json& j);

// {"arcs":[6 arcs],"type":{...}}; a bare array of 6 arcs is also accepted.
Json to_json(const TaggedTriangulation& t);
TaggedTriangulation triangulation_from_json(const Json& j);

// {"triple":["0/1","inf","-1/1"],"tags":[4 taggings by puncture]}
Json to_json(const TypeITri& t);
TypeITri type_i_from_json(const Json& j);

Json to_json(const ShearVector& v);
ShearVector shear_vector_from_json(const Json& j);
Json to_json(const TorusVector& v);

Json to_json(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_json(const Json& j);

// [{"curve":...,"weight":n},...]
Json to_json(const Tangle& x);
Tangle tangle_from_json(const Json& j);
Json to_json(const QuasiLamination& l);
QuasiLamination lamination_from_json(const Json& j);

Json to_json(const Cone& c);

}  // namespace sphere_lam::io
