#include "sphere_lam/curves.hpp"

#include <algorithm>

namespace sphere_lam {

Puncture Puncture::from_index(int index) {
  if (index < 0 || index > 3) throw Error(ErrorKind::InvalidParameters, "puncture index out of range");
  return {static_cast<std::uint8_t>(index / 2), static_cast<std::uint8_t>(index % 2)};
}

Puncture Puncture::from_point(LatticePoint p) {
  return {static_cast<std::uint8_t>(p.x & 1), static_cast<std::uint8_t>(p.y & 1)};
}

std::string Puncture::to_string() const { return {static_cast<char>('0' + i), static_cast<char>('0' + j)}; }

Puncture operator+(Puncture v, LatticePoint d) { return Puncture::from_point(v.as_point() + d); }

Puncture parse_puncture(std::string_view text) {
  if (text.size() == 3 && (text[0] == 'v' || text[0] == 'V')) text.remove_prefix(1);
  if (text.size() != 2 || (text[0] != '0' && text[0] != '1') || (text[1] != '0' && text[1] != '1'))
    throw Error(ErrorKind::Parse, "malformed puncture '" + std::string(text) + "'");
  return {static_cast<std::uint8_t>(text[0] - '0'), static_cast<std::uint8_t>(text[1] - '0')};
}

std::array<EndpointSet, 2> endpoint_sets(const Slope& s) {
  const EndpointSet first = endpoint_set_containing(s, kPunctures[0]);
  for (const auto v : kPunctures) {
    if (v != first[0] && v != first[1]) return {first, endpoint_set_containing(s, v)};
  }
  throw Error(ErrorKind::Inconsistent, "endpoint sets");
}

EndpointSet endpoint_set_containing(const Slope& s, Puncture v) {
  const Puncture w = v + s.direction();
  return v < w ? EndpointSet{v, w} : EndpointSet{w, v};
}

namespace {

template <typename End>
std::array<End, 2> sorted_ends(const Slope& slope, End first, End second) {
  if (first.v == second.v) throw Error(ErrorKind::InvalidCurve, "endpoints coincide");
  if (first.v + slope.direction() != second.v)
    throw Error(ErrorKind::InvalidCurve,
                "punctures " + first.v.to_string() + ", " + second.v.to_string() +
                    " do not differ by slope " + slope.to_string() + " mod 2");
  if (second.v < first.v) std::swap(first, second);
  return {first, second};
}

// Shared by arcs (tag per end) and open curves (spiral per end).
template <typename End>
bool ends_compatible(const Slope& s, const std::array<End, 2>& x, const Slope& t, const std::array<End, 2>& y) {
  if (s == t && x[0].v == y[0].v && x[1].v == y[1].v) {
    const int agree = (x[0] == y[0] ? 1 : 0) + (x[1] == y[1] ? 1 : 0);
    return agree == 1;
  }
  std::int64_t shared = 0;
  for (const auto& e : x) {
    for (const auto& f : y) {
      if (e.v != f.v) continue;
      if (e != f) return false;
      ++shared;
    }
  }
  return farey_distance(s, t) == shared;
}

}  // namespace

TaggedArc::TaggedArc(const Slope& slope, ArcEnd first, ArcEnd second)
    : slope_(slope), ends_(sorted_ends(slope, first, second)) {}

std::optional<Tagging> TaggedArc::tag_at(Puncture v) const noexcept {
  for (const auto& e : ends_) {
    if (e.v == v) return e.tag;
  }
  return std::nullopt;
}

bool TaggedArc::same_underlying(const TaggedArc& other) const noexcept {
  return slope_ == other.slope_ && endpoints() == other.endpoints();
}

static const char* tag_name(Tagging t) { return t == Tagging::Plain ? "plain" : "notched"; }
static const char* dir_name(SpiralDir d) { return d == SpiralDir::CW ? "cw" : "ccw"; }

std::string TaggedArc::to_string() const {
  return "arc(" + slope_.to_string() + ", v" + ends_[0].v.to_string() + " " + tag_name(ends_[0].tag) + ", v" +
         ends_[1].v.to_string() + " " + tag_name(ends_[1].tag) + ")";
}

AllowableCurve AllowableCurve::closed(const Slope& slope) { return AllowableCurve(true, slope, {}); }

AllowableCurve AllowableCurve::open(const Slope& slope, SpiralEnd first, SpiralEnd second) {
  return AllowableCurve(false, slope, sorted_ends(slope, first, second));
}

std::optional<SpiralDir> AllowableCurve::spiral_at(Puncture v) const noexcept {
  if (closed_) return std::nullopt;
  for (const auto& e : ends_) {
    if (e.v == v) return e.dir;
  }
  return std::nullopt;
}

std::string AllowableCurve::to_string() const {
  if (closed_) return "closed(" + slope_.to_string() + ")";
  return "curve(" + slope_.to_string() + ", v" + ends_[0].v.to_string() + " " + dir_name(ends_[0].dir) + ", v" +
         ends_[1].v.to_string() + " " + dir_name(ends_[1].dir) + ")";
}

AllowableCurve kappa(const TaggedArc& arc) {
  const auto& e = arc.ends();
  return AllowableCurve::open(arc.slope(), {e[0].v, spiral_of(e[0].tag)}, {e[1].v, spiral_of(e[1].tag)});
}

TaggedArc kappa_inv(const AllowableCurve& curve) {
  if (curve.is_closed()) throw Error(ErrorKind::ClosedCurveHasNoArc, curve.to_string());
  const auto& e = curve.ends();
  return TaggedArc(curve.slope(), {e[0].v, tag_of(e[0].dir)}, {e[1].v, tag_of(e[1].dir)});
}

bool arcs_compatible(const TaggedArc& alpha, const TaggedArc& gamma) {
  if (alpha == gamma) return true;
  return ends_compatible(alpha.slope(), alpha.ends(), gamma.slope(), gamma.ends());
}

bool curves_compatible(const AllowableCurve& lambda, const AllowableCurve& mu) {
  if (lambda == mu) return true;
  if (lambda.is_closed() && mu.is_closed()) return false;
  if (lambda.is_closed() || mu.is_closed()) return lambda.slope() == mu.slope();
  return ends_compatible(lambda.slope(), lambda.ends(), mu.slope(), mu.ends());
}

std::string_view to_string(PairClass c) noexcept {
  switch (c) {
    case PairClass::Coinciding: return "COINCIDING";
    case PairClass::Farey0: return "FAREY0";
    case PairClass::Farey1: return "FAREY1";
    case PairClass::Farey2: return "FAREY2";
    case PairClass::Incompatible: return "INCOMPATIBLE";
    case PairClass::Equal: return "EQUAL";
  }
  return "UNKNOWN";
}

PairClass classify_pair(const TaggedArc& alpha, const TaggedArc& gamma) {
  if (alpha == gamma) return PairClass::Equal;
  if (!arcs_compatible(alpha, gamma)) return PairClass::Incompatible;
  if (alpha.same_underlying(gamma)) return PairClass::Coinciding;
  switch (farey_distance(alpha.slope(), gamma.slope())) {
    case 0: return PairClass::Farey0;
    case 1: return PairClass::Farey1;
    case 2: return PairClass::Farey2;
    default: break;
  }
  throw Error(ErrorKind::Inconsistent, "compatible arcs at Farey distance above 2");
}

}  // namespace sphere_lam
