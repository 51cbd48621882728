#include "sphere_lam/triangulation.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "sphere_lam/checked.hpp"
#include "sphere_lam/geometry.hpp"

namespace sphere_lam {

TaggedTriangulation::TaggedTriangulation(std::vector<TaggedArc> arcs) : arcs_(std::move(arcs)) {
  if (arcs_.size() != kArcsPerTriangulation)
    throw Error(ErrorKind::InvalidCurve, "a tagged triangulation has exactly six arcs");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs_.size(); ++j) {
      if (arcs_[i] == arcs_[j]) throw Error(ErrorKind::InvalidCurve, "repeated arc " + arcs_[i].to_string());
      if (!arcs_compatible(arcs_[i], arcs_[j]))
        throw Error(ErrorKind::InvalidCurve,
                    "incompatible arcs " + arcs_[i].to_string() + " and " + arcs_[j].to_string());
    }
  }
}

std::array<int, 4> TaggedTriangulation::degrees() const {
  std::array<int, 4> d{};
  for (const auto& arc : arcs_) {
    for (const auto& e : arc.ends()) ++d[e.v.index()];
  }
  return d;
}

std::array<int, 4> TaggedTriangulation::degree_sequence() const {
  auto d = degrees();
  std::sort(d.begin(), d.end());
  return d;
}

bool TaggedTriangulation::all_plain() const noexcept {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const TaggedArc& a) {
    return a.ends()[0].tag == Tagging::Plain && a.ends()[1].tag == Tagging::Plain;
  });
}

std::int64_t TaggedTriangulation::max_height() const noexcept {
  std::int64_t h = 0;
  for (const auto& a : arcs_) h = std::max(h, a.slope().height());
  return h;
}

std::vector<TaggedArc> TaggedTriangulation::canonical_arcs() const {
  auto out = arcs_;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

TaggedArc make_arc(const Slope& s, Puncture v, Tagging at_v, Tagging at_far) {
  return TaggedArc(s, {v, at_v}, {v + s.direction(), at_far});
}

std::array<Tagging, 4> tags_from_bits(unsigned bits, std::initializer_list<Puncture> free) {
  std::array<Tagging, 4> tags{};
  unsigned k = 0;
  for (const auto v : free) {
    tags[v.index()] = ((bits >> k) & 1U) ? Tagging::Notched : Tagging::Plain;
    ++k;
  }
  return tags;
}

// The two slopes completing a Farey-2 pair to Farey-1 triples, (p+q)/2 and (p-q)/2.
std::pair<Slope, Slope> companions(const Slope& p, const Slope& q) {
  const LatticePoint u = p.direction(), w = q.direction();
  const LatticePoint sum = u + w, diff = u - w;
  return {slope_of({checked::floor_div(sum.x, 2), checked::floor_div(sum.y, 2)}),
          slope_of({checked::floor_div(diff.x, 2), checked::floor_div(diff.y, 2)})};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidParameters, what);
}

Puncture other_end(const TaggedArc& a, Puncture v) { return a.ends()[0].v == v ? a.ends()[1].v : a.ends()[0].v; }

}  // namespace

TaggedTriangulation base_triangulation() {
  TriType t;
  t.kind = TriKind::I;
  t.slopes = {standard_form(1, 0), Slope::infinity(), standard_form(1, -1)};
  return build_type(t);
}

std::string_view to_string(TriKind kind) noexcept {
  static constexpr std::array<std::string_view, 6> names{"I", "II", "III", "IV", "V", "VI"};
  return names[static_cast<std::size_t>(kind)];
}

TriKind parse_tri_kind(std::string_view text) {
  for (int k = 0; k < 6; ++k) {
    if (to_string(static_cast<TriKind>(k)) == text) return static_cast<TriKind>(k);
  }
  throw Error(ErrorKind::Parse, "unknown triangulation type '" + std::string(text) + "'");
}

TaggedTriangulation build_type(const TriType& spec) {
  const auto& tags = spec.tags;
  auto tag = [&tags](Puncture v) { return tags[v.index()]; };
  std::vector<TaggedArc> arcs;

  if (spec.kind == TriKind::I || spec.kind == TriKind::VI) {
    require(spec.slopes.size() == 3, "a Farey-1 triple is required");
    require(is_farey1_triple(spec.slopes[0], spec.slopes[1], spec.slopes[2]), "slopes are not a Farey-1 triple");
    if (spec.kind == TriKind::I) {
      for (int side = 0; side < 2; ++side) {
        for (const auto& s : spec.slopes) {
          const auto set = endpoint_sets(s)[side];
          arcs.push_back(TaggedArc(s, {set[0], tag(set[0])}, {set[1], tag(set[1])}));
        }
      }
    } else {
      for (const auto& s : spec.slopes) {
        arcs.push_back(make_arc(s, spec.v, tag(spec.v), Tagging::Plain));
        arcs.push_back(make_arc(s, spec.v, tag(spec.v), Tagging::Notched));
      }
    }
    return TaggedTriangulation(std::move(arcs));
  }

  require(spec.slopes.size() == 2, "a Farey-2 pair is required");
  const Slope& p = spec.slopes[0];
  const Slope& q = spec.slopes[1];
  require(farey_distance(p, q) == 2, "slopes are not a Farey-2 pair");
  const Puncture v = spec.v;
  const Puncture w = v + p.direction();
  const auto [m1, m2] = companions(p, q);
  arcs.push_back(make_arc(p, v, tag(v), tag(w)));
  arcs.push_back(make_arc(q, v, tag(v), tag(w)));

  switch (spec.kind) {
    case TriKind::II:
      require(v < w, "v must precede its partner in puncture order");
      arcs.push_back(make_arc(m1, v, tag(v), tag(v + m1.direction())));
      arcs.push_back(make_arc(m2, v, tag(v), tag(v + m2.direction())));
      arcs.push_back(make_arc(m1, w, tag(w), tag(w + m1.direction())));
      arcs.push_back(make_arc(m2, w, tag(w), tag(w + m2.direction())));
      break;
    case TriKind::III:
    case TriKind::IV: {
      const Puncture vp = spec.v_prime;
      require(vp != v && vp != w, "v' must avoid the endpoints of the Farey-2 pair");
      const bool first = v + m1.direction() == vp;
      const Slope m = first ? m1 : m2;
      const Slope other = first ? m2 : m1;
      const Puncture u = w + m.direction();
      arcs.push_back(make_arc(m, v, tag(v), Tagging::Plain));
      arcs.push_back(make_arc(m, v, tag(v), Tagging::Notched));
      if (spec.kind == TriKind::III) {
        require(v < w, "v must precede its partner in puncture order");
        arcs.push_back(make_arc(m, w, tag(w), Tagging::Plain));
        arcs.push_back(make_arc(m, w, tag(w), Tagging::Notched));
      } else {
        arcs.push_back(make_arc(other, v, tag(v), tag(u)));
        arcs.push_back(make_arc(m, w, tag(w), tag(u)));
      }
      break;
    }
    case TriKind::V:
      arcs.push_back(make_arc(m1, v, tag(v), Tagging::Plain));
      arcs.push_back(make_arc(m1, v, tag(v), Tagging::Notched));
      arcs.push_back(make_arc(m2, v, tag(v), Tagging::Plain));
      arcs.push_back(make_arc(m2, v, tag(v), Tagging::Notched));
      break;
    default:
      break;
  }
  return TaggedTriangulation(std::move(arcs));
}

TriType classify(const TaggedTriangulation& t) {
  const auto& arcs = t.arcs();
  std::vector<std::pair<std::size_t, std::size_t>> coinciding;
  std::vector<std::pair<std::size_t, std::size_t>> farey2;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const PairClass c = classify_pair(arcs[i], arcs[j]);
      if (c == PairClass::Coinciding) coinciding.emplace_back(i, j);
      if (c == PairClass::Farey2) farey2.emplace_back(i, j);
    }
  }

  // Ends that are the disagreeing end of a coinciding pair carry no free tag.
  std::set<std::pair<std::size_t, int>> pinned;
  for (const auto& [i, j] : coinciding) {
    for (int e = 0; e < 2; ++e) {
      if (arcs[i].ends()[e] != arcs[j].ends()[e]) {
        pinned.insert({i, e});
        pinned.insert({j, e});
      }
    }
  }
  TriType out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (int e = 0; e < 2; ++e) {
      if (!pinned.count({i, e})) out.tags[arcs[i].ends()[e].v.index()] = arcs[i].ends()[e].tag;
    }
  }

  const auto degrees = t.degrees();
  const auto sequence = t.degree_sequence();
  auto vertex_of_degree = [&degrees](int d) {
    for (const auto v : kPunctures) {
      if (degrees[v.index()] == d) return v;
    }
    throw Error(ErrorKind::Inconsistent, "no puncture of degree " + std::to_string(d));
  };
  auto distinct_slopes = [&arcs]() {
    std::vector<Slope> s;
    for (const auto& a : arcs) {
      if (std::find(s.begin(), s.end(), a.slope()) == s.end()) s.push_back(a.slope());
    }
    return s;
  };
  auto far_end_at = [&](Puncture v) {
    for (const auto& [i, j] : coinciding) {
      const auto set = arcs[i].endpoints();
      if (set[0] == v || set[1] == v) {
        if (arcs[i].tag_at(v) == arcs[j].tag_at(v)) return other_end(arcs[i], v);
      }
    }
    throw Error(ErrorKind::Inconsistent, "no coinciding pair agreeing at v" + v.to_string());
  };

  const std::size_t nc = coinciding.size(), nf = farey2.size();
  if (nc == 0 && nf == 0) {
    out.kind = TriKind::I;
    out.slopes = distinct_slopes();
  } else if (nc == 3) {
    out.kind = TriKind::VI;
    out.slopes = distinct_slopes();
    out.v = vertex_of_degree(6);
  } else if (nf == 1) {
    const TaggedArc& pa = arcs[farey2[0].first];
    const TaggedArc& qa = arcs[farey2[0].second];
    out.slopes = {std::min(pa.slope(), qa.slope()), std::max(pa.slope(), qa.slope())};
    const auto set = pa.endpoints();
    if (nc == 0) {
      out.kind = TriKind::II;
      out.v = set[0];
    } else if (nc == 1) {
      out.kind = TriKind::IV;
      out.v = degrees[set[0].index()] == 5 ? set[0] : set[1];
      out.v_prime = far_end_at(out.v);
    } else if (nc == 2 && sequence == std::array<int, 4>{2, 2, 4, 4}) {
      out.kind = TriKind::III;
      out.v = set[0];
      out.v_prime = far_end_at(out.v);
    } else if (nc == 2 && sequence == std::array<int, 4>{2, 2, 2, 6}) {
      out.kind = TriKind::V;
      out.v = vertex_of_degree(6);
    } else {
      throw Error(ErrorKind::Inconsistent, "unrecognised tagged triangulation");
    }
  } else {
    throw Error(ErrorKind::Inconsistent, "unrecognised tagged triangulation");
  }

  // Canonical form: slopes sorted, and tags the row does not choose are reported as plain.
  if (out.kind == TriKind::I || out.kind == TriKind::VI) std::sort(out.slopes.begin(), out.slopes.end());
  std::array<bool, 4> chosen{};
  const Puncture v = out.v;
  switch (out.kind) {
    case TriKind::I:
    case TriKind::II:
      chosen = {true, true, true, true};
      break;
    case TriKind::III:
    case TriKind::V:
      chosen[v.index()] = true;
      chosen[(v + out.slopes[0].direction()).index()] = true;
      break;
    case TriKind::IV:
      chosen = {true, true, true, true};
      chosen[out.v_prime.index()] = false;
      break;
    case TriKind::VI:
      chosen[v.index()] = true;
      break;
  }
  for (int i = 0; i < 4; ++i) {
    if (!chosen[i]) out.tags[i] = Tagging::Plain;
  }
  return out;
}

std::vector<std::array<Slope, 3>> farey1_triples(std::int64_t max_height) {
  auto slopes = enumerate_slopes(max_height);
  std::sort(slopes.begin(), slopes.end());
  std::vector<std::array<Slope, 3>> out;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      if (farey_distance(slopes[i], slopes[j]) != 1) continue;
      for (std::size_t k = j + 1; k < slopes.size(); ++k) {
        if (farey_distance(slopes[i], slopes[k]) == 1 && farey_distance(slopes[j], slopes[k]) == 1)
          out.push_back({slopes[i], slopes[j], slopes[k]});
      }
    }
  }
  return out;
}

std::vector<std::pair<Slope, Slope>> farey2_pairs(std::int64_t max_height) {
  auto slopes = enumerate_slopes(max_height);
  std::sort(slopes.begin(), slopes.end());
  std::vector<std::pair<Slope, Slope>> out;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = i + 1; j < slopes.size(); ++j) {
      if (farey_distance(slopes[i], slopes[j]) == 2) out.emplace_back(slopes[i], slopes[j]);
    }
  }
  return out;
}

std::vector<TriType> enumerate_types(std::int64_t max_height) {
  const auto triples = farey1_triples(max_height);
  const auto pairs = farey2_pairs(max_height);
  std::vector<TriType> out;
  auto all_free = [](unsigned bits) {
    return tags_from_bits(bits, {kPunctures[0], kPunctures[1], kPunctures[2], kPunctures[3]});
  };

  for (const auto& tr : triples) {
    for (unsigned bits = 0; bits < 16; ++bits)
      out.push_back({TriKind::I, {tr.begin(), tr.end()}, {}, {}, all_free(bits)});
  }
  for (const auto& [p, q] : pairs) {
    for (const auto& set : endpoint_sets(p)) {
      for (unsigned bits = 0; bits < 16; ++bits) out.push_back({TriKind::II, {p, q}, set[0], {}, all_free(bits)});
    }
  }
  for (const auto& [p, q] : pairs) {
    for (const auto& set : endpoint_sets(p)) {
      for (const auto vp : kPunctures) {
        if (vp == set[0] || vp == set[1]) continue;
        for (unsigned bits = 0; bits < 4; ++bits)
          out.push_back({TriKind::III, {p, q}, set[0], vp, tags_from_bits(bits, {set[0], set[1]})});
      }
    }
  }
  for (const auto& [p, q] : pairs) {
    for (const auto& set : endpoint_sets(p)) {
      for (int side = 0; side < 2; ++side) {
        const Puncture v = set[side], w = set[1 - side];
        for (const auto vp : kPunctures) {
          if (vp == set[0] || vp == set[1]) continue;
          Puncture u{};
          for (const auto x : kPunctures) {
            if (x != v && x != w && x != vp) u = x;
          }
          for (unsigned bits = 0; bits < 8; ++bits)
            out.push_back({TriKind::IV, {p, q}, v, vp, tags_from_bits(bits, {v, w, u})});
        }
      }
    }
  }
  for (const auto& [p, q] : pairs) {
    for (const auto& set : endpoint_sets(p)) {
      for (int side = 0; side < 2; ++side) {
        for (unsigned bits = 0; bits < 4; ++bits)
          out.push_back({TriKind::V, {p, q}, set[side], {}, tags_from_bits(bits, {set[side], set[1 - side]})});
      }
    }
  }
  for (const auto& tr : triples) {
    for (const auto v : kPunctures) {
      for (unsigned bits = 0; bits < 2; ++bits)
        out.push_back({TriKind::VI, {tr.begin(), tr.end()}, v, {}, tags_from_bits(bits, {v})});
    }
  }
  return out;
}

std::vector<TaggedTriangulation> enumerate_triangulations(std::int64_t max_height) {
  const auto types = enumerate_types(max_height);
  std::vector<TaggedTriangulation> out;
  out.reserve(types.size());
  for (const auto& t : types) out.push_back(build_type(t));
  return out;
}

TaggedTriangulation flip(const TaggedTriangulation& t, std::size_t k) {
  if (k >= kArcsPerTriangulation) throw Error(ErrorKind::InvalidParameters, "arc index out of range");
  const auto& arcs = t.arcs();
  std::vector<TaggedArc> rest;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i != k) rest.push_back(arcs[i]);
  }

  std::set<Slope> slopes;
  for (const auto& a : arcs) slopes.insert(a.slope());
  for (const auto& a : arcs) {
    for (const auto& b : arcs) {
      if (farey_distance(a.slope(), b.slope()) == 1) slopes.insert(mediant(a.slope(), b.slope()));
    }
  }
  const std::int64_t bound = std::min<std::int64_t>(kMaxHeight, checked::add(checked::mul(2, t.max_height()), 2));
  for (const auto& s : enumerate_slopes(bound)) slopes.insert(s);

  std::optional<TaggedArc> found;
  std::size_t count = 0;
  for (const auto& s : slopes) {
    const bool near = std::all_of(rest.begin(), rest.end(),
                                  [&s](const TaggedArc& a) { return farey_distance(a.slope(), s) <= 2; });
    if (!near) continue;
    for (const auto& set : endpoint_sets(s)) {
      for (unsigned bits = 0; bits < 4; ++bits) {
        const TaggedArc cand(s, {set[0], (bits & 1U) ? Tagging::Notched : Tagging::Plain},
                             {set[1], (bits & 2U) ? Tagging::Notched : Tagging::Plain});
        if (cand == arcs[k]) continue;
        const bool ok = std::all_of(rest.begin(), rest.end(),
                                    [&cand](const TaggedArc& a) { return a != cand && arcs_compatible(a, cand); });
        if (!ok) continue;
        ++count;
        found = cand;
      }
    }
  }
  if (count != 1)
    throw Error(ErrorKind::InternalNonUnique,
                std::to_string(count) + " completions when flipping arc " + std::to_string(k));
  auto out = arcs;
  out[k] = *found;
  return TaggedTriangulation(std::move(out));
}

namespace {

using Triangle = std::array<LatticePoint, 3>;

// Orbit representative under p -> +-p + 2t.
Triangle canonical_triangle(const Triangle& tri) {
  std::optional<Triangle> best;
  for (const std::int64_t sign : {1, -1}) {
    Triangle t{sign * tri[0], sign * tri[1], sign * tri[2]};
    const LatticePoint m = *std::min_element(t.begin(), t.end());
    const LatticePoint shift{-2 * checked::floor_div(m.x, 2), -2 * checked::floor_div(m.y, 2)};
    for (auto& p : t) p = p + shift;
    std::sort(t.begin(), t.end());
    if (!best || t < *best) best = t;
  }
  return *best;
}

}  // namespace

ExchangeMatrix signed_adjacency(const TaggedTriangulation& t) {
  if (!t.all_plain()) throw Error(ErrorKind::NotAllPlain, "signed adjacency needs every arc tagged plain");
  const std::int64_t box = t.max_height() + 3;
  std::vector<LabeledSegment> segments;
  for (std::size_t k = 0; k < t.arcs().size(); ++k) {
    const auto& arc = t.arcs()[k];
    const LatticePoint u = arc.slope().direction();
    const Puncture v = arc.ends()[0].v;
    for (std::int64_t x = -box; x <= box; ++x) {
      for (std::int64_t y = -box; y <= box; ++y) {
        if (Puncture::from_point({x, y}) != v) continue;
        const LatticePoint p{x, y};
        for (const LatticePoint q : {p + u, p - u}) {
          if (q.x < -box || q.x > box || q.y < -box || q.y > box) continue;
          segments.push_back({p, q, static_cast<int>(k)});
        }
      }
    }
  }
  if (has_crossings(segments)) throw Error(ErrorKind::Inconsistent, "lifted arcs cross");

  std::map<Triangle, std::array<int, 3>> orbits;
  for (const auto& f : triangular_faces(segments)) orbits.emplace(canonical_triangle(f.vertices), f.edge_labels);
  if (orbits.size() != 4)
    throw Error(ErrorKind::Inconsistent, "expected four triangles, found " + std::to_string(orbits.size()));

  ExchangeMatrix b{};
  for (const auto& [tri, e] : orbits) {
    // Edges in counterclockwise order; each edge is immediately followed clockwise by its predecessor.
    const std::array<std::pair<int, int>, 3> steps{{{e[2], e[1]}, {e[1], e[0]}, {e[0], e[2]}}};
    for (const auto& [i, j] : steps) {
      b[i][j] += 1;
      b[j][i] -= 1;
    }
  }
  return b;
}

ExchangeMatrix mutate(const ExchangeMatrix& b, std::size_t k) {
  if (k >= 6) throw Error(ErrorKind::InvalidParameters, "mutation index out of range");
  ExchangeMatrix out{};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
        continue;
      }
      const std::int64_t bik = b[i][k], bkj = b[k][j];
      const std::int64_t sgn = bik > 0 ? 1 : (bik < 0 ? -1 : 0);
      out[i][j] = checked::add(b[i][j], checked::mul(sgn, std::max<std::int64_t>(checked::mul(bik, bkj), 0)));
    }
  }
  return out;
}

bool is_skew_symmetric(const ExchangeMatrix& b) {
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (b[i][j] != -b[j][i]) return false;
    }
  }
  return true;
}

}  // namespace sphere_lam
