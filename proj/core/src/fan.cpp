#include "sphere_lam/fan.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sphere_lam/checked.hpp"

namespace sphere_lam {

std::string_view to_string(CollectionKind kind) noexcept {
  static constexpr std::array<std::string_view, 7> names{"I", "II", "III", "IV", "V", "VI", "VII"};
  return names[static_cast<std::size_t>(kind)];
}

CollectionKind parse_collection_kind(std::string_view text) {
  for (int k = 0; k < 7; ++k) {
    const auto kind = static_cast<CollectionKind>(k);
    if (to_string(kind) == text) return kind;
  }
  throw Error(ErrorKind::Parse, "unknown collection type '" + std::string(text) + "'");
}

CollectionKind collection_kind(TriKind kind) noexcept { return static_cast<CollectionKind>(static_cast<int>(kind)); }

// ---- maximal collections --------------------------------------------------------------------

namespace {

Puncture other_end(const EndpointSet& e, Puncture x) { return e[0] == x ? e[1] : e[0]; }

// kappa of the coinciding pair on e agreeing at x with tag t.
std::array<AllowableCurve, 2> coinciding_curves(const Slope& s, const EndpointSet& e, Puncture x, Tagging t) {
  const Puncture y = other_end(e, x);
  return {kappa(TaggedArc(s, {x, t}, {y, Tagging::Plain})), kappa(TaggedArc(s, {x, t}, {y, Tagging::Notched}))};
}

// Recovers the distinguished vertex and tag of a coinciding pair of curves.
std::pair<Puncture, Tagging> agreement(const AllowableCurve& c, const AllowableCurve& d) {
  for (const Puncture v : c.endpoints()) {
    if (c.spiral_at(v) == d.spiral_at(v)) return {v, tag_of(*c.spiral_at(v))};
  }
  throw Error(ErrorKind::Inconsistent, "curves " + c.to_string() + " and " + d.to_string() + " do not coincide");
}

}  // namespace

MaximalCollection MaximalCollection::of_triangulation(const TaggedTriangulation& t) {
  MaximalCollection c;
  c.kind_ = collection_kind(classify(t).kind);
  for (const auto& arc : t.arcs()) c.curves_.push_back(kappa(arc));
  std::sort(c.curves_.begin(), c.curves_.end());
  c.triangulation_ = t;
  return c;
}

MaximalCollection MaximalCollection::type_vii(const TypeVIIParams& p) {
  const auto sets = endpoint_sets(p.slope);
  const EndpointSet near = endpoint_set_containing(p.slope, Puncture{});
  const EndpointSet& other = sets[0] == near ? sets[1] : sets[0];
  const auto in = [](const EndpointSet& e, Puncture v) { return e[0] == v || e[1] == v; };
  if (!in(near, p.v)) throw Error(ErrorKind::InvalidParameters, "v must be an endpoint of the arc through v00");
  if (!in(other, p.v_prime)) throw Error(ErrorKind::InvalidParameters, "v' must avoid the arc through v00");

  MaximalCollection c;
  c.kind_ = CollectionKind::VII;
  c.vii_ = p;
  for (const auto& curve : coinciding_curves(p.slope, near, p.v, p.tag_v)) c.curves_.push_back(curve);
  for (const auto& curve : coinciding_curves(p.slope, other, p.v_prime, p.tag_v_prime)) c.curves_.push_back(curve);
  std::sort(c.curves_.begin(), c.curves_.end());
  c.curves_.insert(c.curves_.begin(), AllowableCurve::closed(p.slope));
  return c;
}

std::int64_t MaximalCollection::max_height() const noexcept {
  std::int64_t h = 0;
  for (const auto& c : curves_) h = std::max(h, c.slope().height());
  return h;
}

std::vector<MaximalCollection> type_vii_collections(const Slope& s) {
  const auto sets = endpoint_sets(s);
  const EndpointSet near = endpoint_set_containing(s, Puncture{});
  const EndpointSet& other = sets[0] == near ? sets[1] : sets[0];
  std::vector<MaximalCollection> out;
  for (const Puncture v : near) {
    for (const Puncture w : other) {
      for (const Tagging tv : {Tagging::Plain, Tagging::Notched}) {
        for (const Tagging tw : {Tagging::Plain, Tagging::Notched}) {
          out.push_back(MaximalCollection::type_vii({s, v, w, tv, tw}));
        }
      }
    }
  }
  return out;
}

std::vector<MaximalCollection> maximal_collections(std::int64_t max_height) {
  std::vector<MaximalCollection> out;
  for (const auto& t : enumerate_triangulations(max_height)) out.push_back(MaximalCollection::of_triangulation(t));
  for (const auto& s : enumerate_slopes(max_height)) {
    for (auto& c : type_vii_collections(s)) out.push_back(std::move(c));
  }
  return out;
}

// ---- cones ----------------------------------------------------------------------------------

namespace {

IntMatrix generator_matrix(const std::vector<ShearVector>& gens) {
  IntMatrix m(6, IntVector(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < 6; ++i) m[i][j] = gens[j][i];
  }
  return m;
}

std::vector<IntVector> columns_of(const std::vector<ShearVector>& gens) {
  std::vector<IntVector> cols;
  for (const auto& g : gens) cols.emplace_back(g.begin(), g.end());
  return cols;
}

ShearVector primitive_shear(const ShearVector& v) {
  const IntVector p = primitive(IntVector(v.begin(), v.end()));
  ShearVector out{};
  std::copy(p.begin(), p.end(), out.begin());
  return out;
}

std::optional<RationalVector> nonnegative_or_none(std::optional<RationalVector> x) {
  if (!x) return std::nullopt;
  for (const auto& c : *x) {
    if (c.sign() < 0) return std::nullopt;
  }
  return x;
}

}  // namespace

std::vector<ShearVector> Cone::canonical() const {
  std::vector<ShearVector> out;
  for (const auto& g : generators) out.push_back(primitive_shear(g));
  std::sort(out.begin(), out.end());
  return out;
}

Cone cone_of(const MaximalCollection& c) {
  Cone cone{{}, 0, c};
  for (const auto& curve : c.curves()) cone.generators.push_back(shear_closed_form(curve));
  const std::size_t expected = c.kind() == CollectionKind::VII ? 5 : 6;
  cone.dim = rank(generator_matrix(cone.generators));
  if (cone.dim != expected || cone.generators.size() != expected) {
    throw Error(ErrorKind::RankDeficient, "cone of type " + std::string(to_string(c.kind())) + " has rank " +
                                              std::to_string(cone.dim));
  }
  return cone;
}

std::optional<RationalVector> membership(const RationalVector& v, const Cone& c) {
  if (v.size() != 6) throw Error(ErrorKind::InvalidParameters, "membership needs a 6-vector");
  std::int64_t l = 1;
  for (const auto& x : v) l = checked::mul(l / std::gcd(l, x.den()), x.den());
  IntVector target;
  for (const auto& x : v) target.push_back((x * Rational(l)).num());
  auto coeffs = solve_unique(columns_of(c.generators), target);
  if (!coeffs) return std::nullopt;
  for (auto& x : *coeffs) x = x / Rational(l);
  return nonnegative_or_none(std::move(coeffs));
}

std::optional<RationalVector> membership(const ShearVector& v, const Cone& c) {
  return nonnegative_or_none(solve_unique(columns_of(c.generators), IntVector(v.begin(), v.end())));
}

// ---- fan index ------------------------------------------------------------------------------

FanIndex::FanIndex(std::int64_t max_height) : max_height_(max_height) {
  for (const auto& c : maximal_collections(max_height)) cones_.push_back(cone_of(c));
  prepared_.reserve(cones_.size());
  for (const auto& cone : cones_) {
    const IntMatrix g = generator_matrix(cone.generators);
    const std::size_t n = cone.generators.size();
    Prepared p;
    IntMatrix chosen;
    for (std::size_t i = 0; i < 6 && p.n_rows < n; ++i) {
      chosen.push_back(g[i]);
      if (rank(chosen) == chosen.size()) {
        p.rows[p.n_rows++] = i;
      } else {
        chosen.pop_back();
      }
    }
    p.det = determinant(chosen);
    // Column j of the inverse solves chosen * x = e_j; scaling by det makes it integral.
    std::vector<IntVector> cols(n, IntVector(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < n; ++j) cols[j][r] = chosen[r][j];
    }
    p.adjugate.assign(n, IntVector(n));
    for (std::size_t j = 0; j < n; ++j) {
      IntVector e(n, 0);
      e[j] = 1;
      const auto x = solve_unique(cols, e);
      for (std::size_t i = 0; i < n; ++i) {
        const Rational scaled = (*x)[i] * Rational(p.det);
        if (!scaled.is_integer()) throw Error(ErrorKind::Inconsistent, "adjugate entry is not integral");
        p.adjugate[i][j] = scaled.num();
      }
    }
    prepared_.push_back(std::move(p));
  }
}

std::vector<std::pair<std::size_t, RationalVector>> FanIndex::containing(const ShearVector& v) const {
  std::vector<std::pair<std::size_t, RationalVector>> out;
  for (std::size_t k = 0; k < cones_.size(); ++k) {
    const Prepared& p = prepared_[k];
    const auto& gens = cones_[k].generators;
    const std::size_t n = p.n_rows;
    // det * coefficients = adjugate * v restricted to the chosen rows.
    IntVector scaled(n, 0);
    bool negative = false;
    for (std::size_t i = 0; i < n && !negative; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s = checked::add(s, checked::mul(p.adjugate[i][j], v[p.rows[j]]));
      scaled[i] = s;
      if ((s < 0) != (p.det < 0) && s != 0) negative = true;
    }
    if (negative) continue;
    // Check the remaining rows: det * v = G * scaled.
    bool consistent = true;
    for (std::size_t r = 0; r < 6 && consistent; ++r) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s = checked::add(s, checked::mul(gens[j][r], scaled[j]));
      consistent = s == checked::mul(p.det, v[r]);
    }
    if (!consistent) continue;
    RationalVector coeffs;
    for (const auto s : scaled) coeffs.emplace_back(s, p.det);
    out.emplace_back(k, std::move(coeffs));
  }
  return out;
}

QuasiLamination FanIndex::locate(const ShearVector& v) const {
  const auto hits = containing(v);
  if (hits.empty()) {
    throw Error(ErrorKind::BoundExhausted,
                "no cone up to height " + std::to_string(max_height_) + " contains " + to_string(v));
  }
  std::optional<QuasiLamination> found;
  for (const auto& [k, coeffs] : hits) {
    std::map<AllowableCurve, std::int64_t> weights;
    const auto& curves = cones_[k].source.curves();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (!coeffs[j].is_integer()) {
        throw Error(ErrorKind::Inconsistent, "fractional weight for " + curves[j].to_string());
      }
      if (coeffs[j].num() != 0) weights.emplace(curves[j], coeffs[j].num());
    }
    QuasiLamination l(std::move(weights));
    if (found && !(*found == l)) throw Error(ErrorKind::Inconsistent, "containing cones disagree on " + to_string(v));
    found = std::move(l);
  }
  return *found;
}

QuasiLamination locate(const ShearVector& v, std::int64_t max_height) { return FanIndex(max_height).locate(v); }

std::size_t count_containing_cones(const ShearVector& v, std::int64_t max_height) {
  return FanIndex(max_height).containing(v).size();
}

// ---- adjacency ------------------------------------------------------------------------------

std::vector<MaximalCollection> flip_adjacency(const MaximalCollection& c) {
  std::vector<MaximalCollection> out;
  if (c.triangulation()) {
    for (std::size_t k = 0; k < kArcsPerTriangulation; ++k) {
      out.push_back(MaximalCollection::of_triangulation(flip(*c.triangulation(), k)));
    }
    return out;
  }
  const TypeVIIParams& p = *c.vii_params();
  const EndpointSet near = endpoint_set_containing(p.slope, Puncture{});
  const auto& curves = c.curves();
  for (std::size_t k = 1; k < curves.size(); ++k) {
    const AllowableCurve& old = curves[k];
    const auto& e = old.ends();
    const AllowableCurve flipped =
        AllowableCurve::open(old.slope(), {e[0].v, reversed(e[0].dir)}, {e[1].v, reversed(e[1].dir)});
    const AllowableCurve* partner = nullptr;
    for (std::size_t j = 1; j < curves.size(); ++j) {
      if (j != k && curves[j].endpoints() == old.endpoints()) partner = &curves[j];
    }
    const auto [x, t] = agreement(flipped, *partner);
    TypeVIIParams q = p;
    if (old.endpoints() == near) {
      q.v = x;
      q.tag_v = t;
    } else {
      q.v_prime = x;
      q.tag_v_prime = t;
    }
    out.push_back(MaximalCollection::type_vii(q));
  }
  return out;
}

// ---- fan axioms -----------------------------------------------------------------------------

bool cones_meet_in_common_face(const Cone& x, const Cone& y) {
  // Infeasibility of: sum a_i g_i = sum b_j h_j, a, b >= 0, with unit weight off the shared generators.
  const std::set<ShearVector> shared = [&] {
    const std::set<ShearVector> xs(x.generators.begin(), x.generators.end());
    std::set<ShearVector> s;
    for (const auto& h : y.generators) {
      if (xs.count(h)) s.insert(h);
    }
    return s;
  }();
  const std::size_t nx = x.generators.size(), ny = y.generators.size();
  IntMatrix a(7, IntVector(nx + ny, 0));
  for (std::size_t j = 0; j < nx; ++j) {
    for (std::size_t i = 0; i < 6; ++i) a[i][j] = x.generators[j][i];
    a[6][j] = shared.count(x.generators[j]) ? 0 : 1;
  }
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < 6; ++i) a[i][nx + j] = -y.generators[j][i];
    a[6][nx + j] = shared.count(y.generators[j]) ? 0 : 1;
  }
  IntVector b(7, 0);
  b[6] = 1;
  return !nonnegative_feasible(a, b);
}

FanCheckReport fan_check(const std::vector<Cone>& cones, std::size_t trials, std::uint64_t seed) {
  FanCheckReport report;
  if (cones.size() < 2) return report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, cones.size() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    ++report.pairs;
    if (!cones_meet_in_common_face(cones[i], cones[j])) {
      ++report.failures;
      report.failing_pairs.emplace_back(i, j);
    }
  }
  return report;
}

// ---- induced torus cones --------------------------------------------------------------------

namespace {

TorusVector primitive_torus(const TorusVector& v) {
  const IntVector p = primitive(IntVector(v.begin(), v.end()));
  return {p[0], p[1], p[2]};
}

}  // namespace

std::vector<TorusVector> induced_rays(const Cone& c) {
  // Extreme rays of {lambda >= 0 : (x_i - x_{i+3})(G lambda) = 0} have minimal support.
  const std::size_t n = c.generators.size();
  IntMatrix m(3, IntVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < 3; ++i) m[i][j] = checked::sub(c.generators[j][i], c.generators[j][i + 3]);
  }
  std::set<TorusVector> rays;
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1U) support.push_back(j);
    }
    if (support.size() > 4) continue;
    IntMatrix sub(3, IntVector(support.size()));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < support.size(); ++k) sub[i][k] = m[i][support[k]];
    }
    const auto kernel = kernel_basis(sub);
    if (kernel.size() != 1) continue;
    IntVector lambda = kernel[0];
    if (lambda[0] < 0) {
      for (auto& x : lambda) x = -x;
    }
    if (!std::all_of(lambda.begin(), lambda.end(), [](std::int64_t x) { return x > 0; })) continue;
    TorusVector image{};
    for (std::size_t k = 0; k < support.size(); ++k) {
      for (std::size_t i = 0; i < 3; ++i) {
        image[i] = checked::add(image[i], checked::mul(lambda[k], c.generators[support[k]][i]));
      }
    }
    rays.insert(primitive_torus(image));
  }
  return {rays.begin(), rays.end()};
}

InducedCheckReport induced_torus_check(std::int64_t max_height) {
  InducedCheckReport report;
  for (const auto& triple : farey1_triples(max_height)) {
    for (const Tagging tag : {Tagging::Plain, Tagging::Notched}) {
      const TriType spec{TriKind::I, {triple.begin(), triple.end()}, {}, {}, {tag, tag, tag, tag}};
      const Cone c = cone_of(MaximalCollection::of_triangulation(build_type(spec)));
      const auto rays = induced_rays(c);
      std::set<TorusVector> torus;
      for (const auto& s : triple) torus.insert(primitive_torus(torus_arc_shear(s, spiral_of(tag), TypeITri::base().triple)));

      IntMatrix a(3, IntVector(rays.size()));
      for (std::size_t j = 0; j < rays.size(); ++j) {
        for (std::size_t i = 0; i < 3; ++i) a[i][j] = rays[j][i];
      }
      const bool inside = std::all_of(torus.begin(), torus.end(), [&](const TorusVector& g) {
        return nonnegative_feasible(a, IntVector(g.begin(), g.end()));
      });
      ++report.triangulations;
      if (inside) ++report.contained;
      if (std::set<TorusVector>(rays.begin(), rays.end()) == torus) ++report.equal_rays;
    }
  }
  return report;
}

// ---- P and U --------------------------------------------------------------------------------

bool in_subspace_u(const ShearVector& v) { return v[0] == v[3] && v[1] == v[4] && v[2] == v[5]; }

bool in_plane_p(const ShearVector& v) { return in_subspace_u(v) && checked::add(checked::add(v[0], v[1]), v[2]) == 0; }

std::int64_t content(const ShearVector& v) {
  std::int64_t g = 0;
  for (const auto x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace sphere_lam
