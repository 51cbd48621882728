#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sphere_lam/fan.hpp"

namespace sphere_lam::selftest {

namespace {

Slope sl(std::int64_t a, std::int64_t b) { return standard_form(a, b); }
Puncture pv(const char* s) { return parse_puncture(s); }

AllowableCurve open(std::int64_t a, std::int64_t b, const char* v, SpiralDir dv, const char* w, SpiralDir dw) {
  return AllowableCurve::open(sl(a, b), {pv(v), dv}, {pv(w), dw});
}

constexpr SpiralDir CW = SpiralDir::CW;
constexpr SpiralDir CCW = SpiralDir::CCW;

std::vector<Slope> positive_slopes_for_selftest() {
  std::vector<Slope> out;
  for (const auto& s : enumerate_slopes(4)) {
    if (s.b() > 0) out.push_back(s);
  }
  return out;
}

std::map<CollectionKind, int> profile(const MaximalCollection& c) {
  std::map<CollectionKind, int> out;
  for (const auto& n : flip_adjacency(c)) ++out[n.kind()];
  return out;
}

class Runner {
 public:
  void expect(std::string name, const std::function<std::string()>& observed, const std::string& expected) {
    Check c{std::move(name), false, {}};
    try {
      const std::string got = observed();
      c.ok = got == expected;
      if (!c.ok) c.detail = "got " + got + ", expected " + expected;
    } catch (const std::exception& e) {
      c.detail = std::string("threw: ") + e.what();
    }
    checks_.push_back(std::move(c));
  }

  void require(std::string name, const std::function<bool()>& predicate) {
    expect(std::move(name), [&] { return predicate() ? std::string("true") : std::string("false"); }, "true");
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

}  // namespace

std::vector<Check> run() {
  Runner r;

  r.expect("standard form of (0,-7)", [] { return sl(0, -7).to_string(); }, "inf");
  r.expect("standard form of (5,-2)", [] { return sl(5, -2).to_string(); }, "-2/5");
  r.require("(0, inf, -1) is a Farey-1 triple", [] { return is_farey1_triple(sl(1, 0), Slope::infinity(), sl(1, -1)); });
  r.expect("endpoint sets of 3/2", [] {
    const auto e = endpoint_sets(sl(2, 3));
    return e[0][0].to_string() + e[0][1].to_string() + " " + e[1][0].to_string() + e[1][1].to_string();
  }, "0001 1011");
  r.expect("kappa of a notched arc spirals counterclockwise", [] {
    return kappa(TaggedArc(sl(2, 3), {pv("00"), Tagging::Notched}, {pv("01"), Tagging::Notched})).to_string();
  }, open(2, 3, "00", CCW, "01", CCW).to_string());
  r.require("distinct closed curves are incompatible",
            [] { return !curves_compatible(AllowableCurve::closed(sl(2, 3)), AllowableCurve::closed(sl(1, 1))); });
  r.require("closed curve compatible with an open curve of its slope",
            [] { return curves_compatible(AllowableCurve::closed(sl(2, 3)), open(2, 3, "00", CCW, "01", CCW)); });

  const std::vector<std::pair<AllowableCurve, std::string>> fixtures{
      {open(2, 3, "00", CCW, "01", CCW), "[-1,2,0,-1,1,0]"},
      {AllowableCurve::closed(sl(2, 3)), "[-3,2,1,-3,2,1]"},
      {open(3, 2, "00", CW, "10", CW), "[-2,1,0,-1,1,0]"},
      {open(5, -2, "00", CCW, "10", CCW), "[2,0,-1,1,0,-1]"},
      {open(2, 3, "10", CCW, "11", CCW), "[-1,1,0,-1,2,0]"},
  };
  for (const auto& [curve, expected] : fixtures) {
    r.expect("closed form " + curve.to_string(), [&] { return to_string(shear_closed_form(curve)); }, expected);
    r.expect("oracle " + curve.to_string(), [&] { return to_string(shear_oracle(curve)); }, expected);
  }
  r.expect("word shear curve(3/2, ccw, ccw)", [&] { return to_string(shear_via_word(fixtures[0].first)); },
           fixtures[0].second);
  r.expect("word shear closed(3/2)", [&] { return to_string(shear_via_word(fixtures[1].first)); }, fixtures[1].second);

  r.expect("w'(2,3)", [] { return to_string(word_prime(2, 3)); }, "t4 r5 t1");
  r.expect("w'(1,1)", [] { return to_string(word_prime(1, 1)); }, "");
  r.expect("w(lambda)", [] { return to_string(word_of_curve(open(2, 3, "00", CCW, "01", CCW))); },
           "t1 r2 t4 r5 t1 r2");
  r.expect("w(lambda_C)", [] { return to_string(word_of_curve(AllowableCurve::closed(sl(2, 3)))); },
           "t1 t4 r5 t1 r2 t4 t1 r5 t4 r2 t1");

  r.expect("(25) on [-1,2,0,-1,1,0]",
           [] { return to_string(apply_perm(CoordPerm::from_cycles("(25)"), {-1, 2, 0, -1, 1, 0})); },
           "[-1,1,0,-1,2,0]");
  r.expect("(132)(465) on [-1,2,0,-1,1,0]",
           [] { return to_string(apply_perm(CoordPerm::from_cycles("(132)(465)"), {-1, 2, 0, -1, 1, 0})); },
           "[2,0,-1,1,0,-1]");

  r.require("B(T0) is the base exchange matrix", [] {
    const ExchangeMatrix expected{{{0, 1, -1, 0, 1, -1},
                                   {-1, 0, 1, -1, 0, 1},
                                   {1, -1, 0, 1, -1, 0},
                                   {0, 1, -1, 0, 1, -1},
                                   {-1, 0, 1, -1, 0, 1},
                                   {1, -1, 0, 1, -1, 0}}};
    return signed_adjacency(base_triangulation()) == expected;
  });
  r.require("B(flip(T0, k)) = mutate(B(T0), k)", [] {
    const TaggedTriangulation t0 = base_triangulation();
    for (std::size_t k = 0; k < 6; ++k) {
      const TaggedTriangulation t = flip(t0, k);
      if (t.all_plain() && signed_adjacency(t) != mutate(signed_adjacency(t0), k)) return false;
    }
    return true;
  });
  r.expect("classify(T0)", [] { return std::string(to_string(classify(base_triangulation()).kind)); }, "I");
  r.require("three coinciding pairs at v00 form type VI", [] {
    const TriType spec{TriKind::VI, {sl(1, 0), Slope::infinity(), sl(1, -1)}, pv("00"), {}, {}};
    return classify(build_type(spec)).kind == TriKind::VI;
  });
  r.require("every flip of T0 has type II", [] {
    const TaggedTriangulation t0 = base_triangulation();
    for (std::size_t k = 0; k < 6; ++k) {
      if (classify(flip(t0, k)).kind != TriKind::II) return false;
    }
    return true;
  });
  r.require("flip profiles at height 2", [] {
    using K = CollectionKind;
    const std::map<K, std::map<K, int>> expected{
        {K::I, {{K::II, 6}}},
        {K::II, {{K::I, 2}, {K::IV, 4}}},
        {K::III, {{K::III, 2}, {K::IV, 4}}},
        {K::IV, {{K::II, 2}, {K::III, 1}, {K::IV, 2}, {K::V, 1}}},
        {K::V, {{K::IV, 4}, {K::VI, 2}}},
        {K::VI, {{K::V, 6}}},
    };
    for (const auto& t : enumerate_triangulations(2)) {
      const auto c = MaximalCollection::of_triangulation(t);
      if (profile(c) != expected.at(c.kind())) return false;
    }
    return true;
  });
  r.expect("torus shear of 3/2", [] {
    const TorusVector v = torus_shear(sl(2, 3));
    return to_string(ShearVector{v[0], v[1], v[2], 0, 0, 0});
  }, "[-3,2,1,0,0,0]");

  r.require("cone of kappa(T0) has rank 6",
            [] { return cone_of(MaximalCollection::of_triangulation(base_triangulation())).dim == 6; });
  r.require("type-VII cones have rank 5", [] {
    for (const auto& c : type_vii_collections(sl(2, 3))) {
      if (cone_of(c).dim != 5) return false;
    }
    return true;
  });
  r.require("type-VII cone has four type-VII neighbours", [] {
    const auto n = flip_adjacency(type_vii_collections(sl(2, 3)).front());
    return n.size() == 4 && std::all_of(n.begin(), n.end(), [](const auto& c) { return c.kind() == CollectionKind::VII; });
  });
  r.expect("closed(3/2) ray lies in sixteen cones",
           [] { return std::to_string(count_containing_cones(shear_closed_form(AllowableCurve::closed(sl(2, 3))), 3)); },
           "16");
  r.require("orbit sizes 6, 6, 12, 3", [] {
    for (const auto& s : positive_slopes_for_selftest()) {
      const auto items = thm12_items(s);
      const std::array<std::size_t, 4> sizes{6, 6, 12, 3};
      for (std::size_t i = 0; i < 4; ++i) {
        if (orbit(items[i], group_gamma24()).size() != sizes[i]) return false;
      }
    }
    return true;
  });
  r.require("both universal lists agree at height 4", [] {
    return universal_coeffs(4, UniversalForm::Thm12) == universal_coeffs(4, UniversalForm::Thm81);
  });
  r.require("irredundant list has no duplicates at height 4", [] {
    const auto raw = universal_coeffs_raw(4, UniversalForm::Thm81);
    return raw.size() == universal_coeffs(4, UniversalForm::Thm81).size();
  });

  return r.take();
}

}  // namespace sphere_lam::selftest
