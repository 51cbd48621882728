#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace sphere_lam;
using namespace sphere_lam::testing;

namespace {

std::size_t shared_generators(const Cone& x, const Cone& y) {
  const auto a = x.canonical(), b = y.canonical();
  std::vector<ShearVector> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.size();
}

IntMatrix generator_matrix(const Cone& c) {
  IntMatrix m;
  for (const auto& g : c.generators) m.emplace_back(g.begin(), g.end());
  return m;
}

std::vector<TorusVector> torus_cone_rays(const TypeITri& t) {
  std::vector<TorusVector> out;
  for (const auto& s : t.triple) {
    const auto v = torus_arc_shear(s, spiral_of(t.tags[0]), TypeITri::base().triple);
    const auto p = primitive({v[0], v[1], v[2]});
    out.push_back({p[0], p[1], p[2]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("fan") {
  TEST_CASE("collection counts") {
    for (std::int64_t h = 1; h <= 2; ++h) {
      const auto cs = maximal_collections(h);
      std::size_t vii = 0;
      for (const auto& c : cs) vii += c.kind() == CollectionKind::VII ? 1 : 0;
      CHECK(vii == 16 * enumerate_slopes(h).size());
      CHECK(cs.size() == enumerate_triangulations(h).size() + vii);
    }
    CHECK(maximal_collections(1).size() == 240);
  }

  TEST_CASE("collections are pairwise compatible and maximal in size") {
    for (const auto& c : maximal_collections(2)) {
      const auto& curves = c.curves();
      CHECK(curves.size() == (c.kind() == CollectionKind::VII ? 5u : 6u));
      const bool vii = c.kind() == CollectionKind::VII;
      if (vii) CHECK(curves.front().is_closed());
      CHECK(std::is_sorted(curves.begin() + (vii ? 1 : 0), curves.end()));
      CHECK(std::set<AllowableCurve>(curves.begin(), curves.end()).size() == curves.size());
      for (const auto& x : curves) {
        for (const auto& y : curves) CHECK(curves_compatible(x, y));
      }
    }
  }

  TEST_CASE("type VII parameters") {
    const Slope s = sl(2, 3);
    const auto c = MaximalCollection::type_vii({s, pv("00"), pv("10"), Tagging::Plain, Tagging::Plain});
    CHECK(c.kind() == CollectionKind::VII);
    CHECK(c.curves().front() == AllowableCurve::closed(s));
    std::size_t at_v = 0, at_vp = 0;
    for (const auto& x : c.curves()) {
      if (x.is_closed()) continue;
      CHECK(x.slope() == s);
      if (x.spiral_at(pv("00")) == SpiralDir::CW) ++at_v;
      if (x.spiral_at(pv("10")) == SpiralDir::CW) ++at_vp;
    }
    CHECK(at_v == 2);
    CHECK(at_vp == 2);
    CHECK_THROWS_AS((void)MaximalCollection::type_vii({s, pv("00"), pv("01"), Tagging::Plain, Tagging::Plain}), Error);
    CHECK_THROWS_AS((void)MaximalCollection::type_vii({s, pv("10"), pv("11"), Tagging::Plain, Tagging::Plain}), Error);
    CHECK(type_vii_collections(s).size() == 16);
  }

  TEST_CASE("cone ranks") {
    const FanIndex fan(2);
    for (const auto& c : fan.cones()) {
      const bool vii = c.kind() == CollectionKind::VII;
      CHECK(c.generators.size() == (vii ? 5u : 6u));
      CHECK(c.dim == c.generators.size());
      CHECK(rank(generator_matrix(c)) == c.dim);
      const auto canon = c.canonical();
      CHECK(std::is_sorted(canon.begin(), canon.end()));
      for (const auto& g : canon) CHECK(content(g) == 1);
    }
  }

  TEST_CASE("membership") {
    Rng rng(67);
    const FanIndex fan(2);
    for (int trial = 0; trial < 200; ++trial) {
      const auto& c = pick(rng, fan.cones());
      std::vector<std::int64_t> coeff(c.generators.size());
      for (auto& x : coeff) x = uniform(rng, 0, 4);
      ShearVector v{};
      for (std::size_t j = 0; j < coeff.size(); ++j) {
        for (std::size_t i = 0; i < 6; ++i) v[i] += coeff[j] * c.generators[j][i];
      }
      const auto m = membership(v, c);
      REQUIRE(m.has_value());
      for (std::size_t j = 0; j < coeff.size(); ++j) CHECK((*m)[j] == Rational(coeff[j]));
      const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(coeff.size()) - 1));
      ShearVector w = v;
      for (std::size_t i = 0; i < 6; ++i) w[i] -= (coeff[j] + 1) * c.generators[j][i];
      CHECK_FALSE(membership(w, c).has_value());
    }
  }

  TEST_CASE("closed-curve rays") {
    for (const auto& s : enumerate_slopes(6)) {
      const auto v = shear_closed_form(AllowableCurve::closed(s));
      CHECK(in_plane_p(v));
      CHECK(in_subspace_u(v));
      CHECK(content(v) == 1);
    }
    for (const auto& c : all_curves(6, false)) CHECK_FALSE(in_plane_p(shear_closed_form(c)));

    const FanIndex fan(3);
    for (const auto& s : {sl(2, 3), sl(1, 1), sl(1, 0), Slope::infinity(), sl(2, -1)}) {
      const auto hits = fan.containing(shear_closed_form(AllowableCurve::closed(s)));
      CHECK(hits.size() == 16);
      for (const auto& [i, coeff] : hits) CHECK(fan.cones()[i].kind() == CollectionKind::VII);
    }
    CHECK(count_containing_cones(shear_closed_form(AllowableCurve::closed(sl(2, 3))), 3) == 16);
  }

  TEST_CASE("locate") {
    const auto lam = locate({-6, 4, 2, -6, 4, 2}, 3);
    REQUIRE(lam.weights().size() == 1);
    CHECK(lam.weights().begin()->first == AllowableCurve::closed(sl(2, 3)));
    CHECK(lam.weights().begin()->second == 2);
    CHECK(locate({0, 0, 0, 0, 0, 0}, 1).empty());

    Rng rng(71);
    const FanIndex fan(3);
    const auto collections = maximal_collections(3);
    for (int trial = 0; trial < 100; ++trial) {
      const auto l = random_lamination(rng, collections, 4);
      CHECK(fan.locate(shear_lamination(l)) == l);
    }

    const auto far = shear_closed_form(open_curve(5, 4, "00", CW, "10", CW));
    try {
      (void)locate(far, 1);
      FAIL("located a vector outside the height-1 cones");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BoundExhausted);
    }
  }

  TEST_CASE("flip adjacency") {
    using K = CollectionKind;
    const auto t0 = MaximalCollection::of_triangulation(base_triangulation());
    const auto n0 = flip_adjacency(t0);
    CHECK(n0.size() == 6);
    for (const auto& n : n0) CHECK(n.kind() == K::II);

    for (const auto& c : maximal_collections(2)) {
      const auto ns = flip_adjacency(c);
      const auto cone = cone_of(c);
      CHECK(ns.size() == (c.kind() == K::VII ? 4u : 6u));
      for (const auto& n : ns) {
        if (c.kind() == K::VII) CHECK(n.kind() == K::VII);
        const auto back = flip_adjacency(n);
        CHECK(std::find(back.begin(), back.end(), c) != back.end());
        CHECK(shared_generators(cone, cone_of(n)) == cone.dim - 1);
      }
    }
  }

  TEST_CASE("cones meet in common faces") {
    const auto cs = maximal_collections(2);
    const auto a = cone_of(MaximalCollection::of_triangulation(base_triangulation()));
    for (const auto& n : flip_adjacency(a.source)) CHECK(cones_meet_in_common_face(a, cone_of(n)));
    CHECK(cones_meet_in_common_face(a, a));

    const FanIndex fan(2);
    const auto report = fan_check(fan.cones(), 200, 7);
    CHECK(report.pairs == 200);
    CHECK(report.ok());
    CHECK(fan_check(fan.cones(), 50, 7).failing_pairs.empty());
  }

  TEST_CASE("induced torus fan") {
    const auto r = induced_torus_check(2);
    CHECK(r.triangulations > 0);
    CHECK(r.ok());
    CHECK(r.equal_rays == r.triangulations);

    const auto c0 = cone_of(MaximalCollection::of_triangulation(base_triangulation()));
    CHECK(induced_rays(c0) == torus_cone_rays(TypeITri::base()));
  }

  TEST_CASE("g-vectors") {
    for (std::int64_t h = 1; h <= 4; ++h) {
      const auto g = g_vectors(h);
      std::set<ShearVector> expected;
      for (const auto& s : enumerate_slopes(2 * h)) {
        if (z_height(s) > h) continue;
        for (const auto& e : endpoint_sets(s)) {
          for (const auto d0 : {CW, CCW}) {
            for (const auto d1 : {CW, CCW}) expected.insert(shear_closed_form(AllowableCurve::open(s, {e[0], d0}, {e[1], d1})));
          }
        }
      }
      CHECK(std::set<ShearVector>(g.begin(), g.end()) == expected);
      CHECK(g.size() == expected.size());
      CHECK(std::is_sorted(g.begin(), g.end()));
    }
  }

  TEST_CASE("universal coefficient lists") {
    for (std::int64_t h = 1; h <= 5; ++h) {
      const auto a = universal_coeffs(h, UniversalForm::Thm12);
      CHECK(a == universal_coeffs(h, UniversalForm::Thm81));
      CHECK(universal_coeffs_raw(h, UniversalForm::Thm81).size() == a.size());
      std::size_t positive = 0;
      for (const auto& s : enumerate_slopes(h)) positive += s.b() > 0 ? 1 : 0;
      CHECK(a.size() == 27 * positive);
    }
    for (const auto& s : enumerate_slopes(6)) {
      if (s.b() <= 0) continue;
      const auto items = thm12_items(s);
      std::set<ShearVector> all;
      const std::array<std::size_t, 4> sizes{6, 6, 12, 3};
      for (std::size_t i = 0; i < 4; ++i) {
        const auto o = orbit(items[i], group_gamma24());
        CHECK(o.size() == sizes[i]);
        all.insert(o.begin(), o.end());
      }
      CHECK(all.size() == 27);
      CHECK(items[3] == shear_closed_form(AllowableCurve::closed(s)));
    }
    CHECK(parse_universal_form("thm81") == UniversalForm::Thm81);
    CHECK_THROWS_AS((void)parse_universal_form("thm99"), Error);
    CHECK(parse_collection_kind("VII") == CollectionKind::VII);
    CHECK(collection_kind(TriKind::III) == CollectionKind::III);
  }
}
