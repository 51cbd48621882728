#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace sphere_lam;
using namespace sphere_lam::testing;

namespace {

// Grid word of (0,0) -> (a,b) by listing the crossings with x = i and y = j in order along the
// segment: r at odd columns is r5 and at even ones r2, t at odd rows is t4 and at even ones t1.
std::string word_oracle(std::int64_t a, std::int64_t b) {
  std::vector<std::pair<Rational, std::string>> events;
  for (std::int64_t i = 1; i < a; ++i) events.emplace_back(Rational(i, a), i % 2 ? "r5" : "r2");
  for (std::int64_t j = 1; j < b; ++j) events.emplace_back(Rational(j, b), j % 2 ? "t4" : "t1");
  std::sort(events.begin(), events.end());
  std::string out;
  for (const auto& [t, letter] : events) out += (out.empty() ? "" : " ") + letter;
  return out;
}

std::size_t count(const Word& w, char kind) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [kind](const Letter& l) { return l.kind == kind; }));
}

ShearVector add(const ShearVector& x, const ShearVector& y, std::int64_t k = 1) {
  ShearVector out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = x[i] + k * y[i];
  return out;
}

bool cyclic_of(const TorusVector& v, const std::array<std::int64_t, 3>& w) {
  for (std::size_t r = 0; r < 3; ++r) {
    if (v[0] == w[r] && v[1] == w[(r + 1) % 3] && v[2] == w[(r + 2) % 3]) return true;
  }
  return false;
}

bool has_word(const AllowableCurve& c) {
  try {
    (void)word_of_curve(c);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedBaseCase) throw;
    return false;
  }
}

}  // namespace

TEST_SUITE("shear") {
  TEST_CASE("fixtures by all three methods") {
    const std::vector<std::pair<AllowableCurve, ShearVector>> fixtures{
        {open_curve(2, 3, "00", CCW, "01", CCW), {-1, 2, 0, -1, 1, 0}},
        {AllowableCurve::closed(sl(2, 3)), {-3, 2, 1, -3, 2, 1}},
        {open_curve(3, 2, "00", CW, "10", CW), {-2, 1, 0, -1, 1, 0}},
        {open_curve(5, -2, "00", CCW, "10", CCW), {2, 0, -1, 1, 0, -1}},
        {open_curve(2, 3, "10", CCW, "11", CCW), {-1, 1, 0, -1, 2, 0}},
        {AllowableCurve::closed(sl(1, 1)), {-1, 1, 0, -1, 1, 0}},
    };
    for (const auto& [c, v] : fixtures) {
      CAPTURE(c.to_string());
      CHECK(shear_closed_form(c) == v);
      CHECK(shear_oracle(c) == v);
      CHECK(shear(c) == v);
      CHECK(shear(c, ShearMethod::Oracle) == v);
      if (has_word(c)) CHECK(shear_via_word(c) == v);
    }
    CHECK(to_string(ShearVector{-1, 2, 0, -1, 1, 0}) == "[-1,2,0,-1,1,0]");
    CHECK(parse_shear_method("word") == ShearMethod::Word);
    CHECK_THROWS_AS((void)parse_shear_method("guess"), Error);
  }

  TEST_CASE("words") {
    CHECK(to_string(word_prime(2, 3)) == "t4 r5 t1");
    CHECK(to_string(word_prime(1, 1)).empty());
    CHECK(to_string(word_prime(3, 2)) == "r5 t4 r2");
    CHECK(to_string(word_of_curve(open_curve(2, 3, "00", CCW, "01", CCW))) == "t1 r2 t4 r5 t1 r2");
    CHECK(to_string(word_of_curve(open_curve(2, 3, "00", CCW, "01", CW))) == "t1 r2 t4 r5 t1 t4");
    CHECK(to_string(word_of_curve(AllowableCurve::closed(sl(2, 3)))) == "t1 t4 r5 t1 r2 t4 t1 r5 t4 r2 t1");
    CHECK_THROWS_AS((void)word_of_curve(open_curve(2, 3, "00", CW, "01", CW)), Error);
    CHECK_THROWS_AS((void)word_of_curve(AllowableCurve::closed(sl(1, -1))), Error);
    CHECK_THROWS_AS((void)word_prime(1, 0), Error);
    CHECK(to_string(parse_word("t4 r5 t1")) == "t4 r5 t1");
    CHECK_THROWS_AS((void)parse_word("t3"), Error);
  }

  TEST_CASE("grid words match crossing enumeration") {
    for (std::int64_t a = 1; a <= 12; ++a) {
      for (std::int64_t b = 1; b <= 12; ++b) {
        if (std::gcd(a, b) != 1) continue;
        const Word w = word_prime(a, b);
        CHECK(to_string(w) == word_oracle(a, b));
        CHECK(count(w, 'r') == static_cast<std::size_t>(a - 1));
        CHECK(count(w, 't') == static_cast<std::size_t>(b - 1));
        const Word full = word_of_curve(AllowableCurve::open(sl(a, b), {pv("00"), CCW},
                                                             {Puncture::from_point({a, b}), CCW}));
        CHECK(full.front() == Letter{'t', 1});
        CHECK(count(full, 't') == static_cast<std::size_t>(b));
        CHECK(count(full, 'r') == static_cast<std::size_t>(a + 1));
      }
    }
  }

  TEST_CASE("methods agree and the diagonal bound holds") {
    for (const auto& c : all_curves(8)) {
      CAPTURE(c.to_string());
      const auto v = shear_closed_form(c);
      CHECK(shear_oracle(c) == v);
      if (has_word(c)) {
        CHECK(shear_via_word(c) == v);
        if (!c.is_closed()) CHECK(std::abs(v[2] - v[5]) <= 1);
      }
    }
  }

  TEST_CASE("coordinate permutations") {
    const ShearVector x{-1, 2, 0, -1, 1, 0};
    CHECK(apply_perm(CoordPerm::from_cycles("(25)"), x) == ShearVector{-1, 1, 0, -1, 2, 0});
    CHECK(apply_perm(CoordPerm::from_cycles("(132)(465)"), x) == ShearVector{2, 0, -1, 1, 0, -1});
    CHECK(apply_perm(CoordPerm::identity(), x) == x);
    CHECK(CoordPerm::from_cycles("()") == CoordPerm::identity());
    CHECK(CoordPerm::from_cycles("(14)(25)(36)").to_string() == "(14)(25)(36)");
    CHECK_THROWS_AS((void)CoordPerm::from_cycles("(17)"), Error);
    CHECK_THROWS_AS((void)CoordPerm::from_cycles("(11)"), Error);

    Rng rng(53);
    const auto& g = group_gamma24();
    for (int trial = 0; trial < 200; ++trial) {
      const auto& p = pick(rng, g);
      const auto& q = pick(rng, g);
      ShearVector v{};
      for (auto& e : v) e = uniform(rng, -9, 9);
      CHECK(apply_perm(compose(p, q), v) == apply_perm(p, apply_perm(q, v)));
      CHECK(compose(p, inverse(p)) == CoordPerm::identity());
    }
  }

  TEST_CASE("permutation groups") {
    CHECK(group_x().size() == 2);
    CHECK(group_y().size() == 4);
    CHECK(group_z().size() == 3);
    CHECK(group_zx().size() == 6);
    CHECK(group_zy().size() == 12);
    CHECK(group_gamma24().size() == 24);
    CHECK(product_set(group_z(), group_y()).size() == 12);
    for (const auto& g : {group_x(), group_y(), group_z(), group_zx(), group_zy(), group_gamma24()}) {
      const std::set<CoordPerm> s(g.begin(), g.end());
      CHECK(s.size() == g.size());
      for (const auto& p : g) {
        for (const auto& q : g) CHECK(s.count(compose(p, q)) == 1);
      }
    }
  }

  TEST_CASE("z reduction") {
    for (const auto& s : enumerate_slopes(9)) {
      const auto [src, k] = z_source(s);
      CHECK(src.b() > 0);
      LatticePoint p = src.direction();
      for (int i = 0; i < k; ++i) p = {p.x + p.y, -p.x};
      CHECK(slope_of(p) == s);
      CHECK(z_height(s) == src.height());
    }
    CHECK(z_source(sl(2, 3)).second == 0);
  }

  TEST_CASE("shear with respect to other type-I triangulations") {
    const TypeITri base;
    for (const auto& c : all_curves(4)) CHECK(shear_wrt(c, base) == shear_closed_form(c));

    TypeITri notched;
    notched.tags.fill(Tagging::Notched);
    CHECK(shear_wrt(open_curve(2, 3, "00", CCW, "01", CCW), notched) == ShearVector{-2, 0, 1, -2, 1, 1});
    CHECK(shear_oracle_wrt(open_curve(2, 3, "00", CCW, "01", CCW), notched) == ShearVector{-2, 0, 1, -2, 1, 1});
    CHECK(shear_closed_form(open_curve(2, 3, "00", CW, "01", CW)) == ShearVector{-2, 0, 1, -2, 1, 1});

    Rng rng(59);
    const auto triples = farey1_triples(3);
    const auto curves = all_curves(5);
    for (int trial = 0; trial < 400; ++trial) {
      const TypeITri t = random_type_i(rng, triples);
      const auto& c = pick(rng, curves);
      CHECK(shear_wrt(c, t) == shear_oracle_wrt(c, t));
    }

    TypeITri bad;
    bad.triple[2] = sl(1, 2);
    CHECK_THROWS_AS(bad.validate(), Error);
    CHECK_THROWS_AS((void)shear_wrt(AllowableCurve::closed(sl(1, 1)), bad), Error);
  }

  TEST_CASE("reverse_at_notched") {
    const std::array<Tagging, 4> tags{Tagging::Notched, Tagging::Plain, Tagging::Plain, Tagging::Plain};
    CHECK(reverse_at_notched(open_curve(2, 3, "00", CCW, "01", CCW), tags) == open_curve(2, 3, "00", CW, "01", CCW));
    CHECK(reverse_at_notched(AllowableCurve::closed(sl(2, 3)), tags) == AllowableCurve::closed(sl(2, 3)));
  }

  TEST_CASE("tangles and laminations") {
    CHECK(tangle_shear(Tangle{}) == ShearVector{});
    Tangle two;
    two.add(AllowableCurve::closed(sl(2, 3)), 2);
    CHECK(tangle_shear(two) == ShearVector{-6, 4, 2, -6, 4, 2});

    Tangle cancel;
    cancel.add(AllowableCurve::closed(sl(2, 3)), 1);
    cancel.add(AllowableCurve::closed(sl(2, 3)), -1);
    CHECK(cancel.empty());

    Rng rng(61);
    const auto triples = farey1_triples(2);
    for (int trial = 0; trial < 100; ++trial) {
      const Tangle x = random_tangle(rng, 4, 5), y = random_tangle(rng, 4, 5);
      const std::int64_t k = uniform(rng, -3, 3);
      Tangle sum = x;
      for (const auto& [c, w] : y.terms()) sum.add(c, k * w);
      const TypeITri t = random_type_i(rng, triples);
      CHECK(tangle_shear(sum, t) == add(tangle_shear(x, t), tangle_shear(y, t), k));
    }

    std::map<AllowableCurve, std::int64_t> w{{AllowableCurve::closed(sl(2, 3)), 1},
                                             {open_curve(2, 3, "00", CCW, "01", CCW), 3}};
    const QuasiLamination l(w);
    CHECK(shear_lamination(l) == add(ShearVector{-3, 2, 1, -3, 2, 1}, ShearVector{-1, 2, 0, -1, 1, 0}, 3));
    CHECK_THROWS_AS(QuasiLamination({{AllowableCurve::closed(sl(2, 3)), 0}}), Error);
    CHECK_THROWS_AS(
        QuasiLamination({{AllowableCurve::closed(sl(2, 3)), 1}, {AllowableCurve::closed(sl(1, 1)), 1}}), Error);
  }

  TEST_CASE("torus shear") {
    CHECK(torus_shear(sl(2, 3)) == TorusVector{-3, 2, 1});
    CHECK(cyclic_of(torus_shear(sl(1, 0)), {0, 1, -1}));
    for (const auto& s : enumerate_slopes(10)) {
      const Slope r = z_source(s).first;
      CAPTURE(s.to_string());
      CHECK(cyclic_of(torus_shear(s), {-r.b(), r.a(), r.b() - r.a()}));
      const auto v = torus_shear(s);
      CHECK(v[0] + v[1] + v[2] == 0);
    }
    for (const auto& tr : farey1_triples(2)) {
      TypeITri t;
      t.triple = tr;
      for (const auto& s : enumerate_slopes(5)) CHECK(sphere_torus_check(s, t));
    }
    TypeITri notched;
    notched.tags.fill(Tagging::Notched);
    CHECK_THROWS_AS((void)sphere_torus_check(sl(1, 1), notched), Error);
  }

  TEST_CASE("null tangle witnesses") {
    Tangle closed11;
    closed11.add(AllowableCurve::closed(sl(1, 1)), 1);
    const auto w = find_witness(closed11, 3);
    REQUIRE(w.has_value());
    CHECK(tangle_shear(closed11, *w) != ShearVector{});
    CHECK(tangle_shear(closed11) == ShearVector{-1, 1, 0, -1, 1, 0});
    CHECK_FALSE(find_witness(Tangle{}, 3).has_value());

    Tangle merged;
    merged.add(open_curve(2, 3, "00", CCW, "01", CCW), 1);
    merged.add(open_curve(2, 3, "00", CCW, "01", CCW), -1);
    CHECK_FALSE(find_witness(merged, 3).has_value());

    Tangle hidden;
    hidden.add(AllowableCurve::closed(sl(1, 1)), 1);
    hidden.add(AllowableCurve::closed(sl(1, 0)), 1);
    hidden.add(AllowableCurve::closed(Slope::infinity()), -1);
    const auto h = find_witness(hidden, 4);
    REQUIRE(h.has_value());
    CHECK(tangle_shear(hidden, *h) != ShearVector{});
  }
}
