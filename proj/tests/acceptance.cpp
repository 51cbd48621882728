// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace sphere_lam;
using namespace sphere_lam::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << "s";
  return o.str();
}

std::optional<ShearVector> word_shear(const AllowableCurve& c) {
  try {
    return shear_via_word(c);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedBaseCase) throw;
    return std::nullopt;
  }
}

bool is_zero(const ShearVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::size_t positive_slopes(std::int64_t h) {
  std::size_t n = 0;
  for (const auto& s : enumerate_slopes(h)) n += s.b() > 0 ? 1 : 0;
  return n;
}

// ---- 1 ----
Outcome shear_fixtures() {
  const Clock clock;
  const std::vector<std::pair<AllowableCurve, ShearVector>> fixtures{
      {open_curve(2, 3, "00", CCW, "01", CCW), {-1, 2, 0, -1, 1, 0}},
      {AllowableCurve::closed(sl(2, 3)), {-3, 2, 1, -3, 2, 1}},
      {open_curve(3, 2, "00", CW, "10", CW), {-2, 1, 0, -1, 1, 0}},
      {open_curve(5, -2, "00", CCW, "10", CCW), {2, 0, -1, 1, 0, -1}},
      {open_curve(2, 3, "10", CCW, "11", CCW), {-1, 1, 0, -1, 2, 0}},
  };
  Outcome out;
  std::size_t words = 0;
  for (const auto& [c, v] : fixtures) {
    bool ok = shear_closed_form(c) == v && shear_oracle(c) == v;
    if (const auto w = word_shear(c)) {
      ++words;
      ok = ok && *w == v;
    }
    if (!ok) {
      out.ok = false;
      out.detail += c.to_string() + " ";
    }
  }
  const double t = clock.seconds();
  if (t >= 1.0) out.ok = false;
  out.detail += "5 fixtures, word path on " + std::to_string(words) + ", " + fmt_seconds(t);
  return out;
}

// ---- 2 ----
Outcome words() {
  const std::string a = to_string(word_prime(2, 3));
  const std::string b = to_string(word_of_curve(open_curve(2, 3, "00", CCW, "01", CCW)));
  const std::string c = to_string(word_of_curve(AllowableCurve::closed(sl(2, 3))));
  Outcome out;
  out.ok = a == "t4 r5 t1" && b == "t1 r2 t4 r5 t1 r2" && c == "t1 t4 r5 t1 r2 t4 t1 r5 t4 r2 t1";
  out.detail = "w'=" + a + "; w=" + b + "; w_C=" + c;
  return out;
}

// ---- 3 ----
Outcome methods_agree() {
  const Clock clock;
  std::size_t curves = 0, words = 0, mismatches = 0;
  for (const auto& c : all_curves(12)) {
    ++curves;
    const auto f = shear_closed_form(c);
    bool ok = f == shear_oracle(c);
    if (const auto w = word_shear(c)) {
      ++words;
      ok = ok && *w == f;
    }
    if (!ok) ++mismatches;
  }
  // The same curves against the base triple under every tagging, and against random tagged triples.
  Rng rng(3);
  const auto triples = farey1_triples(3);
  std::size_t tagged = 0;
  for (const auto& c : all_curves(12)) {
    for (int mask = 0; mask < 16; ++mask) {
      TypeITri t;
      for (int i = 0; i < 4; ++i) t.tags[i] = (mask >> i) & 1 ? Tagging::Notched : Tagging::Plain;
      ++tagged;
      if (shear_wrt(c, t) != shear_oracle_wrt(c, t)) ++mismatches;
    }
    const TypeITri t = random_type_i(rng, triples);
    ++tagged;
    if (shear_wrt(c, t) != shear_oracle_wrt(c, t)) ++mismatches;
  }
  const double t = clock.seconds();
  Outcome out;
  out.ok = mismatches == 0 && t < 60.0;
  out.detail = std::to_string(curves) + " curves, " + std::to_string(words) + " with words, " +
               std::to_string(tagged) + " tagged checks, " + std::to_string(mismatches) + " mismatches, " +
               fmt_seconds(t);
  return out;
}

// ---- 4 ----
ExchangeMatrix mutate_oracle(const ExchangeMatrix& b, std::size_t k) {
  ExchangeMatrix m{};
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      m[i][j] = (i == k || j == k) ? -b[i][j]
                                   : b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
    }
  }
  return m;
}

Outcome exchange_matrices() {
  const ExchangeMatrix b0{{{0, 1, -1, 0, 1, -1},
                           {-1, 0, 1, -1, 0, 1},
                           {1, -1, 0, 1, -1, 0},
                           {0, 1, -1, 0, 1, -1},
                           {-1, 0, 1, -1, 0, 1},
                           {1, -1, 0, 1, -1, 0}}};
  const bool base_ok = signed_adjacency(base_triangulation()) == b0;
  std::size_t flips = 0, bad = 0;
  for (const auto& t : enumerate_triangulations(3)) {
    if (!t.all_plain()) continue;
    const auto b = signed_adjacency(t);
    for (std::size_t k = 0; k < 6; ++k) {
      const auto f = flip(t, k);
      if (!f.all_plain()) continue;
      ++flips;
      if (signed_adjacency(f) != mutate_oracle(b, k)) ++bad;
    }
  }
  Outcome out;
  out.ok = base_ok && bad == 0 && flips > 0;
  out.detail = std::string("B(T0) ") + (base_ok ? "matches" : "differs") + ", " + std::to_string(flips) +
               " plain flips, " + std::to_string(bad) + " mismatches";
  return out;
}

// ---- 5 ----
Outcome taxonomy() {
  using K = TriKind;
  Outcome out;
  std::string counts;
  for (std::int64_t h = 1; h <= 3; ++h) {
    const auto s = enumerate_slopes(h);
    std::size_t triples = 0, pairs = 0;
    const auto d = [](const Slope& x, const Slope& y) { return std::abs(det(x.direction(), y.direction())); };
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (d(s[i], s[j]) == 2) ++pairs;
        if (d(s[i], s[j]) != 1) continue;
        for (std::size_t k = j + 1; k < s.size(); ++k) triples += d(s[i], s[k]) == 1 && d(s[j], s[k]) == 1;
      }
    }
    const std::map<K, std::size_t> expected{{K::I, 16 * triples}, {K::II, 32 * pairs}, {K::III, 16 * pairs},
                                            {K::IV, 64 * pairs},  {K::V, 16 * pairs},  {K::VI, 8 * triples}};
    std::map<K, std::size_t> got;
    for (const auto& t : enumerate_triangulations(h)) ++got[classify(t).kind];
    if (got != expected) out.ok = false;
    counts += (h > 1 ? "," : "") + std::to_string(enumerate_triangulations(h).size());
  }
  const std::map<K, std::map<K, int>> profiles{
      {K::I, {{K::II, 6}}},
      {K::II, {{K::I, 2}, {K::IV, 4}}},
      {K::III, {{K::III, 2}, {K::IV, 4}}},
      {K::IV, {{K::II, 2}, {K::III, 1}, {K::IV, 2}, {K::V, 1}}},
      {K::V, {{K::IV, 4}, {K::VI, 2}}},
      {K::VI, {{K::V, 6}}},
  };
  std::size_t bad_profiles = 0, forbidden = 0;
  for (const auto& t : enumerate_triangulations(3)) {
    std::map<K, int> p;
    for (std::size_t k = 0; k < 6; ++k) ++p[classify(flip(t, k)).kind];
    if (p != profiles.at(classify(t).kind)) ++bad_profiles;
    if (t.degree_sequence() == std::array<int, 4>{2, 3, 3, 4}) ++forbidden;
  }
  out.ok = out.ok && bad_profiles == 0 && forbidden == 0;
  out.detail = "triangulations per height " + counts + ", " + std::to_string(bad_profiles) + " bad profiles, " +
               std::to_string(forbidden) + " with (2,3,3,4)";
  return out;
}

// ---- 6 ----
Outcome universal_lists() {
  const auto a = universal_coeffs(10, UniversalForm::Thm12);
  const auto b = universal_coeffs(10, UniversalForm::Thm81);
  const auto raw = universal_coeffs_raw(10, UniversalForm::Thm81);
  const std::set<ShearVector> raw_set(raw.begin(), raw.end());
  std::size_t bad_orbits = 0;
  const std::array<std::size_t, 4> sizes{6, 6, 12, 3};
  for (const auto& s : enumerate_slopes(10)) {
    if (s.b() <= 0) continue;
    const auto items = thm12_items(s);
    std::set<ShearVector> all;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto o = orbit(items[i], group_gamma24());
      if (o.size() != sizes[i]) ++bad_orbits;
      all.insert(o.begin(), o.end());
    }
    if (all.size() != 27) ++bad_orbits;
  }
  Outcome out;
  out.ok = a == b && raw_set.size() == raw.size() && bad_orbits == 0 && a.size() == 27 * positive_slopes(10);
  out.detail = std::to_string(a.size()) + " vectors, raw " + std::to_string(raw.size()) + ", distinct raw " +
               std::to_string(raw_set.size()) + ", " + std::to_string(bad_orbits) + " bad orbits";
  return out;
}

// ---- 7 ----
Outcome injectivity() {
  const auto curves = all_curves(10);
  std::map<ShearVector, AllowableCurve> seen;
  std::size_t collisions = 0;
  for (const auto& c : curves) {
    if (!seen.emplace(shear_closed_form(c), c).second) ++collisions;
  }
  Outcome out;
  out.ok = collisions == 0;
  out.detail = std::to_string(curves.size()) + " curves, " + std::to_string(collisions) + " collisions";
  return out;
}

// ---- 8 ----
Outcome closed_rays() {
  std::size_t bad = 0, slopes = 0;
  for (const auto& s : enumerate_slopes(10)) {
    ++slopes;
    const auto v = shear_closed_form(AllowableCurve::closed(s));
    if (!in_plane_p(v) || content(v) != 1) ++bad;
  }
  const FanIndex fan(3);
  std::size_t cone_failures = 0;
  for (const auto& s : enumerate_slopes(3)) {
    const auto hits = fan.containing(shear_closed_form(AllowableCurve::closed(s)));
    bool ok = hits.size() == 16;
    for (const auto& [i, coeff] : hits) ok = ok && fan.cones()[i].kind() == CollectionKind::VII;
    if (!ok) ++cone_failures;
  }
  const auto n = count_containing_cones(shear_closed_form(AllowableCurve::closed(sl(2, 3))), 3);
  Outcome out;
  out.ok = bad == 0 && cone_failures == 0 && n == 16;
  out.detail = std::to_string(slopes) + " closed rays, " + std::to_string(bad) + " outside P or not primitive, " +
               "Closed(2,3) in " + std::to_string(n) + " cones, " + std::to_string(cone_failures) +
               " slopes with a non-VII or missing cone";
  return out;
}

// ---- 9 ----
Outcome fan_structure() {
  const FanIndex fan3(3);
  const auto report = fan_check(fan3.cones(), 500, 20240901);
  Rng rng(99);
  const FanIndex fan4(4);
  const auto collections = maximal_collections(4);
  std::size_t round_trips = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto l = random_lamination(rng, collections, 4);
    try {
      if (fan4.locate(shear_lamination(l)) == l) ++round_trips;
    } catch (const Error&) {
    }
  }
  Outcome out;
  out.ok = report.pairs == 500 && report.ok() && round_trips == 200;
  out.detail = std::to_string(report.pairs - report.failures) + "/500 pairs meet in a face, " +
               std::to_string(round_trips) + "/200 laminations located";
  return out;
}

// ---- 10 ----
bool cyclic_of(const TorusVector& v, const TorusVector& p) {
  for (std::size_t r = 0; r < 3; ++r) {
    if (v[0] == p[r] && v[1] == p[(r + 1) % 3] && v[2] == p[(r + 2) % 3]) return true;
  }
  return false;
}

Outcome torus() {
  std::size_t checks = 0, bad = 0, bad_pattern = 0;
  const auto slopes = enumerate_slopes(10);
  for (const auto& triple : farey1_triples(3)) {
    auto order = triple;
    std::sort(order.begin(), order.end());
    do {
      TypeITri t;
      t.triple = order;
      for (const auto& s : slopes) {
        ++checks;
        if (!sphere_torus_check(s, t)) ++bad;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  for (const auto& s : slopes) {
    const Slope r = z_source(s).first;
    if (!cyclic_of(torus_shear(s), {-r.b(), r.a(), r.b() - r.a()})) ++bad_pattern;
  }
  Outcome out;
  out.ok = bad == 0 && bad_pattern == 0;
  out.detail = std::to_string(checks) + " sphere/torus checks, " + std::to_string(bad) + " failures, " +
               std::to_string(slopes.size() - bad_pattern) + "/" + std::to_string(slopes.size()) +
               " torus vectors match the cyclic pattern";
  return out;
}

// ---- 11 ----
Outcome witnesses() {
  Rng rng(11);
  std::size_t found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_tangle(rng, 4, 5);
    try {
      const auto w = find_witness(x, 4);
      if (w && !is_zero(tangle_shear(x, *w))) ++found;
    } catch (const Error&) {
    }
  }
  const bool empty_ok = !find_witness(Tangle{}, 4).has_value();
  Outcome out;
  out.ok = found == 100 && empty_ok;
  out.detail = std::to_string(found) + "/100 witnesses, empty tangle " + (empty_ok ? "has none" : "has one");
  return out;
}

// ---- 12 ----
Outcome separating() {
  Rng rng(12);
  std::size_t ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Slope> m;
    const auto n = uniform(rng, 1, 8);
    for (int i = 0; i < n; ++i) m.push_back(random_slope(rng, 9));
    const Slope f = pick(rng, m);
    const auto [x, y] = separating_neighbors(m, f);
    bool good = is_farey1_triple(x, y, f) && x < y && y < f;
    for (const auto& q : m) good = good && !(x <= q && q < f);
    ok += good ? 1 : 0;
  }
  Outcome out;
  out.ok = ok == 100;
  out.detail = std::to_string(ok) + "/100 random sets";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"shear fixtures by formula, word and oracle", shear_fixtures},
      {"grid and curve words", words},
      {"formula, word and oracle agree up to height 12", methods_agree},
      {"exchange matrix of T0 and mutation under flips", exchange_matrices},
      {"taxonomy counts, flip profiles and degree sequences", taxonomy},
      {"universal coefficient lists", universal_lists},
      {"injectivity of shear coordinates", injectivity},
      {"closed-curve rays and their cones", closed_rays},
      {"fan structure and lamination round trips", fan_structure},
      {"sphere and torus coordinates", torus},
      {"null tangle witnesses", witnesses},
      {"separating neighbours", separating},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, run] = criteria[i];
    Outcome o;
    const Clock clock;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS " : "FAIL ") << (i + 1) << " " << name << " (" << o.detail << "; "
              << fmt_seconds(clock.seconds()) << ")\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
