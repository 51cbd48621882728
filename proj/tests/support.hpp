#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "sphere_lam/fan.hpp"

namespace sphere_lam::testing {

using Rng = std::mt19937_64;

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Slope sl(std::int64_t a, std::int64_t b) { return standard_form(a, b); }
inline Puncture pv(const char* s) { return parse_puncture(s); }

inline AllowableCurve open_curve(std::int64_t a, std::int64_t b, const char* v, SpiralDir dv, const char* w,
                                 SpiralDir dw) {
  return AllowableCurve::open(sl(a, b), {pv(v), dv}, {pv(w), dw});
}

inline constexpr SpiralDir CW = SpiralDir::CW;
inline constexpr SpiralDir CCW = SpiralDir::CCW;

// Every allowable curve whose slope lies in enumerate_slopes(h): one closed curve and eight open
// ones per slope.
inline std::vector<AllowableCurve> all_curves(std::int64_t h, bool with_closed = true) {
  std::vector<AllowableCurve> out;
  for (const auto& s : enumerate_slopes(h)) {
    if (with_closed) out.push_back(AllowableCurve::closed(s));
    for (const auto& e : endpoint_sets(s)) {
      for (const auto d0 : {CW, CCW}) {
        for (const auto d1 : {CW, CCW}) out.push_back(AllowableCurve::open(s, {e[0], d0}, {e[1], d1}));
      }
    }
  }
  return out;
}

inline std::vector<TaggedArc> all_arcs(std::int64_t h) {
  std::vector<TaggedArc> out;
  for (const auto& c : all_curves(h, false)) out.push_back(kappa_inv(c));
  return out;
}

inline Slope random_slope(Rng& rng, std::int64_t h) {
  for (;;) {
    const std::int64_t a = uniform(rng, 0, h), b = uniform(rng, -h, h);
    if (a == 0 && b == 0) continue;
    const Slope s = standard_form(a, b);
    if (s.a() <= h && std::abs(s.b()) <= h) return s;
  }
}

inline AllowableCurve random_curve(Rng& rng, std::int64_t h, bool allow_closed = true) {
  const Slope s = random_slope(rng, h);
  if (allow_closed && uniform(rng, 0, 8) == 0) return AllowableCurve::closed(s);
  const auto e = endpoint_sets(s)[static_cast<std::size_t>(uniform(rng, 0, 1))];
  const auto dir = [&] { return uniform(rng, 0, 1) == 0 ? CW : CCW; };
  return AllowableCurve::open(s, {e[0], dir()}, {e[1], dir()});
}

inline TaggedArc random_arc(Rng& rng, std::int64_t h) { return kappa_inv(random_curve(rng, h, false)); }

inline std::array<Tagging, 4> random_tags(Rng& rng) {
  std::array<Tagging, 4> t{};
  for (auto& x : t) x = uniform(rng, 0, 1) == 0 ? Tagging::Plain : Tagging::Notched;
  return t;
}

inline TypeITri random_type_i(Rng& rng, const std::vector<std::array<Slope, 3>>& triples) {
  TypeITri t;
  t.triple = pick(rng, triples);
  std::shuffle(t.triple.begin(), t.triple.end(), rng);
  t.tags = random_tags(rng);
  return t;
}

inline Tangle random_tangle(Rng& rng, std::int64_t h, std::size_t max_curves) {
  Tangle x;
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_curves)));
  while (x.terms().size() < n) {
    std::int64_t w = uniform(rng, -4, 4);
    if (w == 0) w = 1;
    const auto c = random_curve(rng, h);
    if (x.terms().count(c) == 0) x.add(c, w);
  }
  return x;
}

// Up to max_curves curves drawn from one maximal collection, so they are pairwise compatible.
inline QuasiLamination random_lamination(Rng& rng, const std::vector<MaximalCollection>& collections,
                                         std::size_t max_curves) {
  auto curves = pick(rng, collections).curves();
  std::shuffle(curves.begin(), curves.end(), rng);
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_curves)));
  std::map<AllowableCurve, std::int64_t> w;
  for (std::size_t i = 0; i < n && i < curves.size(); ++i) w[curves[i]] = uniform(rng, 1, 5);
  return QuasiLamination(w);
}

}  // namespace sphere_lam::testing
