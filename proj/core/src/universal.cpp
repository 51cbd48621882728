#include <algorithm>
#include <set>

#include "sphere_lam/checked.hpp"
#include "sphere_lam/fan.hpp"

namespace sphere_lam {

namespace {

std::int64_t fl(std::int64_t n) { return checked::floor_div(n, 2); }

ShearVector item1(std::int64_t a, std::int64_t b) {
  return {-fl(b - 1), fl(a) + 1, fl(b - a), -fl(b), fl(a + 1), fl(b - a - 1)};
}
ShearVector item2(std::int64_t a, std::int64_t b) {
  return {-fl(a) - 1, fl(b - 1), fl(a - b + 1), -fl(a + 1), fl(b), fl(a - b) + 1};
}
ShearVector item3(std::int64_t a, std::int64_t b) {
  return {-fl(b), fl(a + 1), fl(b - a + 1), -fl(b + 1), fl(a), fl(b - a)};
}
ShearVector item4(std::int64_t a, std::int64_t b) { return {-b, a, b - a, -b, a, b - a}; }
// Second row of the irredundant table.
ShearVector row2(std::int64_t a, std::int64_t b) {
  return {-fl(b) - 1, fl(a - 1), fl(b - a + 1), -fl(b + 1), fl(a), fl(b - a) + 1};
}

// Slopes with 0 < b/a <= infinity, or 0 <= b/a < infinity, of height at most h.
std::vector<Slope> positive_slopes(std::int64_t h, bool with_zero, bool with_infinity) {
  std::vector<Slope> out;
  for (const auto& s : enumerate_slopes(h)) {
    if (s.b() < 0) continue;
    if (s.b() == 0 && !with_zero) continue;
    if (s.is_infinite() && !with_infinity) continue;
    out.push_back(s);
  }
  return out;
}

void emit(std::vector<ShearVector>& out, const ShearVector& v, const PermGroup& group) {
  for (const auto& p : group) out.push_back(apply_perm(p, v));
}

}  // namespace

std::array<ShearVector, 4> thm12_items(const Slope& s) {
  if (s.b() <= 0) throw Error(ErrorKind::InvalidParameters, "items are listed for slopes in (0, infinity]");
  const std::int64_t a = s.a(), b = s.b();
  return {item1(a, b), item2(a, b), item3(a, b), item4(a, b)};
}

UniversalForm parse_universal_form(std::string_view text) {
  if (text == "thm12") return UniversalForm::Thm12;
  if (text == "thm81") return UniversalForm::Thm81;
  throw Error(ErrorKind::Parse, "unknown form '" + std::string(text) + "', expected thm12 or thm81");
}

std::vector<ShearVector> universal_coeffs_raw(std::int64_t max_height, UniversalForm form) {
  std::vector<ShearVector> out;
  if (form == UniversalForm::Thm12) {
    for (const auto& s : positive_slopes(max_height, false, true)) {
      for (const auto& v : thm12_items(s)) emit(out, v, group_gamma24());
    }
    return out;
  }
  for (const auto& s : positive_slopes(max_height, false, true)) emit(out, item1(s.a(), s.b()), group_zx());
  for (const auto& s : positive_slopes(max_height, true, false)) emit(out, row2(s.a(), s.b()), group_zx());
  for (const auto& s : positive_slopes(max_height, false, true)) emit(out, item3(s.a(), s.b()), group_zy());
  for (const auto& s : positive_slopes(max_height, false, true)) emit(out, item4(s.a(), s.b()), group_z());
  return out;
}

std::vector<ShearVector> universal_coeffs(std::int64_t max_height, UniversalForm form) {
  auto out = universal_coeffs_raw(max_height, form);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ShearVector> g_vectors(std::int64_t max_height) {
  if (max_height < 1 || max_height > kMaxHeight / 2) {
    throw Error(ErrorKind::InvalidParameters, "max_height must lie in [1, " + std::to_string(kMaxHeight / 2) + "]");
  }
  // The rotations at most double the height of the reduced slope.
  std::set<ShearVector> out;
  for (const auto& s : enumerate_slopes(2 * max_height)) {
    if (z_height(s) > max_height) continue;
    for (const auto& e : endpoint_sets(s)) {
      for (const SpiralDir d0 : {SpiralDir::CW, SpiralDir::CCW}) {
        for (const SpiralDir d1 : {SpiralDir::CW, SpiralDir::CCW}) {
          out.insert(shear_closed_form(AllowableCurve::open(s, {e[0], d0}, {e[1], d1})));
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace sphere_lam
