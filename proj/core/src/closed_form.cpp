#include <optional>

#include "sphere_lam/checked.hpp"
#include "sphere_lam/shear.hpp"

namespace sphere_lam {

namespace {

std::int64_t fl(std::int64_t n) { return checked::floor_div(n, 2); }

// Curves of slope b/a >= 0 with an end at v00, by spiral at v00 and at v_ab.
ShearVector ccw_ccw(std::int64_t a, std::int64_t b) {
  return {-fl(b - 1), fl(a) + 1, fl(b - a), -fl(b), fl(a + 1), fl(b - a - 1)};
}
ShearVector ccw_cw(std::int64_t a, std::int64_t b) {
  return {-fl(b), fl(a + 1), fl(b - a + 1), -fl(b + 1), fl(a), fl(b - a)};
}
ShearVector cw_ccw(std::int64_t a, std::int64_t b) {
  return {-fl(b + 1), fl(a), fl(b - a), -fl(b), fl(a + 1), fl(b - a + 1)};
}
ShearVector cw_cw(std::int64_t a, std::int64_t b) {
  return {-fl(b) - 1, fl(a - 1), fl(b - a + 1), -fl(b + 1), fl(a), fl(b - a) + 1};
}
ShearVector closed_curve(std::int64_t a, std::int64_t b) { return {-b, a, b - a, -b, a, b - a}; }

// R(x, y) = (x + y, -x) and its square carry the nonnegative quadrant onto the two negative
// ranges; both permute the three line families cyclically.
LatticePoint rotate_inverse(LatticePoint p, int k) {
  for (int i = 0; i < k; ++i) p = {checked::neg(p.y), checked::add(p.x, p.y)};
  return p;
}

const CoordPerm& rotation_perm(int k) {
  static const std::array<CoordPerm, 3> perms{CoordPerm::identity(), CoordPerm::from_cycles("(132)(465)"),
                                              CoordPerm::from_cycles("(123)(456)")};
  return perms[k];
}

const CoordPerm& translation_perm(Puncture shift) {
  static const std::array<CoordPerm, 4> perms{CoordPerm::identity(), CoordPerm::from_cycles("(14)(36)"),
                                              CoordPerm::from_cycles("(25)(36)"), CoordPerm::from_cycles("(14)(25)")};
  return perms[shift.index()];
}

bool nonnegative(const Slope& s) { return s.b() >= 0; }

std::optional<ShearVector> base_case(const Slope& s, SpiralDir at_origin, SpiralDir at_far) {
  const std::int64_t a = s.a(), b = s.b();
  if (at_origin == SpiralDir::CCW && at_far == SpiralDir::CCW) {
    if (b > 0) return ccw_ccw(a, b);
  } else if (at_origin == SpiralDir::CCW) {
    return ccw_cw(a, b);
  } else if (at_far == SpiralDir::CCW) {
    return cw_ccw(a, b);
  } else if (a > 0) {
    return cw_cw(a, b);
  }
  return std::nullopt;
}

}  // namespace

std::pair<Slope, int> z_source(const Slope& s) {
  for (int k = 0; k < 3; ++k) {
    const Slope src = slope_of(rotate_inverse(s.direction(), k));
    if (src.b() > 0) return {src, k};
  }
  throw Error(ErrorKind::Inconsistent, "no rotation reaches (0, infinity] from " + s.to_string());
}

std::int64_t z_height(const Slope& s) { return z_source(s).first.height(); }

ShearVector shear_closed_form(const AllowableCurve& curve) {
  for (int k = 0; k < 3; ++k) {
    const Slope src = slope_of(rotate_inverse(curve.slope().direction(), k));
    if (!nonnegative(src)) continue;
    if (curve.is_closed()) return apply_perm(rotation_perm(k), closed_curve(src.a(), src.b()));

    const auto& e = curve.ends();
    for (int first = 0; first < 2; ++first) {
      const SpiralEnd& near = e[first];
      const SpiralEnd& far = e[1 - first];
      const Puncture shift = Puncture::from_point(rotate_inverse(near.v.as_point(), k));
      const auto base = base_case(src, near.dir, far.dir);
      if (!base) continue;
      return apply_perm(rotation_perm(k), apply_perm(translation_perm(shift), *base));
    }
  }
  throw Error(ErrorKind::Inconsistent, "no base case covers " + curve.to_string());
}

}  // namespace sphere_lam
