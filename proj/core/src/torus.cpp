#include "sphere_lam/shear.hpp"
#include "walk.hpp"

namespace sphere_lam {

namespace {

TorusVector to_torus(const std::vector<std::int64_t>& s) { return {s[0], s[1], s[2]}; }

}  // namespace

TorusVector torus_shear(const Slope& s) { return torus_shear_wrt(s, TypeITri::base().triple); }

TorusVector torus_shear_wrt(const Slope& s, const std::array<Slope, 3>& triple) {
  const auto frame = walk::frame_of(triple);
  const LatticePoint d = s.direction();
  return to_torus(walk::score(walk::closed_walk(frame, d, walk::Labels::Torus), walk::closed_period(d, walk::Labels::Torus), 3));
}

TorusVector torus_arc_shear(const Slope& s, SpiralDir dir, const std::array<Slope, 3>& triple) {
  const auto frame = walk::frame_of(triple);
  const auto w = walk::open_walk(frame, {0, 0}, s.direction(), dir, dir, walk::Labels::Torus);
  return to_torus(walk::score(w, std::nullopt, 3));
}

bool sphere_torus_check(const Slope& s, const TypeITri& t) {
  if (!t.all_plain()) throw Error(ErrorKind::InvalidParameters, "the projection identity needs a plain triangulation");
  const ShearVector sphere = shear_wrt(AllowableCurve::closed(s), t);
  const TorusVector torus = torus_shear_wrt(s, t.triple);
  for (int i = 0; i < 3; ++i) {
    if (sphere[i] != torus[i] || sphere[i + 3] != torus[i]) return false;
  }
  return true;
}

}  // namespace sphere_lam
