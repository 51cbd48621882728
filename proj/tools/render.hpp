#pragma once

#include <string>
#include <vector>

#include "sphere_lam/linalg.hpp"
#include "sphere_lam/shear.hpp"

namespace sphere_lam::render {

struct Window {
  std::int64_t x0 = 0, y0 = 0, x1 = 2, y1 = 2;
};

struct RenderSpec {
  std::vector<AllowableCurve> curves;
  TypeITri triangulation;
  Window window;
  int scale = 80;  // pixels per lattice unit
};

// One lift of a curve as a segment of the plane. An open curve runs from a lift of its first
// endpoint to that point plus the slope direction; a closed curve runs over one torus period
// (b, a) starting at its base point. Both start points are moved into the window by even
// translations, which are deck transformations.
struct LiftedSegment {
  Rational x0, y0, x1, y1;
};
LiftedSegment lift(const AllowableCurve& c, const Window& w);

// Throws InvalidParameters for an empty window.
std::string render_svg(const RenderSpec& spec);

}  // namespace sphere_lam::render
