#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sphere_lam/lattice.hpp"

namespace sphere_lam {

// Sign of the turn a -> b -> c: +1 counterclockwise, -1 clockwise, 0 collinear.
int orient(LatticePoint a, LatticePoint b, LatticePoint c);

// Lattice segment carrying an integer label (an arc index, for instance).
struct LabeledSegment {
  LatticePoint p;
  LatticePoint q;
  int label = 0;
};

// True when the open segments meet in a single point that is interior to both.
bool cross_properly(const LabeledSegment& s, const LabeledSegment& t);

// Whether any two segments cross properly or overlap along a positive length.
bool has_crossings(const std::vector<LabeledSegment>& segments);

struct TriangleFace {
  std::array<LatticePoint, 3> vertices;  // counterclockwise
  std::array<int, 3> edge_labels;        // edge i joins vertices i and i+1
};

// Bounded triangular faces of the planar subdivision formed by non-crossing segments.
// Segments sharing both endpoints are merged; the surviving label is the first one seen.
std::vector<TriangleFace> triangular_faces(const std::vector<LabeledSegment>& segments);

// Compares the directions of two nonzero vectors by angle in [0, 2pi), exactly.
bool angle_less(LatticePoint d, LatticePoint e);

}  // namespace sphere_lam
