#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sphere_lam/curves.hpp"
#include "sphere_lam/lattice.hpp"

// Crossing sequences of straight curves against the lift of a type-I triangulation. The lift is
// three families of parallel lattice lines; family i consists of the lines det(u_i, p) = k.
namespace sphere_lam::walk {

struct Frame {
  std::array<LatticePoint, 3> u;  // line directions
  std::array<LatticePoint, 3> v;  // det(u_i, v_i) = 1
};

Frame frame_of(const std::array<Slope, 3>& triple);

enum class Labels { Sphere, Torus };

// A crossed unit segment of the lift. On the sphere, family i is arc i when the segment's
// endpoints reduce to a set containing v00 and arc i+3 otherwise; on the torus it is arc i.
struct Edge {
  LatticePoint p;
  LatticePoint q;  // p < q
  int label = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Open curve lifted to the segment start -> start + delta with the given spiral at each end.
std::vector<Edge> open_walk(const Frame& f, LatticePoint start, LatticePoint delta, SpiralDir at_start,
                            SpiralDir at_end, Labels labels);

// One period of the closed curve of the given direction: 2*delta on the sphere, delta on the torus.
std::vector<Edge> closed_walk(const Frame& f, LatticePoint delta, Labels labels);
LatticePoint closed_period(LatticePoint delta, Labels labels);

// Signed quadrilateral crossing count per label. A closed walk passes its period, and the crossing
// after the last one is the first one translated by that period.
std::vector<std::int64_t> score(const std::vector<Edge>& walk, std::optional<LatticePoint> period,
                                std::size_t n_labels);

}  // namespace sphere_lam::walk
