#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sphere_lam/curves.hpp"

namespace sphere_lam {

inline constexpr std::size_t kArcsPerTriangulation = 6;

class TaggedTriangulation {
 public:
  // Throws InvalidCurve unless the arcs are six distinct, pairwise compatible tagged arcs.
  explicit TaggedTriangulation(std::vector<TaggedArc> arcs);

  const std::vector<TaggedArc>& arcs() const noexcept { return arcs_; }
  const TaggedArc& operator[](std::size_t k) const { return arcs_.at(k); }

  // Number of arc ends at each puncture, indexed by puncture index.
  std::array<int, 4> degrees() const;
  // The degrees in increasing order, e.g. (2,2,3,5).
  std::array<int, 4> degree_sequence() const;
  bool all_plain() const noexcept;
  std::int64_t max_height() const noexcept;
  // The arcs in sorted order; equal for triangulations that differ only by arc order.
  std::vector<TaggedArc> canonical_arcs() const;

  friend bool operator==(const TaggedTriangulation&, const TaggedTriangulation&) = default;

 private:
  std::vector<TaggedArc> arcs_;
};

// The triangulation with arcs of slopes 0, infinity and -1, all tagged plain. Arc k and arc k+3
// share a slope; arc k has the endpoint set containing v00.
TaggedTriangulation base_triangulation();

enum class TriKind { I, II, III, IV, V, VI };
std::string_view to_string(TriKind kind) noexcept;
TriKind parse_tri_kind(std::string_view text);

// Parameters of one row of the taxonomy of tagged triangulations.
//   I, VI:     slopes is a Farey-1 triple.
//   II to V:   slopes is a Farey-2 pair (p, q); v is an endpoint of the p arc.
//   III, IV:   v_prime is a puncture outside the p arc.
// tags is indexed by puncture; entries at punctures whose tag the row does not choose are Plain.
struct TriType {
  TriKind kind = TriKind::I;
  std::vector<Slope> slopes;
  Puncture v{};
  Puncture v_prime{};
  std::array<Tagging, 4> tags{};

  friend bool operator==(const TriType&, const TriType&) = default;
};

TriType classify(const TaggedTriangulation& t);
// Throws InvalidParameters when spec violates the constraints of its row.
TaggedTriangulation build_type(const TriType& spec);

// Unordered Farey-1 triples and Farey-2 pairs among enumerate_slopes(max_height), each sorted.
std::vector<std::array<Slope, 3>> farey1_triples(std::int64_t max_height);
std::vector<std::pair<Slope, Slope>> farey2_pairs(std::int64_t max_height);

// Every admissible parameter set with slopes of height at most max_height, each once.
std::vector<TriType> enumerate_types(std::int64_t max_height);
std::vector<TaggedTriangulation> enumerate_triangulations(std::int64_t max_height);

// Replaces arc k by the unique other arc completing the remaining five. The new arc keeps index k.
TaggedTriangulation flip(const TaggedTriangulation& t, std::size_t k);

using ExchangeMatrix = std::array<std::array<std::int64_t, 6>, 6>;

// Signed adjacency matrix, computed from the triangles of the lifted arcs in the plane.
// Throws NotAllPlain when some arc end is notched.
ExchangeMatrix signed_adjacency(const TaggedTriangulation& t);
ExchangeMatrix mutate(const ExchangeMatrix& b, std::size_t k);
bool is_skew_symmetric(const ExchangeMatrix& b);

}  // namespace sphere_lam
