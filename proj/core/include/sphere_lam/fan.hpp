#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphere_lam/linalg.hpp"
#include "sphere_lam/shear.hpp"
#include "sphere_lam/triangulation.hpp"

namespace sphere_lam {

enum class CollectionKind { I, II, III, IV, V, VI, VII };
std::string_view to_string(CollectionKind kind) noexcept;
CollectionKind parse_collection_kind(std::string_view text);
CollectionKind collection_kind(TriKind kind) noexcept;

// A closed curve of the given slope plus, for each of its two endpoint sets, the images under
// kappa of a coinciding pair agreeing at the distinguished vertex. v lies in the endpoint set
// containing v00 and v_prime in the other one.
struct TypeVIIParams {
  Slope slope;
  Puncture v{};
  Puncture v_prime{};
  Tagging tag_v = Tagging::Plain;
  Tagging tag_v_prime = Tagging::Plain;

  friend bool operator==(const TypeVIIParams&, const TypeVIIParams&) = default;
};

class MaximalCollection {
 public:
  static MaximalCollection of_triangulation(const TaggedTriangulation& t);
  // Throws InvalidParameters when v or v_prime is not in the required endpoint set.
  static MaximalCollection type_vii(const TypeVIIParams& params);

  CollectionKind kind() const noexcept { return kind_; }
  // Sorted; six curves, or five with the closed one first.
  const std::vector<AllowableCurve>& curves() const noexcept { return curves_; }
  // Present for types I to VI.
  const std::optional<TaggedTriangulation>& triangulation() const noexcept { return triangulation_; }
  const std::optional<TypeVIIParams>& vii_params() const noexcept { return vii_; }
  std::int64_t max_height() const noexcept;

  friend bool operator==(const MaximalCollection& x, const MaximalCollection& y) { return x.curves_ == y.curves_; }

 private:
  MaximalCollection() = default;

  CollectionKind kind_ = CollectionKind::I;
  std::vector<AllowableCurve> curves_;
  std::optional<TaggedTriangulation> triangulation_;
  std::optional<TypeVIIParams> vii_;
};

// kappa of every triangulation with slopes of height at most max_height, then all type-VII
// collections of those slopes.
std::vector<MaximalCollection> maximal_collections(std::int64_t max_height);

// Every type-VII collection of one slope: 2 * 2 * 2 * 2 choices.
std::vector<MaximalCollection> type_vii_collections(const Slope& s);

struct Cone {
  std::vector<ShearVector> generators;  // in the order of source.curves()
  std::size_t dim = 0;
  MaximalCollection source;

  CollectionKind kind() const noexcept { return source.kind(); }
  // Sorted primitive generators.
  std::vector<ShearVector> canonical() const;
};

// Throws RankDeficient when the generators do not have the rank expected for the kind.
Cone cone_of(const MaximalCollection& c);

// Nonnegative coefficients of v over the generators of c, or nullopt when v is not in c.
std::optional<RationalVector> membership(const RationalVector& v, const Cone& c);
std::optional<RationalVector> membership(const ShearVector& v, const Cone& c);

// The maximal cones up to a height, each prepared for repeated membership queries.
class FanIndex {
 public:
  explicit FanIndex(std::int64_t max_height);

  std::int64_t max_height() const noexcept { return max_height_; }
  const std::vector<Cone>& cones() const noexcept { return cones_; }

  // Indices of the cones containing v, with the coefficients of v in each.
  std::vector<std::pair<std::size_t, RationalVector>> containing(const ShearVector& v) const;

  // Throws BoundExhausted when no cone contains v and Inconsistent when the cones containing it
  // disagree on the lamination or give fractional weights.
  QuasiLamination locate(const ShearVector& v) const;

 private:
  struct Prepared {
    std::array<std::size_t, 6> rows{};  // independent rows of the generator matrix
    std::size_t n_rows = 0;
    IntMatrix adjugate;                  // of the square submatrix on those rows
    std::int64_t det = 0;
  };

  std::int64_t max_height_;
  std::vector<Cone> cones_;
  std::vector<Prepared> prepared_;
};

QuasiLamination locate(const ShearVector& v, std::int64_t max_height);
std::size_t count_containing_cones(const ShearVector& v, std::int64_t max_height);

// Neighbouring maximal collections: the six flips for types I to VI, and for type VII the four
// collections obtained by reversing both spirals of one open curve.
std::vector<MaximalCollection> flip_adjacency(const MaximalCollection& c);

// Whether the two cones meet exactly in the cone over their shared generators, which is then a
// face of both. Decided by an exact feasibility test.
bool cones_meet_in_common_face(const Cone& x, const Cone& y);

struct FanCheckReport {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
  bool ok() const noexcept { return failures == 0; }
};

// Samples random pairs of cones (seeded) and checks each with cones_meet_in_common_face.
FanCheckReport fan_check(const std::vector<Cone>& cones, std::size_t trials, std::uint64_t seed);

// Images under r (first three coordinates) of the extreme rays of the cone meets U, primitive and sorted.
std::vector<TorusVector> induced_rays(const Cone& c);

struct InducedCheckReport {
  std::size_t triangulations = 0;
  std::size_t contained = 0;   // torus cone inside r(C meet U)
  std::size_t equal_rays = 0;  // the two cones have the same rays
  bool ok() const noexcept { return contained == triangulations; }
};

// For every type-I triangulation with one tag at all four punctures and slopes of height at most
// max_height, compares r(C meet U) with the torus cone of the same triple: its arcs spiral in kappa
// of that tag and are measured against the base torus triangulation.
InducedCheckReport induced_torus_check(std::int64_t max_height);

// ---- the plane P and the subspace U --------------------------------------------------------

bool in_plane_p(const ShearVector& v);
bool in_subspace_u(const ShearVector& v);
// gcd of the absolute values of the entries.
std::int64_t content(const ShearVector& v);

// ---- lists of vectors -----------------------------------------------------------------------

// Shear vectors of all open curves whose slope reduces by z_source to height at most max_height, sorted.
std::vector<ShearVector> g_vectors(std::int64_t max_height);

enum class UniversalForm { Thm12, Thm81 };
UniversalForm parse_universal_form(std::string_view text);

// The four families over the slopes b/a, each permuted by its group, as emitted (duplicates kept).
std::vector<ShearVector> universal_coeffs_raw(std::int64_t max_height, UniversalForm form);
// Sorted and deduplicated.
std::vector<ShearVector> universal_coeffs(std::int64_t max_height, UniversalForm form);

// The four vectors listed for a slope of (0, infinity], in item order.
std::array<ShearVector, 4> thm12_items(const Slope& s);

}  // namespace sphere_lam
