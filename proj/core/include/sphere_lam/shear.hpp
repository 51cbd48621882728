#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sphere_lam/curves.hpp"
#include "sphere_lam/lattice.hpp"

namespace sphere_lam {

// Indexed by the arcs gamma_1..gamma_6 of a type-I triangulation, stored 0-based.
using ShearVector = std::array<std::int64_t, 6>;
using TorusVector = std::array<std::int64_t, 3>;

std::string to_string(const ShearVector& v);

// ---- words ----------------------------------------------------------------------------------

struct Letter {
  char kind = 't';      // 'r' (right side) or 't' (top side)
  int decoration = 1;   // r: 2 or 5, t: 1 or 4
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

std::string to_string(const Word& w);  // "t4 r5 t1"
Word parse_word(std::string_view text);

// Grid word of the segment (0,0) -> (a,b) for 0 < b/a < infinity.
Word word_prime(std::int64_t a, std::int64_t b);

// Word of a closed curve of positive finite slope, or of an open one with a CCW spiral at v00.
// Throws UnsupportedBaseCase otherwise.
Word word_of_curve(const AllowableCurve& curve);

// ---- three shear computations with respect to the base triangulation ----------------------

ShearVector shear_via_word(const AllowableCurve& curve);
ShearVector shear_closed_form(const AllowableCurve& curve);
ShearVector shear_oracle(const AllowableCurve& curve);

enum class ShearMethod { Formula, Word, Oracle };
ShearMethod parse_shear_method(std::string_view text);
ShearVector shear(const AllowableCurve& curve, ShearMethod method = ShearMethod::Formula);

// ---- coordinate permutations ----------------------------------------------------------------

// image[i] is where coordinate i is sent: apply_perm(p, x)[p.image[i]] = x[i].
struct CoordPerm {
  std::array<int, 6> image{0, 1, 2, 3, 4, 5};

  static CoordPerm identity() { return {}; }
  // Cycle notation on 1..6, e.g. "(14)(25)(36)" or "(123)(456)"; "()" is the identity.
  static CoordPerm from_cycles(std::string_view cycles);
  std::string to_string() const;

  friend bool operator==(const CoordPerm&, const CoordPerm&) = default;
  friend auto operator<=>(const CoordPerm&, const CoordPerm&) = default;
};

ShearVector apply_perm(const CoordPerm& p, const ShearVector& v);
// (p * q) applies q first.
CoordPerm compose(const CoordPerm& p, const CoordPerm& q);
CoordPerm inverse(const CoordPerm& p);

using PermGroup = std::vector<CoordPerm>;
PermGroup generate_group(const std::vector<CoordPerm>& generators);
PermGroup product_set(const PermGroup& left, const PermGroup& right);  // {l * r}

const PermGroup& group_x();         // <(14)(25)(36)>
const PermGroup& group_y();         // <(14)(36), (25)(36)>
const PermGroup& group_z();         // <(123)(456)>
const PermGroup& group_zx();
const PermGroup& group_zy();
const PermGroup& group_gamma24();   // <(14), (25), (36), (123)(456)>

std::set<ShearVector> orbit(const ShearVector& v, const PermGroup& group);

// Slopes are reduced to the range (0, infinity] by the linear maps behind the cyclic group Z.
// Returns the reduced slope and k in {0,1,2} with slope = R^k(source), R(x,y) = (x+y,-x).
std::pair<Slope, int> z_source(const Slope& s);
std::int64_t z_height(const Slope& s);

// ---- type-I triangulations ------------------------------------------------------------------

// A Farey-1 triple with a tagging per puncture. Arc i (0-based) has slope triple[i] and the
// endpoint set containing v00; arc i+3 has the same slope and the other endpoint set.
struct TypeITri {
  std::array<Slope, 3> triple{standard_form(1, 0), Slope::infinity(), standard_form(1, -1)};
  std::array<Tagging, 4> tags{};

  // Throws NotFareyTriple.
  void validate() const;
  bool all_plain() const noexcept;
  static TypeITri base() { return {}; }

  friend bool operator==(const TypeITri&, const TypeITri&) = default;
};

// Spiral directions reversed at the notched punctures of t.
AllowableCurve reverse_at_notched(const AllowableCurve& curve, const std::array<Tagging, 4>& tags);

ShearVector shear_wrt(const AllowableCurve& curve, const TypeITri& t);
// Geometric computation directly in the lattice frame of t, without any change of basis.
ShearVector shear_oracle_wrt(const AllowableCurve& curve, const TypeITri& t);

// ---- weighted collections -------------------------------------------------------------------

class Tangle {
 public:
  Tangle() = default;
  // Weights of equal curves add; zero weights are dropped.
  void add(const AllowableCurve& curve, std::int64_t weight);
  const std::map<AllowableCurve, std::int64_t>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::vector<Slope> support_slopes() const;

  friend bool operator==(const Tangle&, const Tangle&) = default;

 private:
  std::map<AllowableCurve, std::int64_t> terms_;
};

class QuasiLamination {
 public:
  QuasiLamination() = default;
  // Throws InvalidParameters for nonpositive weights and InvalidCurve for incompatible curves.
  explicit QuasiLamination(std::map<AllowableCurve, std::int64_t> weights);
  const std::map<AllowableCurve, std::int64_t>& weights() const noexcept { return weights_; }
  bool empty() const noexcept { return weights_.empty(); }

  friend bool operator==(const QuasiLamination&, const QuasiLamination&) = default;

 private:
  std::map<AllowableCurve, std::int64_t> weights_;
};

ShearVector shear_lamination(const QuasiLamination& l, const TypeITri& t = {});
ShearVector tangle_shear(const Tangle& x, const TypeITri& t = {});

// ---- the once-punctured torus ---------------------------------------------------------------

// Shear of the closed curve of slope s on the torus, against the plain triangulation with the
// slopes of triple (default: 0, infinity, -1).
TorusVector torus_shear(const Slope& s);
TorusVector torus_shear_wrt(const Slope& s, const std::array<Slope, 3>& triple);
// Shear on the torus of the arc of slope s with both ends spiralling in direction dir.
TorusVector torus_arc_shear(const Slope& s, SpiralDir dir, const std::array<Slope, 3>& triple);

// For a plain t: each sphere coordinate pair of Closed(s) equals the matching torus coordinate.
bool sphere_torus_check(const Slope& s, const TypeITri& t);

// ---- null tangles ---------------------------------------------------------------------------

// First type-I triangulation, in a fixed candidate order, against which the tangle has nonzero shear.
// Returns nullopt for an empty tangle; throws BoundExhausted if no candidate separates a nonempty one.
std::optional<TypeITri> find_witness(const Tangle& x, std::int64_t max_height);

}  // namespace sphere_lam
