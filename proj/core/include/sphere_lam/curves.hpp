#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "sphere_lam/lattice.hpp"

namespace sphere_lam {

// A puncture v_ij, an element of (Z/2)^2. The order v00 < v01 < v10 < v11 is the index order.
struct Puncture {
  std::uint8_t i = 0;
  std::uint8_t j = 0;

  static Puncture from_index(int index);
  static Puncture from_point(LatticePoint p);
  int index() const noexcept { return 2 * i + j; }
  LatticePoint as_point() const noexcept { return {i, j}; }
  std::string to_string() const;  // "00", "01", ...

  friend auto operator<=>(const Puncture&, const Puncture&) = default;
};

inline constexpr std::array<Puncture, 4> kPunctures{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

Puncture operator+(Puncture v, LatticePoint d);
Puncture parse_puncture(std::string_view text);

enum class Tagging { Plain, Notched };
enum class SpiralDir { CW, CCW };

inline Tagging toggled(Tagging t) { return t == Tagging::Plain ? Tagging::Notched : Tagging::Plain; }
inline SpiralDir reversed(SpiralDir d) { return d == SpiralDir::CW ? SpiralDir::CCW : SpiralDir::CW; }
inline SpiralDir spiral_of(Tagging t) { return t == Tagging::Plain ? SpiralDir::CW : SpiralDir::CCW; }
inline Tagging tag_of(SpiralDir d) { return d == SpiralDir::CW ? Tagging::Plain : Tagging::Notched; }

// Sorted pair of distinct punctures.
using EndpointSet = std::array<Puncture, 2>;

// The two puncture pairs {v_pq, v_(p+a)(q+b)} available to a slope, in puncture order.
std::array<EndpointSet, 2> endpoint_sets(const Slope& s);
EndpointSet endpoint_set_containing(const Slope& s, Puncture v);

struct ArcEnd {
  Puncture v;
  Tagging tag = Tagging::Plain;
  friend auto operator<=>(const ArcEnd&, const ArcEnd&) = default;
};

struct SpiralEnd {
  Puncture v;
  SpiralDir dir = SpiralDir::CW;
  friend auto operator<=>(const SpiralEnd&, const SpiralEnd&) = default;
};

class TaggedArc {
 public:
  // Throws InvalidCurve when the punctures coincide or do not differ by the slope mod 2.
  TaggedArc(const Slope& slope, ArcEnd first, ArcEnd second);

  const Slope& slope() const noexcept { return slope_; }
  const std::array<ArcEnd, 2>& ends() const noexcept { return ends_; }
  EndpointSet endpoints() const noexcept { return {ends_[0].v, ends_[1].v}; }
  std::optional<Tagging> tag_at(Puncture v) const noexcept;
  bool same_underlying(const TaggedArc& other) const noexcept;
  std::string to_string() const;

  friend auto operator<=>(const TaggedArc&, const TaggedArc&) = default;

 private:
  Slope slope_;
  std::array<ArcEnd, 2> ends_;
};

class AllowableCurve {
 public:
  static AllowableCurve closed(const Slope& slope);
  // Throws InvalidCurve under the same conditions as TaggedArc.
  static AllowableCurve open(const Slope& slope, SpiralEnd first, SpiralEnd second);

  bool is_closed() const noexcept { return closed_; }
  const Slope& slope() const noexcept { return slope_; }
  // Only meaningful for open curves.
  const std::array<SpiralEnd, 2>& ends() const noexcept { return ends_; }
  EndpointSet endpoints() const noexcept { return {ends_[0].v, ends_[1].v}; }
  std::optional<SpiralDir> spiral_at(Puncture v) const noexcept;
  std::string to_string() const;

  friend auto operator<=>(const AllowableCurve&, const AllowableCurve&) = default;

 private:
  AllowableCurve(bool closed, const Slope& slope, std::array<SpiralEnd, 2> ends)
      : closed_(closed), slope_(slope), ends_(ends) {}

  bool closed_ = false;
  Slope slope_;
  std::array<SpiralEnd, 2> ends_{};
};

AllowableCurve kappa(const TaggedArc& arc);
TaggedArc kappa_inv(const AllowableCurve& curve);

bool arcs_compatible(const TaggedArc& alpha, const TaggedArc& gamma);
bool curves_compatible(const AllowableCurve& lambda, const AllowableCurve& mu);

enum class PairClass { Coinciding, Farey0, Farey1, Farey2, Incompatible, Equal };
std::string_view to_string(PairClass c) noexcept;
PairClass classify_pair(const TaggedArc& alpha, const TaggedArc& gamma);

}  // namespace sphere_lam
