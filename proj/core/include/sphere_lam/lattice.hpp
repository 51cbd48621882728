#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sphere_lam/error.hpp"

namespace sphere_lam {

// Enumeration heights above this are refused so that 64-bit checked arithmetic always suffices.
inline constexpr std::int64_t kMaxHeight = 64;

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint operator+(LatticePoint p, LatticePoint q);
LatticePoint operator-(LatticePoint p, LatticePoint q);
LatticePoint operator-(LatticePoint p);
LatticePoint operator*(std::int64_t k, LatticePoint p);
std::int64_t det(LatticePoint p, LatticePoint q);

// A slope b/a in standard form: a >= 0, gcd(a, |b|) = 1, and infinity is stored as a = 0, b = 1.
// Comparison operators follow the numeric order of the slope with infinity as the maximum.
class Slope {
 public:
  Slope() = default;  // slope 0

  static Slope infinity() { return Slope(0, 1); }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  bool is_infinite() const noexcept { return a_ == 0; }
  LatticePoint direction() const noexcept { return {a_, b_}; }
  std::int64_t height() const noexcept;
  Slope negated() const;

  // "b/a", or "inf" for the vertical slope.
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& s, const Slope& t);

 private:
  friend Slope standard_form(std::int64_t p, std::int64_t q);
  constexpr Slope(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}

  std::int64_t a_ = 1;
  std::int64_t b_ = 0;
};

// Standard form of the slope q/p, i.e. of the direction (p, q).
Slope standard_form(std::int64_t p, std::int64_t q);
inline Slope slope_of(LatticePoint d) { return standard_form(d.x, d.y); }

// Accepts "b/a", an integer "b", or "inf".
Slope parse_slope(std::string_view text);

std::int64_t farey_distance(const Slope& s, const Slope& t);
bool is_farey1_triple(const Slope& s, const Slope& t, const Slope& u);
Slope mediant(const Slope& s, const Slope& t);

// Every standard-form slope with a <= max_height and |b| <= max_height, sorted by (a, b).
std::vector<Slope> enumerate_slopes(std::int64_t max_height);

// For f in slopes, returns (x, y) such that (x, y, f) is a Farey-1 triple, x < y < f and no
// member q of slopes satisfies x <= q < f.
std::pair<Slope, Slope> separating_neighbors(const std::vector<Slope>& slopes, const Slope& f);

struct Matrix2 {
  std::int64_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  std::int64_t determinant() const;
  LatticePoint operator*(LatticePoint p) const;
  Matrix2 operator*(const Matrix2& other) const;
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

// p -> linear * p + offset, where only the parity of the offset is meaningful.
struct UnimodularMap {
  Matrix2 linear;
  LatticePoint offset;

  LatticePoint apply(LatticePoint p) const;
  Slope apply(const Slope& s) const;
  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

// An orientation-preserving lattice map carrying the three slope directions of the triple onto the
// directions of the slopes 0, infinity and -1, in some order.
UnimodularMap triple_to_basis(const Slope& q1, const Slope& q2, const Slope& q3);

// Extended Euclid: returns (g, s, t) with s*x + t*y = g = gcd(x, y) >= 0.
std::array<std::int64_t, 3> extended_gcd(std::int64_t x, std::int64_t y);

}  // namespace sphere_lam
