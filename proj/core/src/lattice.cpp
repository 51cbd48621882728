#include "sphere_lam/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>

#include "sphere_lam/checked.hpp"

namespace sphere_lam {

using checked::int128;

LatticePoint operator+(LatticePoint p, LatticePoint q) {
  return {checked::add(p.x, q.x), checked::add(p.y, q.y)};
}

LatticePoint operator-(LatticePoint p, LatticePoint q) {
  return {checked::sub(p.x, q.x), checked::sub(p.y, q.y)};
}

LatticePoint operator-(LatticePoint p) { return {checked::neg(p.x), checked::neg(p.y)}; }

LatticePoint operator*(std::int64_t k, LatticePoint p) {
  return {checked::mul(k, p.x), checked::mul(k, p.y)};
}

std::int64_t det(LatticePoint p, LatticePoint q) {
  return checked::narrow(static_cast<int128>(p.x) * q.y - static_cast<int128>(p.y) * q.x);
}

std::int64_t Slope::height() const noexcept { return std::max(a_, b_ < 0 ? -b_ : b_); }

Slope Slope::negated() const { return is_infinite() ? *this : Slope(a_, checked::neg(b_)); }

std::string Slope::to_string() const {
  if (is_infinite()) return "inf";
  return std::to_string(b_) + "/" + std::to_string(a_);
}

std::strong_ordering operator<=>(const Slope& s, const Slope& t) {
  if (s.a_ == t.a_ && s.b_ == t.b_) return std::strong_ordering::equal;
  if (s.is_infinite()) return std::strong_ordering::greater;
  if (t.is_infinite()) return std::strong_ordering::less;
  const int128 lhs = static_cast<int128>(s.b_) * t.a_;
  const int128 rhs = static_cast<int128>(t.b_) * s.a_;
  return lhs <=> rhs;
}

Slope standard_form(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error(ErrorKind::ZeroVector, "slope of the zero vector");
  if (p == 0) return Slope::infinity();
  const std::int64_t g = std::gcd(p, q);  // std::gcd is nonnegative
  p /= g;
  q /= g;
  if (p < 0) {
    p = checked::neg(p);
    q = checked::neg(q);
  }
  return Slope(p, q);
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || begin == s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Slope parse_slope(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "1/0") return Slope::infinity();
  const auto slash = text.find('/');
  const auto num = parse_int(text.substr(0, slash));
  std::optional<std::int64_t> den = std::int64_t{1};
  if (slash != std::string_view::npos) den = parse_int(text.substr(slash + 1));
  if (!num || !den) throw Error(ErrorKind::Parse, "malformed slope '" + std::string(text) + "'");
  return standard_form(*den, *num);
}

std::int64_t farey_distance(const Slope& s, const Slope& t) {
  const std::int64_t d = det(s.direction(), t.direction());
  return d < 0 ? checked::neg(d) : d;
}

bool is_farey1_triple(const Slope& s, const Slope& t, const Slope& u) {
  return farey_distance(s, t) == 1 && farey_distance(t, u) == 1 && farey_distance(s, u) == 1;
}

Slope mediant(const Slope& s, const Slope& t) {
  if (farey_distance(s, t) != 1)
    throw Error(ErrorKind::NotFareyNeighbors, s.to_string() + " and " + t.to_string());
  return slope_of(s.direction() + t.direction());
}

std::vector<Slope> enumerate_slopes(std::int64_t max_height) {
  if (max_height < 1 || max_height > kMaxHeight)
    throw Error(ErrorKind::InvalidParameters, "max_height must lie in [1, " + std::to_string(kMaxHeight) + "]");
  std::vector<Slope> out;
  out.push_back(Slope::infinity());
  for (std::int64_t a = 1; a <= max_height; ++a) {
    for (std::int64_t b = -max_height; b <= max_height; ++b) {
      if (std::gcd(a, b) == 1) out.push_back(standard_form(a, b));
    }
  }
  return out;
}

std::array<std::int64_t, 3> extended_gcd(std::int64_t x, std::int64_t y) {
  std::int64_t old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = checked::sub(old_r, checked::mul(q, r));
    std::swap(old_r, r);
    old_s = checked::sub(old_s, checked::mul(q, s));
    std::swap(old_s, s);
    old_t = checked::sub(old_t, checked::mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {checked::neg(old_r), checked::neg(old_s), checked::neg(old_t)};
  return {old_r, old_s, old_t};
}

std::pair<Slope, Slope> separating_neighbors(const std::vector<Slope>& slopes, const Slope& f) {
  std::optional<Slope> below;  // the largest member strictly below f
  for (const auto& q : slopes) {
    if (q < f && (!below || *below < q)) below = q;
  }

  if (f.is_infinite()) {
    // The lower Farey neighbours of infinity are the integers; take the first one above `below`.
    std::int64_t n = 0;
    if (below) n = checked::add(checked::floor_div(below->b(), below->a()), 1);
    const Slope x = standard_form(1, n);
    return {x, mediant(x, f)};
  }

  // Lower neighbours of f = b/a are the directions (c, d) with a*d - b*c = -1. They
  // approach f from below as c grows, which is the left spine of the Stern-Brocot descent.
  const std::int64_t a = f.a(), b = f.b();
  const auto [g, s, t] = extended_gcd(b, a);  // s*b + t*a = 1
  (void)g;
  std::int64_t c = s, d = checked::neg(t);
  // Normalise to the Stern-Brocot parent, 1 <= c <= a.
  const std::int64_t shift = checked::floor_div(checked::sub(c, 1), a);
  c = checked::sub(c, checked::mul(shift, a));
  d = checked::sub(d, checked::mul(shift, b));
  Slope x = standard_form(c, d);
  while (below && x <= *below) {
    c = checked::add(c, a);
    d = checked::add(d, b);
    x = standard_form(c, d);
  }
  return {x, mediant(x, f)};
}

std::int64_t Matrix2::determinant() const {
  return checked::sub(checked::mul(m00, m11), checked::mul(m01, m10));
}

LatticePoint Matrix2::operator*(LatticePoint p) const {
  return {checked::add(checked::mul(m00, p.x), checked::mul(m01, p.y)),
          checked::add(checked::mul(m10, p.x), checked::mul(m11, p.y))};
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  return {checked::add(checked::mul(m00, o.m00), checked::mul(m01, o.m10)),
          checked::add(checked::mul(m00, o.m01), checked::mul(m01, o.m11)),
          checked::add(checked::mul(m10, o.m00), checked::mul(m11, o.m10)),
          checked::add(checked::mul(m10, o.m01), checked::mul(m11, o.m11))};
}

LatticePoint UnimodularMap::apply(LatticePoint p) const { return linear * p + offset; }

Slope UnimodularMap::apply(const Slope& s) const { return slope_of(linear * s.direction()); }

UnimodularMap triple_to_basis(const Slope& q1, const Slope& q2, const Slope& q3) {
  if (!is_farey1_triple(q1, q2, q3))
    throw Error(ErrorKind::NotFareyTriple, q1.to_string() + ", " + q2.to_string() + ", " + q3.to_string());

  static constexpr std::array<LatticePoint, 3> targets{{{1, 0}, {0, 1}, {1, -1}}};
  static constexpr std::array<std::array<int, 3>, 6> orders{
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
  const LatticePoint u1 = q1.direction(), u2 = q2.direction(), u3 = q3.direction();
  const std::int64_t d = det(u1, u2);  // +-1
  // Inverse of the matrix with columns u1, u2.
  const Matrix2 inv{d * u2.y, -d * u2.x, -d * u1.y, d * u1.x};

  for (const auto& order : orders) {
    for (const std::int64_t s1 : {1, -1}) {
      for (const std::int64_t s2 : {1, -1}) {
        const LatticePoint t1 = s1 * targets[order[0]];
        const LatticePoint t2 = s2 * targets[order[1]];
        const Matrix2 image{t1.x, t2.x, t1.y, t2.y};
        const Matrix2 linear = image * inv;
        if (linear.determinant() != 1) continue;
        const LatticePoint w = linear * u3;
        const LatticePoint t3 = targets[order[2]];
        if (w == t3 || w == -t3) return UnimodularMap{linear, {0, 0}};
      }
    }
  }
  throw Error(ErrorKind::Inconsistent, "no unimodular basis change for a Farey-1 triple");
}

}  // namespace sphere_lam
