#include "walk.hpp"

#include <algorithm>
#include <optional>

#include "sphere_lam/checked.hpp"
#include "sphere_lam/geometry.hpp"
#include "sphere_lam/linalg.hpp"

namespace sphere_lam::walk {

namespace {

constexpr int kSpiralTurns = 6;  // ray crossings kept on each spiral

struct Point {
  Rational x, y;
};

Rational det(LatticePoint u, const Point& p) { return Rational(u.x) * p.y - Rational(u.y) * p.x; }

std::int64_t floor_of(const Rational& q) { return checked::floor_div(q.num(), q.den()); }

Edge make_edge(int family, LatticePoint a, LatticePoint b, Labels labels) {
  if (b < a) std::swap(a, b);
  int label = family;
  if (labels == Labels::Sphere) {
    const Puncture pa = Puncture::from_point(a), pb = Puncture::from_point(b);
    const Puncture origin{};
    if (pa != origin && pb != origin) label += 3;
  }
  return {a, b, label};
}

// The unit segment of family i crossed at point p, where det(u_i, p) = k.
Edge crossed_segment(const Frame& f, int i, std::int64_t k, const Point& p, Labels labels) {
  const LatticePoint u = f.u[i], v = f.v[i];
  // p = alpha * u + k * v with alpha = det(p, v).
  const Rational alpha = p.x * Rational(v.y) - p.y * Rational(v.x);
  const std::int64_t n = floor_of(alpha);
  const LatticePoint a = n * u + k * v;
  return make_edge(i, a, a + u, labels);
}

struct Crossing {
  Rational t;
  Edge edge;
};

// Crossings of p(t) = base + t * delta with the lattice lines for t in (0, 1), or [0, 1) when
// include_start is set.
std::vector<Edge> straight_crossings(const Frame& f, const Point& base, LatticePoint delta, bool include_start,
                                     Labels labels) {
  std::vector<Crossing> out;
  for (int i = 0; i < 3; ++i) {
    const std::int64_t d = sphere_lam::det(f.u[i], delta);
    if (d == 0) continue;
    const Rational f0 = det(f.u[i], base);
    const Rational f1 = f0 + Rational(d);
    const Rational lo = std::min(f0, f1), hi = std::max(f0, f1);
    for (std::int64_t k = floor_of(lo); Rational(k) <= hi; ++k) {
      const Rational t = (Rational(k) - f0) / Rational(d);
      if (t.sign() < 0 || (t.sign() == 0 && !include_start) || !(t < Rational(1))) continue;
      const Point p{base.x + t * Rational(delta.x), base.y + t * Rational(delta.y)};
      out.push_back({t, crossed_segment(f, i, k, p, labels)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
  std::vector<Edge> edges;
  edges.reserve(out.size());
  for (const auto& c : out) edges.push_back(c.edge);
  return edges;
}

struct Rays {
  std::array<LatticePoint, 6> dir;
  std::array<int, 6> family;
};

Rays rays_of(const Frame& f) {
  std::array<std::pair<LatticePoint, int>, 6> r{};
  for (int i = 0; i < 3; ++i) {
    r[2 * i] = {f.u[i], i};
    r[2 * i + 1] = {-f.u[i], i};
  }
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
  Rays out{};
  for (int j = 0; j < 6; ++j) {
    out.dir[j] = r[j].first;
    out.family[j] = r[j].second;
  }
  return out;
}

// Index j such that direction d lies strictly between rays j and j+1 counterclockwise; -1 when d is a ray.
int sector_of(const Rays& rays, LatticePoint d) {
  for (int j = 0; j < 6; ++j) {
    const LatticePoint a = rays.dir[j], b = rays.dir[(j + 1) % 6];
    if (sphere_lam::det(a, d) > 0 && sphere_lam::det(d, b) > 0) return j;
  }
  return -1;
}

int ray_index(const Rays& rays, LatticePoint d) {
  for (int j = 0; j < 6; ++j) {
    if (rays.dir[j] == d) return j;
  }
  return -1;
}

// Ray crossings of a curve spiralling into vertex c from sector (r_j, r_{j+1}), in approach order.
std::vector<Edge> orbit(const Rays& rays, LatticePoint c, int sector, SpiralDir dir, Labels labels) {
  std::vector<Edge> out;
  for (int n = 0; n < kSpiralTurns; ++n) {
    const int j = dir == SpiralDir::CCW ? (sector + 1 + n) % 6 : ((sector - n) % 6 + 6) % 6;
    out.push_back(make_edge(rays.family[j], c, c + rays.dir[j], labels));
  }
  return out;
}

std::vector<Edge> reduce(const std::vector<Edge>& walk) {
  std::vector<Edge> stack;
  for (const auto& e : walk) {
    if (!stack.empty() && stack.back() == e) {
      stack.pop_back();
    } else {
      stack.push_back(e);
    }
  }
  return stack;
}

}  // namespace

Frame frame_of(const std::array<Slope, 3>& triple) {
  Frame f{};
  for (int i = 0; i < 3; ++i) {
    const LatticePoint u = triple[i].direction();
    const auto [g, s, t] = extended_gcd(u.x, u.y);
    if (g != 1) throw Error(ErrorKind::Inconsistent, "non-primitive slope direction");
    f.u[i] = u;
    f.v[i] = {checked::neg(t), s};
  }
  return f;
}

std::vector<Edge> open_walk(const Frame& f, LatticePoint start, LatticePoint delta, SpiralDir at_start,
                            SpiralDir at_end, Labels labels) {
  const Rays rays = rays_of(f);
  const LatticePoint end = start + delta;
  int s0 = sector_of(rays, delta);
  int s1 = sector_of(rays, -delta);
  std::vector<Edge> middle;
  if (s0 < 0) {
    // The curve runs along a lifted arc: use the side to its left at both ends.
    s0 = ray_index(rays, delta);
    const int m = ray_index(rays, -delta);
    if (s0 < 0 || m < 0) throw Error(ErrorKind::Inconsistent, "degenerate direction is not a ray");
    s1 = (m + 5) % 6;
  } else {
    middle = straight_crossings(f, {Rational(start.x), Rational(start.y)}, delta, false, labels);
  }
  std::vector<Edge> walk = orbit(rays, start, s0, at_start, labels);
  std::reverse(walk.begin(), walk.end());
  walk.insert(walk.end(), middle.begin(), middle.end());
  const auto tail = orbit(rays, end, s1, at_end, labels);
  walk.insert(walk.end(), tail.begin(), tail.end());
  return reduce(walk);
}

LatticePoint closed_period(LatticePoint delta, Labels labels) {
  return labels == Labels::Sphere ? 2 * delta : delta;
}

std::vector<Edge> closed_walk(const Frame& f, LatticePoint delta, Labels labels) {
  // Base point (s/2, t/2) with det(delta, (s, t)) = -1 lies on no lattice line of direction delta.
  const auto [g, x, y] = extended_gcd(delta.y, delta.x);  // x*b + y*a = 1
  if (g != 1) throw Error(ErrorKind::Inconsistent, "non-primitive closed curve direction");
  const Point base{Rational(x, 2), Rational(checked::neg(y), 2)};
  return straight_crossings(f, base, closed_period(delta, labels), true, labels);
}

Edge shifted(const Edge& e, LatticePoint by) { return {e.p + by, e.q + by, e.label}; }

std::vector<std::int64_t> score(const std::vector<Edge>& walk, std::optional<LatticePoint> period,
                                std::size_t n_labels) {
  const bool cyclic = period.has_value();
  std::vector<std::int64_t> out(n_labels, 0);
  const std::size_t n = walk.size();
  if (n < (cyclic ? 1 : 3)) return out;
  auto shared = [](const Edge& a, const Edge& b, LatticePoint& common, LatticePoint& a_other,
                   LatticePoint& b_other) {
    if (a.p == b.p || a.p == b.q) {
      common = a.p;
      a_other = a.q;
    } else if (a.q == b.p || a.q == b.q) {
      common = a.q;
      a_other = a.p;
    } else {
      throw Error(ErrorKind::Inconsistent, "consecutive crossings share no vertex");
    }
    b_other = b.p == common ? b.q : b.p;
  };
  const std::size_t first = cyclic ? 0 : 1;
  const std::size_t last = cyclic ? n : n - 1;
  for (std::size_t i = first; i < last; ++i) {
    // Around the wrap the neighbour is the translate by one period.
    const Edge prev = i == 0 ? shifted(walk[n - 1], -*period) : walk[i - 1];
    const Edge& cur = walk[i];
    const Edge next = i + 1 == n ? shifted(walk[0], *period) : walk[i + 1];
    LatticePoint x{}, a{}, y{};
    shared(prev, cur, x, a, y);
    if (next.p != y && next.q != y) continue;
    out[static_cast<std::size_t>(cur.label)] += orient(x, y, a) > 0 ? 1 : -1;
  }
  return out;
}

}  // namespace sphere_lam::walk
