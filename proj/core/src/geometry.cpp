#include "sphere_lam/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "sphere_lam/checked.hpp"

namespace sphere_lam {

using checked::int128;

int orient(LatticePoint a, LatticePoint b, LatticePoint c) {
  const int128 d = static_cast<int128>(b.x - a.x) * (c.y - a.y) - static_cast<int128>(b.y - a.y) * (c.x - a.x);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

namespace {

bool on_segment(LatticePoint p, LatticePoint q, LatticePoint r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

// Upper half plane (including the positive x-axis) first.
int half(LatticePoint d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

}  // namespace

bool angle_less(LatticePoint d, LatticePoint e) {
  const int hd = half(d), he = half(e);
  if (hd != he) return hd < he;
  const int128 cross = static_cast<int128>(d.x) * e.y - static_cast<int128>(d.y) * e.x;
  return cross > 0;
}

bool cross_properly(const LabeledSegment& s, const LabeledSegment& t) {
  const int o1 = orient(s.p, s.q, t.p);
  const int o2 = orient(s.p, s.q, t.q);
  const int o3 = orient(t.p, t.q, s.p);
  const int o4 = orient(t.p, t.q, s.q);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool has_crossings(const std::vector<LabeledSegment>& segments) {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      const auto& t = segments[j];
      // Cheap bounding-box rejection keeps the quadratic scan tolerable.
      if (std::max(s.p.x, s.q.x) < std::min(t.p.x, t.q.x) || std::max(t.p.x, t.q.x) < std::min(s.p.x, s.q.x) ||
          std::max(s.p.y, s.q.y) < std::min(t.p.y, t.q.y) || std::max(t.p.y, t.q.y) < std::min(s.p.y, s.q.y))
        continue;
      if (cross_properly(s, t)) return true;
      if (orient(s.p, s.q, t.p) == 0 && orient(s.p, s.q, t.q) == 0) {
        const bool same = (s.p == t.p && s.q == t.q) || (s.p == t.q && s.q == t.p);
        if (same) continue;
        // Collinear: overlapping interiors count as a crossing, touching at an endpoint does not.
        const int shared_points = (on_segment(s.p, s.q, t.p) ? 1 : 0) + (on_segment(s.p, s.q, t.q) ? 1 : 0) +
                                  (on_segment(t.p, t.q, s.p) ? 1 : 0) + (on_segment(t.p, t.q, s.q) ? 1 : 0);
        const bool touch_only = shared_points == 2 && (s.p == t.p || s.p == t.q || s.q == t.p || s.q == t.q);
        if (shared_points >= 2 && !touch_only) return true;
      }
    }
  }
  return false;
}

std::vector<TriangleFace> triangular_faces(const std::vector<LabeledSegment>& segments) {
  std::map<std::pair<LatticePoint, LatticePoint>, int> edge_label;
  std::map<LatticePoint, std::vector<LatticePoint>> around;
  for (const auto& s : segments) {
    const auto key = std::minmax(s.p, s.q);
    if (!edge_label.emplace(std::pair{key.first, key.second}, s.label).second) continue;
    around[s.p].push_back(s.q);
    around[s.q].push_back(s.p);
  }
  for (auto& [v, nbrs] : around) {
    std::sort(nbrs.begin(), nbrs.end(),
              [&v = v](LatticePoint x, LatticePoint y) { return angle_less(x - v, y - v); });
  }

  auto next_of = [&around](LatticePoint from, LatticePoint at) {
    const auto& nbrs = around.at(at);
    const auto it = std::find(nbrs.begin(), nbrs.end(), from);
    const std::size_t idx = static_cast<std::size_t>(it - nbrs.begin());
    return nbrs[(idx + nbrs.size() - 1) % nbrs.size()];
  };

  std::vector<TriangleFace> faces;
  std::set<std::pair<LatticePoint, LatticePoint>> visited;
  for (const auto& [v, nbrs] : around) {
    for (const auto& w : nbrs) {
      if (visited.count({v, w})) continue;
      std::vector<LatticePoint> cycle{v};
      LatticePoint from = v, at = w;
      visited.insert({from, at});
      while (at != v && cycle.size() <= 3) {
        cycle.push_back(at);
        const LatticePoint nxt = next_of(from, at);
        from = at;
        at = nxt;
        visited.insert({from, at});
      }
      if (at != v || cycle.size() != 3) continue;
      if (orient(cycle[0], cycle[1], cycle[2]) <= 0) continue;
      TriangleFace f;
      for (int i = 0; i < 3; ++i) {
        f.vertices[i] = cycle[i];
        const auto key = std::minmax(cycle[i], cycle[(i + 1) % 3]);
        f.edge_labels[i] = edge_label.at({key.first, key.second});
      }
      faces.push_back(f);
    }
  }
  return faces;
}

}  // namespace sphere_lam
