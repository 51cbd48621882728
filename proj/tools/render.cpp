#include "render.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

#include "sphere_lam/checked.hpp"

namespace sphere_lam::render {

namespace {

// Smallest value congruent to v mod 2 that is at least lo.
std::int64_t lift_parity(std::int64_t v, std::int64_t lo) {
  return v + 2 * checked::floor_div(lo - v + 1, 2);
}

Rational into_window(Rational v, std::int64_t lo) {
  // v = n/d; shift by the even integer that puts v in [lo, lo + 2).
  const std::int64_t shift = 2 * checked::floor_div(lo * v.den() - v.num() + 2 * v.den() - 1, 2 * v.den());
  return v + Rational(shift);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

double to_double(const Rational& r) { return static_cast<double>(r.num()) / static_cast<double>(r.den()); }

struct Canvas {
  const Window& w;
  int scale;
  static constexpr int kMargin = 20;

  double xd(const Rational& v) const { return kMargin + scale * (to_double(v) - static_cast<double>(w.x0)); }
  double yd(const Rational& v) const { return kMargin + scale * (static_cast<double>(w.y1) - to_double(v)); }
  std::string x(const Rational& v) const { return fmt(xd(v)); }
  std::string y(const Rational& v) const { return fmt(yd(v)); }
  int width() const { return 2 * kMargin + scale * static_cast<int>(w.x1 - w.x0); }
  int height() const { return 2 * kMargin + scale * static_cast<int>(w.y1 - w.y0); }
};

// Endpoints of the line det(u, p) = k clipped to the window, if it meets the window in a segment.
std::optional<LiftedSegment> clip_line(LatticePoint u, std::int64_t k, const Window& w) {
  // det(u, p) = u.x p.y - u.y p.x.
  std::vector<std::pair<Rational, Rational>> pts;
  const auto add = [&](Rational px, Rational py) {
    if (px < Rational(w.x0) || px > Rational(w.x1) || py < Rational(w.y0) || py > Rational(w.y1)) return;
    if (std::find(pts.begin(), pts.end(), std::make_pair(px, py)) == pts.end()) pts.emplace_back(px, py);
  };
  if (u.x != 0) {
    for (const std::int64_t px : {w.x0, w.x1}) add(px, Rational(checked::add(k, checked::mul(u.y, px)), u.x));
  }
  if (u.y != 0) {
    for (const std::int64_t py : {w.y0, w.y1}) add(Rational(checked::sub(checked::mul(u.x, py), k), u.y), py);
  }
  if (pts.size() < 2) return std::nullopt;
  std::sort(pts.begin(), pts.end());
  return LiftedSegment{pts.front().first, pts.front().second, pts.back().first, pts.back().second};
}

void spiral_glyph(std::ostringstream& out, const Canvas& c, const Rational& px, const Rational& py, SpiralDir dir) {
  // A three-quarter circle around the puncture with an arrowhead showing the turning sense.
  const double r = c.scale * 0.12;
  const double x = c.xd(px), y = c.yd(py);
  const int sweep = dir == SpiralDir::CW ? 1 : 0;
  const double ex = x, ey = dir == SpiralDir::CW ? y + r : y - r;
  out << "    <path class=\"spiral-" << (dir == SpiralDir::CW ? "cw" : "ccw") << "\" d=\"M " << fmt(x + r) << ' '
      << fmt(y) << " A " << fmt(r) << ' ' << fmt(r) << " 0 1 " << sweep << ' ' << fmt(ex) << ' ' << fmt(ey)
      << "\" marker-end=\"url(#arrow)\"/>\n";
}

}  // namespace

LiftedSegment lift(const AllowableCurve& c, const Window& w) {
  const LatticePoint d = c.slope().direction();
  Rational sx, sy;
  if (c.is_closed()) {
    // The base point of the closed walk: det(d, P) = -1/2.
    const auto e = extended_gcd(d.y, d.x);
    sx = into_window(Rational(e[1], 2), w.x0);
    sy = into_window(Rational(-e[2], 2), w.y0);
  } else {
    const LatticePoint v = c.ends()[0].v.as_point();
    sx = Rational(lift_parity(v.x, w.x0));
    sy = Rational(lift_parity(v.y, w.y0));
  }
  return {sx, sy, sx + Rational(d.x), sy + Rational(d.y)};
}

std::string render_svg(const RenderSpec& spec) {
  const Window& w = spec.window;
  if (w.x1 <= w.x0 || w.y1 <= w.y0) throw Error(ErrorKind::InvalidParameters, "render window is empty");
  if (spec.scale <= 0) throw Error(ErrorKind::InvalidParameters, "render scale must be positive");
  spec.triangulation.validate();
  const Canvas c{w, spec.scale};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width() << "\" height=\"" << c.height()
      << "\" viewBox=\"0 0 " << c.width() << ' ' << c.height() << "\">\n";
  out << "  <defs><marker id=\"arrow\" markerWidth=\"6\" markerHeight=\"6\" refX=\"3\" refY=\"3\" orient=\"auto\">"
         "<path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";
  out << "  <style>.family-0{stroke:#1f77b4}.family-1{stroke:#2ca02c}.family-2{stroke:#d62728;stroke-dasharray:6 3}"
         ".curve{stroke:#000;stroke-width:2.5;fill:none}.puncture{fill:#000}"
         "path[class^=spiral]{stroke:#000;fill:none;stroke-width:1.5}</style>\n";

  for (std::size_t f = 0; f < 3; ++f) {
    const LatticePoint u = spec.triangulation.triple[f].direction();
    std::int64_t lo = 0, hi = 0;
    bool first = true;
    for (const std::int64_t px : {w.x0, w.x1}) {
      for (const std::int64_t py : {w.y0, w.y1}) {
        const std::int64_t k = det(u, {px, py});
        lo = first ? k : std::min(lo, k);
        hi = first ? k : std::max(hi, k);
        first = false;
      }
    }
    out << "  <g class=\"family-" << f << "\" data-slope=\"" << spec.triangulation.triple[f].to_string()
        << "\" stroke-width=\"1\">\n";
    for (std::int64_t k = lo; k <= hi; ++k) {
      const auto seg = clip_line(u, k, w);
      if (!seg) continue;
      out << "    <line x1=\"" << c.x(seg->x0) << "\" y1=\"" << c.y(seg->y0) << "\" x2=\"" << c.x(seg->x1)
          << "\" y2=\"" << c.y(seg->y1) << "\"/>\n";
    }
    out << "  </g>\n";
  }

  out << "  <g class=\"punctures\">\n";
  for (std::int64_t y = w.y0; y <= w.y1; ++y) {
    for (std::int64_t x = w.x0; x <= w.x1; ++x) {
      const Puncture v = Puncture::from_point({x, y});
      out << "    <circle class=\"puncture\" data-v=\"" << v.to_string() << "\" data-tag=\""
          << (spec.triangulation.tags[v.index()] == Tagging::Plain ? "plain" : "notched") << "\" cx=\""
          << c.x(Rational(x)) << "\" cy=\"" << c.y(Rational(y)) << "\" r=\"4\"/>\n";
    }
  }
  out << "  </g>\n";

  out << "  <g class=\"curves\">\n";
  for (const auto& curve : spec.curves) {
    const LiftedSegment s = lift(curve, w);
    out << "    <polyline class=\"curve\" data-curve=\"" << curve.to_string() << "\" points=\"" << c.x(s.x0) << ','
        << c.y(s.y0) << ' ' << c.x(s.x1) << ',' << c.y(s.y1) << "\"/>\n";
    if (!curve.is_closed()) {
      spiral_glyph(out, c, s.x0, s.y0, curve.ends()[0].dir);
      spiral_glyph(out, c, s.x1, s.y1, curve.ends()[1].dir);
    }
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace sphere_lam::render
