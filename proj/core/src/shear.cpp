#include "sphere_lam/shear.hpp"

#include <algorithm>
#include <sstream>

#include "sphere_lam/checked.hpp"
#include "sphere_lam/linalg.hpp"
#include "walk.hpp"

namespace sphere_lam {

std::string to_string(const ShearVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

// ---- words ----------------------------------------------------------------------------------

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.kind;
    out += static_cast<char>('0' + l.decoration);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const bool ok = tok.size() == 2 && ((tok[0] == 'r' && (tok[1] == '2' || tok[1] == '5')) ||
                                        (tok[0] == 't' && (tok[1] == '1' || tok[1] == '4')));
    if (!ok) throw Error(ErrorKind::Parse, "malformed letter '" + tok + "'");
    w.push_back({tok[0], tok[1] - '0'});
  }
  return w;
}

namespace {

Letter r_letter(std::int64_t k) { return {'r', k % 2 == 0 ? 2 : 5}; }
Letter t_letter(std::int64_t k) { return {'t', k % 2 == 0 ? 1 : 4}; }

bool positive_finite(const Slope& s) { return s.a() > 0 && s.b() > 0; }

}  // namespace

Word word_prime(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw Error(ErrorKind::UnsupportedBaseCase, "word_prime needs 0 < b/a < infinity");
  // Crossing x = i happens at t = i/a and y = j at t = j/b; merge by comparing i*b with j*a.
  Word w;
  std::int64_t i = 1, j = 1;
  while (i < a || j < b) {
    if (j >= b || (i < a && checked::mul(i, b) < checked::mul(j, a))) {
      w.push_back(r_letter(i++));
    } else {
      w.push_back(t_letter(j++));
    }
  }
  return w;
}

Word word_of_curve(const AllowableCurve& curve) {
  const Slope& s = curve.slope();
  if (!positive_finite(s)) throw Error(ErrorKind::UnsupportedBaseCase, "slope must be positive and finite");
  const std::int64_t a = s.a(), b = s.b();
  const Word mid = word_prime(a, b);
  Word w{t_letter(0)};
  if (curve.is_closed()) {
    w.insert(w.end(), mid.begin(), mid.end());
    w.push_back(r_letter(a));
    w.push_back(t_letter(b));
    w.insert(w.end(), mid.rbegin(), mid.rend());
    w.push_back(r_letter(0));
    w.push_back(t_letter(0));
    return w;
  }
  const Puncture origin{};
  const auto at_origin = curve.spiral_at(origin);
  if (!at_origin || *at_origin != SpiralDir::CCW)
    throw Error(ErrorKind::UnsupportedBaseCase, "open curve needs a counterclockwise spiral at v00");
  const SpiralDir far = *curve.spiral_at(origin + s.direction());
  w.push_back(r_letter(0));
  w.insert(w.end(), mid.begin(), mid.end());
  w.push_back(far == SpiralDir::CCW ? r_letter(a) : t_letter(b));
  return w;
}

ShearVector shear_via_word(const AllowableCurve& curve) {
  const Word w = word_of_curve(curve);
  ShearVector x{};
  for (std::size_t i = 1; i < w.size(); ++i) {
    switch (w[i].decoration) {
      case 1: x[0] -= 1; break;
      case 2: x[1] += 1; break;
      case 4: x[3] -= 1; break;
      case 5: x[4] += 1; break;
      default: break;
    }
  }
  std::int64_t rr = 0, tt = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].kind != w[i + 1].kind) continue;
    if (w[i].kind == 'r') {
      ++rr;
    } else {
      ++tt;
    }
  }
  if (rr > 0 && tt > 0) throw Error(ErrorKind::Inconsistent, "word has both rr and tt doubles");
  const bool steep = curve.slope().b() > curve.slope().a();
  // Slope at most 1: each rr double is -1, on gamma_6, gamma_3, gamma_6, ...
  // Slope above 1: each tt double is +1, on gamma_3, gamma_6, gamma_3, ...
  const std::int64_t doubles = steep ? tt : rr;
  const std::int64_t sign = steep ? 1 : -1;
  const std::size_t first = steep ? 2 : 5, second = steep ? 5 : 2;
  for (std::int64_t n = 0; n < doubles; ++n) x[n % 2 == 0 ? first : second] += sign;
  return x;
}

ShearVector shear_oracle(const AllowableCurve& curve) { return shear_oracle_wrt(curve, TypeITri::base()); }

ShearVector shear_oracle_wrt(const AllowableCurve& curve, const TypeITri& t) {
  t.validate();
  const auto frame = walk::frame_of(t.triple);
  const AllowableCurve c = reverse_at_notched(curve, t.tags);
  const LatticePoint delta = c.slope().direction();
  std::vector<std::int64_t> s;
  if (c.is_closed()) {
    s = walk::score(walk::closed_walk(frame, delta, walk::Labels::Sphere),
                    walk::closed_period(delta, walk::Labels::Sphere), 6);
  } else {
    const auto& e = c.ends();
    // Lift starting at the first endpoint; the other one is reached after one step of delta.
    const LatticePoint start = e[0].v.as_point();
    const auto w = walk::open_walk(frame, start, delta, e[0].dir, e[1].dir, walk::Labels::Sphere);
    s = walk::score(w, std::nullopt, 6);
  }
  ShearVector out{};
  std::copy(s.begin(), s.end(), out.begin());
  return out;
}

ShearMethod parse_shear_method(std::string_view text) {
  if (text == "formula") return ShearMethod::Formula;
  if (text == "word") return ShearMethod::Word;
  if (text == "oracle") return ShearMethod::Oracle;
  throw Error(ErrorKind::Parse, "unknown shear method '" + std::string(text) + "'");
}

ShearVector shear(const AllowableCurve& curve, ShearMethod method) {
  switch (method) {
    case ShearMethod::Word: return shear_via_word(curve);
    case ShearMethod::Oracle: return shear_oracle(curve);
    case ShearMethod::Formula: break;
  }
  return shear_closed_form(curve);
}

// ---- permutations ---------------------------------------------------------------------------

CoordPerm CoordPerm::from_cycles(std::string_view cycles) {
  CoordPerm p;
  std::vector<int> cycle;
  bool open = false;
  auto close_cycle = [&]() {
    for (std::size_t i = 0; i < cycle.size(); ++i) p.image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    cycle.clear();
  };
  std::array<bool, 6> seen{};
  for (const char ch : cycles) {
    if (ch == ' ') continue;
    if (ch == '(') {
      if (open) throw Error(ErrorKind::Parse, "nested cycle in '" + std::string(cycles) + "'");
      open = true;
    } else if (ch == ')') {
      if (!open) throw Error(ErrorKind::Parse, "unbalanced cycle in '" + std::string(cycles) + "'");
      close_cycle();
      open = false;
    } else if (ch >= '1' && ch <= '6' && open) {
      const int k = ch - '1';
      if (seen[k]) throw Error(ErrorKind::Parse, "repeated index in '" + std::string(cycles) + "'");
      seen[k] = true;
      cycle.push_back(k);
    } else {
      throw Error(ErrorKind::Parse, "malformed permutation '" + std::string(cycles) + "'");
    }
  }
  if (open) throw Error(ErrorKind::Parse, "unbalanced cycle in '" + std::string(cycles) + "'");
  return p;
}

std::string CoordPerm::to_string() const {
  std::string out;
  std::array<bool, 6> seen{};
  for (int i = 0; i < 6; ++i) {
    if (seen[i] || image[i] == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      out += static_cast<char>('1' + j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

ShearVector apply_perm(const CoordPerm& p, const ShearVector& v) {
  ShearVector out{};
  for (int i = 0; i < 6; ++i) out[p.image[i]] = v[i];
  return out;
}

CoordPerm compose(const CoordPerm& p, const CoordPerm& q) {
  CoordPerm r;
  for (int i = 0; i < 6; ++i) r.image[i] = p.image[q.image[i]];
  return r;
}

CoordPerm inverse(const CoordPerm& p) {
  CoordPerm r;
  for (int i = 0; i < 6; ++i) r.image[p.image[i]] = i;
  return r;
}

PermGroup generate_group(const std::vector<CoordPerm>& generators) {
  std::set<CoordPerm> elems{CoordPerm::identity()};
  std::vector<CoordPerm> frontier{CoordPerm::identity()};
  while (!frontier.empty()) {
    std::vector<CoordPerm> next;
    for (const auto& e : frontier) {
      for (const auto& g : generators) {
        const CoordPerm h = compose(g, e);
        if (elems.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

PermGroup product_set(const PermGroup& left, const PermGroup& right) {
  std::set<CoordPerm> out;
  for (const auto& l : left) {
    for (const auto& r : right) out.insert(compose(l, r));
  }
  return {out.begin(), out.end()};
}

const PermGroup& group_x() {
  static const PermGroup g = generate_group({CoordPerm::from_cycles("(14)(25)(36)")});
  return g;
}

const PermGroup& group_y() {
  static const PermGroup g = generate_group({CoordPerm::from_cycles("(14)(36)"), CoordPerm::from_cycles("(25)(36)")});
  return g;
}

const PermGroup& group_z() {
  static const PermGroup g = generate_group({CoordPerm::from_cycles("(123)(456)")});
  return g;
}

const PermGroup& group_zx() {
  static const PermGroup g = product_set(group_z(), group_x());
  return g;
}

const PermGroup& group_zy() {
  static const PermGroup g = product_set(group_z(), group_y());
  return g;
}

const PermGroup& group_gamma24() {
  static const PermGroup g =
      generate_group({CoordPerm::from_cycles("(14)"), CoordPerm::from_cycles("(25)"),
                      CoordPerm::from_cycles("(36)"), CoordPerm::from_cycles("(123)(456)")});
  return g;
}

std::set<ShearVector> orbit(const ShearVector& v, const PermGroup& group) {
  std::set<ShearVector> out;
  for (const auto& p : group) out.insert(apply_perm(p, v));
  return out;
}

// ---- type-I triangulations ------------------------------------------------------------------

void TypeITri::validate() const {
  if (!is_farey1_triple(triple[0], triple[1], triple[2]))
    throw Error(ErrorKind::NotFareyTriple,
                triple[0].to_string() + ", " + triple[1].to_string() + ", " + triple[2].to_string());
}

bool TypeITri::all_plain() const noexcept {
  return std::all_of(tags.begin(), tags.end(), [](Tagging t) { return t == Tagging::Plain; });
}

AllowableCurve reverse_at_notched(const AllowableCurve& curve, const std::array<Tagging, 4>& tags) {
  if (curve.is_closed()) return curve;
  auto e = curve.ends();
  for (auto& end : e) {
    if (tags[end.v.index()] == Tagging::Notched) end.dir = reversed(end.dir);
  }
  return AllowableCurve::open(curve.slope(), e[0], e[1]);
}

ShearVector shear_wrt(const AllowableCurve& curve, const TypeITri& t) {
  t.validate();
  const UnimodularMap map = triple_to_basis(t.triple[0], t.triple[1], t.triple[2]);
  const AllowableCurve c = reverse_at_notched(curve, t.tags);
  const Slope image = map.apply(c.slope());
  AllowableCurve moved = AllowableCurve::closed(image);
  if (!c.is_closed()) {
    const auto& e = c.ends();
    auto move = [&map](const SpiralEnd& end) {
      return SpiralEnd{Puncture::from_point(map.apply(end.v.as_point())), end.dir};
    };
    moved = AllowableCurve::open(image, move(e[0]), move(e[1]));
  }
  const ShearVector base = shear_closed_form(moved);

  // Arc i of t is carried to the base arc of the same parity class whose slope is image of triple[i].
  static constexpr std::array<LatticePoint, 3> targets{{{1, 0}, {0, 1}, {1, -1}}};
  ShearVector out{};
  for (int i = 0; i < 3; ++i) {
    const LatticePoint w = map.linear * t.triple[i].direction();
    int sigma = -1;
    for (int j = 0; j < 3; ++j) {
      if (w == targets[j] || w == -targets[j]) sigma = j;
    }
    if (sigma < 0) throw Error(ErrorKind::Inconsistent, "basis change does not reach the base triple");
    const auto set = endpoint_set_containing(t.triple[i], Puncture{});
    const Puncture img = Puncture::from_point(map.apply(set[1].as_point()));
    const bool contains_origin = Puncture::from_point(map.apply(set[0].as_point())) == Puncture{} || img == Puncture{};
    const int here = contains_origin ? sigma : sigma + 3;
    const int there = contains_origin ? sigma + 3 : sigma;
    out[i] = base[here];
    out[i + 3] = base[there];
  }
  return out;
}

// ---- weighted collections -------------------------------------------------------------------

void Tangle::add(const AllowableCurve& curve, std::int64_t weight) {
  auto [it, inserted] = terms_.emplace(curve, 0);
  it->second = checked::add(it->second, weight);
  if (it->second == 0) terms_.erase(it);
  (void)inserted;
}

std::vector<Slope> Tangle::support_slopes() const {
  std::set<Slope> s;
  for (const auto& [c, w] : terms_) s.insert(c.slope());
  return {s.begin(), s.end()};
}

QuasiLamination::QuasiLamination(std::map<AllowableCurve, std::int64_t> weights) : weights_(std::move(weights)) {
  for (const auto& [c, w] : weights_) {
    if (w <= 0) throw Error(ErrorKind::InvalidParameters, "lamination weights must be positive");
  }
  for (auto i = weights_.begin(); i != weights_.end(); ++i) {
    for (auto j = std::next(i); j != weights_.end(); ++j) {
      if (!curves_compatible(i->first, j->first))
        throw Error(ErrorKind::InvalidCurve,
                    "incompatible curves " + i->first.to_string() + " and " + j->first.to_string());
    }
  }
}

namespace {

ShearVector weighted_sum(const std::map<AllowableCurve, std::int64_t>& terms, const TypeITri& t) {
  ShearVector out{};
  for (const auto& [c, w] : terms) {
    const ShearVector v = shear_wrt(c, t);
    for (int i = 0; i < 6; ++i) out[i] = checked::add(out[i], checked::mul(w, v[i]));
  }
  return out;
}

}  // namespace

ShearVector shear_lamination(const QuasiLamination& l, const TypeITri& t) { return weighted_sum(l.weights(), t); }

ShearVector tangle_shear(const Tangle& x, const TypeITri& t) { return weighted_sum(x.terms(), t); }

}  // namespace sphere_lam
