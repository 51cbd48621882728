#include <algorithm>

#include "sphere_lam/shear.hpp"
#include "sphere_lam/triangulation.hpp"

namespace sphere_lam {

namespace {

std::array<Tagging, 4> tags_of(unsigned bits) {
  std::array<Tagging, 4> tags{};
  for (int i = 0; i < 4; ++i) tags[i] = ((bits >> i) & 1U) ? Tagging::Notched : Tagging::Plain;
  return tags;
}

bool separates(const Tangle& x, const TypeITri& t) {
  const ShearVector v = tangle_shear(x, t);
  return std::any_of(v.begin(), v.end(), [](std::int64_t c) { return c != 0; });
}

}  // namespace

std::optional<TypeITri> find_witness(const Tangle& x, std::int64_t max_height) {
  if (x.empty()) return std::nullopt;
  const std::vector<Slope> slopes = x.support_slopes();

  std::vector<std::array<Slope, 3>> triples;
  for (const auto& f : slopes) {
    const auto [lo, mid] = separating_neighbors(slopes, f);
    triples.push_back({lo, mid, f});
  }
  // The mirror image separates from above.
  std::vector<Slope> mirrored;
  for (const auto& s : slopes) mirrored.push_back(s.negated());
  for (const auto& f : mirrored) {
    const auto [lo, mid] = separating_neighbors(mirrored, f);
    triples.push_back({lo.negated(), mid.negated(), f.negated()});
  }
  triples.push_back(TypeITri::base().triple);
  for (const auto& tr : farey1_triples(max_height)) triples.push_back(tr);

  for (const auto& tr : triples) {
    for (unsigned bits = 0; bits < 16; ++bits) {
      const TypeITri t{tr, tags_of(bits)};
      if (separates(x, t)) return t;
    }
  }
  throw Error(ErrorKind::BoundExhausted, "no type-I triangulation among the candidates separates the tangle");
}

}  // namespace sphere_lam
