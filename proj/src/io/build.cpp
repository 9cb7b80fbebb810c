#include "inns/io/build.hpp"

namespace inns::io {

namespace {

std::vector<Polynomial> to_ring(const std::vector<Polynomial>& gens, const kernel::RingPtr& ring) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.in_ring(ring));
  return out;
}

}  // namespace

kernel::RingPtr local_ring(const Document& doc) {
  if (!doc.ring) throw std::invalid_argument("document declares no ring");
  return kernel::make_local_ring(doc.ring->variables);
}

std::vector<branch::Branch> make_branches(const Document& doc, const std::vector<std::string>& names,
                                          int precision) {
  std::vector<branch::Branch> out;
  for (const auto& n : names) {
    const auto* b = doc.find_branch(n);
    if (!b) throw std::invalid_argument("unknown branch " + n);
    out.push_back(branch::Branch::from_polynomials(b->components, precision));
  }
  return out;
}

invariants::InnsPresentation make_presentation(const Document& doc, const PresentationDecl& decl,
                                               int precision) {
  auto R = local_ring(doc);
  invariants::InnsPresentation p{R, {}, std::nullopt, std::nullopt};
  for (const auto& c : decl.components) {
    invariants::ComponentPresentation cp{c.name, kernel::Ideal(R, to_ring(c.generators, R)),
                                         c.dimension.value_or(1), make_branches(doc, c.branches, precision),
                                         c.delta, c.branch_count, std::nullopt};
    if (c.smooth) cp.declared_smooth = true;
    p.components.push_back(std::move(cp));
  }
  if (decl.embedded) p.embedded = kernel::Ideal(R, to_ring(*decl.embedded, R));
  if (decl.full) p.full = kernel::Ideal(R, to_ring(*decl.full, R));
  return p;
}

family::FamilyPresentation make_family(const Document& doc, const FamilyDecl& decl) {
  auto R = local_ring(doc);
  family::FamilyPresentation f;
  f.ring = R;
  f.parameter = decl.parameter;
  for (const auto& c : decl.components) {
    f.components.push_back({c.name, kernel::Ideal(R, to_ring(c.generators, R)), c.dimension.value_or(2)});
  }
  if (decl.section) f.section = {decl.section->name, to_ring(decl.section->coordinates, R)};
  for (const auto& p : decl.points) f.extra_points.push_back({p.name, to_ring(p.coordinates, R)});
  auto fill = [](std::map<std::string, family::FibreComponentData>& table, const std::vector<FibreDataDecl>& src) {
    for (const auto& d : src) {
      auto& e = table[d.component];
      if (d.branch_count) e.branch_count = d.branch_count;
      if (d.delta) e.delta = d.delta;
      if (d.smooth) e.smooth = true;
    }
  };
  fill(f.central, decl.central);
  fill(f.generic, decl.generic);
  if (!decl.samples.empty()) f.samples = decl.samples;
  return f;
}

std::vector<branch::Branch> curve_branches(const Document& doc, int precision) {
  if (!doc.curves.empty()) return make_branches(doc, doc.curves.front().branches, precision);
  std::vector<std::string> names;
  for (const auto& b : doc.branches) names.push_back(b.name);
  if (names.empty()) throw std::invalid_argument("document declares no branches");
  return make_branches(doc, names, precision);
}

}  // namespace inns::io
