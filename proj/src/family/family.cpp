#include "inns/family/family.hpp"

#include <numeric>
#include <sstream>

namespace inns::family {

using invariants::ComponentPresentation;

namespace {

std::size_t parameter_index(const FamilyPresentation& fam) {
  auto idx = fam.ring->index_of(fam.parameter);
  if (!idx) throw FamilyError("parameter " + fam.parameter + " is not a ring variable");
  return *idx;
}

Polynomial parameter_polynomial(const FamilyPresentation& fam) {
  return Polynomial::variable(fam.ring, parameter_index(fam));
}

std::map<std::string, Polynomial> parameter_value(const FamilyPresentation& fam,
                                                  const Rational& c, const RingPtr& target) {
  return {{fam.parameter, Polynomial::constant(target, c)}};
}

std::vector<const TotalComponent*> higher_components(const FamilyPresentation& fam) {
  std::vector<const TotalComponent*> out;
  for (const auto& comp : fam.components) {
    if (comp.dimension >= 2) out.push_back(&comp);
  }
  return out;
}

/// Intersection of the given primes, computed with a global ordering so the
/// generators describe the total space away from the origin too.
Ideal global_intersection(const std::vector<const TotalComponent*>& comps, const RingPtr& ring) {
  RingPtr global = kernel::make_global_ring(ring->variables());
  std::vector<Ideal> primes;
  for (const auto* c : comps) primes.push_back(kernel::in_ring(c->prime, global));
  return kernel::ideal_intersection(primes);
}

Ideal local_intersection(const std::vector<const TotalComponent*>& comps, const RingPtr& ring) {
  return kernel::in_ring(global_intersection(comps, ring), ring);
}

std::string rational_text(const Rational& q) { return q.get_str(); }

const FibreComponentData* component_data(const FamilyPresentation& fam, const Rational& c,
                                         const std::string& name) {
  const auto& table = c == 0 ? fam.central : fam.generic;
  auto it = table.find(name);
  return it == table.end() ? nullptr : &it->second;
}

InnsPresentation build_fibre(const FamilyPresentation& fam, const Rational& c,
                             const std::vector<Rational>& point, const Ideal& total_full) {
  RingPtr F = fibre_ring(fam);
  auto images = parameter_value(fam, c, F);
  InnsPresentation p{F, {}, std::nullopt, std::nullopt};
  for (const auto* comp : higher_components(fam)) {
    Ideal local = kernel::translate(kernel::substitute(comp->prime, images, F), point);
    if (local.standard_basis().is_unit()) continue;
    ComponentPresentation cp{comp->name, local, comp->dimension - 1, {}, {}, {}, {}};
    if (const auto* d = component_data(fam, c, comp->name)) {
      cp.declared_branch_count = d->branch_count;
      cp.declared_delta = d->delta;
      cp.declared_smooth = d->smooth;
    }
    p.components.push_back(std::move(cp));
  }
  p.full = kernel::translate(kernel::substitute(total_full, images, F), point);
  auto record = invariants::verify_decomposition(p);
  if (!record.ok()) throw invariants::VerificationError(record);
  return p;
}

std::size_t count_components(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = n;
  for (auto [a, b] : edges) {
    auto ra = find(a);
    auto rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

ComponentGraph build_graph(const FamilyPresentation& fam, bool add_parameter) {
  ComponentGraph g;
  auto comps = higher_components(fam);
  for (const auto* c : comps) g.vertices.push_back(c->name);
  Ideal t(fam.ring, {parameter_polynomial(fam)});
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      Ideal sum = comps[i]->prime + comps[j]->prime;
      if (add_parameter) sum = sum + t;
      if (kernel::krull_dim(sum) >= 1) g.edges.emplace_back(i, j);
    }
  }
  g.connected_components = count_components(comps.size(), g.edges);
  return g;
}

FibreInvariants fibre_invariants_impl(const FamilyPresentation& fam, const Rational& c,
                                      const Options& opts, const Ideal& total_full) {
  FibreInvariants out;
  out.parameter = c;
  auto sigma = evaluate_section(fam, fam.section, c);
  std::vector<std::pair<std::string, std::vector<Rational>>> points{{fam.section.name, sigma}};
  for (const auto& extra : fam.extra_points) {
    auto p = evaluate_section(fam, extra, c);
    if (c == 0) {
      if (p != sigma) {
        throw FamilyError("point " + extra.name + " does not tend to the section at t = 0");
      }
      continue;
    }
    for (const auto& [name, q] : points) {
      if (q == p) throw FamilyError("point " + extra.name + " coincides with " + name + " at t = " + rational_text(c));
    }
    points.emplace_back(extra.name, std::move(p));
  }
  for (const auto& [name, coords] : points) {
    InnsPresentation pres = build_fibre(fam, c, coords, total_full);
    InvariantReport rep;
    const std::string where = "t=" + rational_text(c) + " at " + name + ": ";
    try {
      rep = invariants::invariant_report(pres, opts.invariant_options);
    } catch (const invariants::UnderdeterminedError& e) {
      throw invariants::UnderdeterminedError(where + e.what());
    } catch (const invariants::ConsistencyError& e) {
      throw invariants::ConsistencyError(where + e.what());
    }
    for (const auto& w : rep.warnings) {
      out.warnings.push_back(where + w);
    }
    out.delta += rep.delta;
    out.epsilon += rep.epsilon;
    out.r += rep.r;
    out.r_prime += rep.r_prime;
    out.mu += rep.mu;
    for (auto v : rep.chained_intersections) out.chained_intersection_sum += v;
    if (out.points.empty()) out.mt = rep.mt;
    out.points.push_back({name, coords, std::move(rep)});
  }
  if (c != 0) {
    out.isolated_points = isolated_point_count(fam);
    out.delta -= out.isolated_points;
    out.epsilon += out.isolated_points;
    out.mu -= 2 * out.isolated_points;
  }
  return out;
}

std::vector<Rational> sample_values(const FamilyPresentation& fam, const Options& opts) {
  auto samples = opts.samples ? *opts.samples : fam.samples;
  if (samples.size() < 2) throw FamilyError("generic invariants need at least two samples");
  for (const auto& s : samples) {
    if (s == 0) throw FamilyError("sample values must be nonzero");
  }
  return samples;
}

std::vector<FibreInvariants> generic_impl(const FamilyPresentation& fam, const Options& opts,
                                          const Ideal& total_full) {
  std::vector<FibreInvariants> out;
  for (const auto& s : sample_values(fam, opts)) out.push_back(fibre_invariants_impl(fam, s, opts, total_full));
  const auto& a = out.front();
  for (std::size_t i = 1; i < out.size(); ++i) {
    const auto& b = out[i];
    auto differs = [&](const char* what, auto x, auto y) {
      if (x == y) return;
      std::ostringstream os;
      os << "sample not generic: " << what << " differs between t=" << rational_text(a.parameter)
         << " and t=" << rational_text(b.parameter) << "; add or replace samples";
      throw GenericityError(os.str());
    };
    differs("delta", a.delta, b.delta);
    differs("epsilon", a.epsilon, b.epsilon);
    differs("r", a.r, b.r);
    differs("r'", a.r_prime, b.r_prime);
    differs("mu", a.mu, b.mu);
    differs("mt", a.mt, b.mt);
  }
  return out;
}

}  // namespace

RingPtr fibre_ring(const FamilyPresentation& fam) {
  parameter_index(fam);
  RingPtr r = kernel::without_variable(fam.ring, fam.parameter);
  return kernel::make_local_ring(r->variables());
}

std::vector<Rational> evaluate_section(const FamilyPresentation& fam, const PointSection& s,
                                       const Rational& c) {
  std::size_t n = fam.ring->var_count() - 1;
  if (s.coordinates.empty()) return std::vector<Rational>(n, Rational(0));
  if (s.coordinates.size() != n) {
    throw FamilyError("point " + s.name + " needs " + std::to_string(n) + " coordinates");
  }
  std::size_t ti = parameter_index(fam);
  std::vector<Rational> at(fam.ring->var_count(), Rational(0));
  at[ti] = c;
  std::vector<Rational> out;
  for (const auto& p : s.coordinates) {
    for (std::size_t v = 0; v < fam.ring->var_count(); ++v) {
      if (v != ti && p.involves(v)) throw FamilyError("point " + s.name + " may depend only on " + fam.parameter);
    }
    out.push_back(kernel::evaluate(p, at));
  }
  return out;
}

InnsPresentation fibre_at_point(const FamilyPresentation& fam, const Rational& c,
                                const std::vector<Rational>& point) {
  std::vector<const TotalComponent*> all;
  for (const auto& comp : fam.components) all.push_back(&comp);
  if (all.empty()) throw FamilyError("family has no components");
  return build_fibre(fam, c, point, global_intersection(all, fam.ring));
}

InnsPresentation fibre_at(const FamilyPresentation& fam, const Rational& c) {
  return fibre_at_point(fam, c, evaluate_section(fam, fam.section, c));
}

namespace {

Ideal total_full_ideal(const FamilyPresentation& fam) {
  std::vector<const TotalComponent*> all;
  for (const auto& comp : fam.components) all.push_back(&comp);
  if (all.empty()) throw FamilyError("family has no components");
  return global_intersection(all, fam.ring);
}

}  // namespace

FibreInvariants fibre_invariants(const FamilyPresentation& fam, const Rational& c, const Options& opts) {
  return fibre_invariants_impl(fam, c, opts, total_full_ideal(fam));
}

std::vector<FibreInvariants> generic_invariants(const FamilyPresentation& fam, const Options& opts) {
  return generic_impl(fam, opts, total_full_ideal(fam));
}

std::int64_t r1_count(const FamilyPresentation& fam) {
  std::int64_t r1 = 0;
  for (const auto& comp : fam.components) {
    int d = kernel::krull_dim(comp.prime);
    if (d != comp.dimension) {
      std::ostringstream os;
      os << "component " << comp.name << " is tagged with dimension " << comp.dimension
         << " but has dimension " << d;
      throw FamilyError(os.str());
    }
    if (d == 1) ++r1;
  }
  return r1;
}

std::int64_t isolated_point_count(const FamilyPresentation& fam) {
  std::vector<const TotalComponent*> curves;
  for (const auto& comp : fam.components) {
    if (comp.dimension == 1) curves.push_back(&comp);
  }
  if (curves.empty()) return 0;
  Ideal sum = local_intersection(curves, fam.ring) + Ideal(fam.ring, {parameter_polynomial(fam)});
  auto v = kernel::vdim(sum);
  if (!v) throw FamilyError("one-dimensional components do not meet t = 0 in finitely many points");
  return *v;
}

bool is_active(const FamilyPresentation& fam) {
  Ideal t(fam.ring, {parameter_polynomial(fam)});
  for (const auto& comp : fam.components) {
    if (kernel::krull_dim(comp.prime + t) != comp.dimension - 1) return false;
  }
  return true;
}

ComponentGraph component_graph(const FamilyPresentation& fam) { return build_graph(fam, false); }

ComponentGraph connectivity_graph(const FamilyPresentation& fam) { return build_graph(fam, true); }

std::int64_t milnor_fibre_b0(const FamilyPresentation& fam) {
  return static_cast<std::int64_t>(component_graph(fam).connected_components) + isolated_point_count(fam);
}

std::optional<std::int64_t> expected_intersection_points(const FamilyPresentation& fam) {
  auto comps = higher_components(fam);
  Polynomial t = parameter_polynomial(fam);
  Ideal tideal(fam.ring, {t});
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
    std::vector<const TotalComponent*> rest(comps.begin() + static_cast<std::ptrdiff_t>(i) + 1, comps.end());
    Ideal J = comps[i]->prime + local_intersection(rest, fam.ring);
    auto v = kernel::vdim(kernel::saturation(J, t) + tideal);
    if (!v) return std::nullopt;
    total += *v;
  }
  return total;
}

FamilyReport family_report(const FamilyPresentation& fam, const Options& opts) {
  FamilyReport rep;
  if (higher_components(fam).empty()) throw FamilyError("the central fibre has no curve or surface part");
  rep.r1 = r1_count(fam);
  rep.active = is_active(fam);
  if (!rep.active) rep.warnings.push_back("family is not active: some component lies in a fibre");
  rep.isolated_points = isolated_point_count(fam);

  Ideal total_full = total_full_ideal(fam);
  rep.central = fibre_invariants_impl(fam, Rational(0), opts, total_full);
  rep.samples = generic_impl(fam, opts, total_full);
  rep.generic = rep.samples.front();
  for (const auto* f : {&rep.central, &rep.generic}) {
    rep.warnings.insert(rep.warnings.end(), f->warnings.begin(), f->warnings.end());
  }

  rep.expected_intersections = expected_intersection_points(fam);
  if (!rep.expected_intersections) {
    rep.warnings.push_back("intersection points of X_t could not be counted");
  } else {
    for (const auto& s : rep.samples) {
      if (s.chained_intersection_sum != *rep.expected_intersections) {
        std::ostringstream os;
        os << "X_t at t=" << rational_text(s.parameter) << " has " << *rep.expected_intersections
           << " intersection points of components near the origin with multiplicity, but only "
           << s.chained_intersection_sum << " lie at the declared points";
        throw FamilyError(os.str());
      }
    }
  }

  const auto& c0 = rep.central;
  const auto& ct = rep.generic;
  rep.delta_jump = c0.delta - ct.delta;
  rep.epsilon_jump = c0.epsilon - ct.epsilon;
  rep.mu_jump = c0.mu - ct.mu;
  if (rep.r1 == 0) {
    rep.epsilon_higher_central = c0.epsilon;
  } else {
    FamilyPresentation higher = fam;
    std::erase_if(higher.components, [](const TotalComponent& c) { return c.dimension < 2; });
    rep.epsilon_higher_central = invariants::epsilon(fibre_at(higher, Rational(0))).value;
  }
  rep.epsilon_jump_matches = rep.epsilon_jump == rep.epsilon_higher_central;
  if (!rep.epsilon_jump_matches) {
    rep.warnings.push_back("epsilon jump " + std::to_string(rep.epsilon_jump) +
                           " differs from epsilon(X_0^{>1}) = " + std::to_string(rep.epsilon_higher_central));
  }
  rep.delta_constant = rep.delta_jump == 0;
  rep.equinormalizable = rep.delta_constant && rep.r1 == 0;
  rep.semicontinuity_ok = rep.delta_jump >= 0 && rep.epsilon_jump >= 0;
  if (!rep.semicontinuity_ok) {
    rep.warnings.push_back(rep.active ? "delta or epsilon increases under specialization"
                                      : "semicontinuity fails; the family is not active");
  }
  rep.mu_semicontinuity_violation = rep.mu_jump < 0;
  if (rep.mu_semicontinuity_violation) rep.warnings.push_back("mu is not upper semicontinuous in this family");

  rep.graph = component_graph(fam);
  rep.connectivity = connectivity_graph(fam);
  rep.b0_milnor_fibre = static_cast<std::int64_t>(rep.graph.connected_components) + rep.isolated_points;
  if (rep.connectivity.connected() && rep.r1 == 0 && rep.b0_milnor_fibre != 1) {
    rep.warnings.push_back("G(f) is connected but b0 = " + std::to_string(rep.b0_milnor_fibre));
  }

  if (c0.epsilon != 0) {
    rep.warnings.push_back("weak normalization: hypothesis violated, X_0 is not reduced");
  } else {
    rep.weak_normalization_constant = (c0.delta - c0.r_prime) == (ct.delta - ct.r_prime);
  }

  rep.euler_char_fibre = 1 - c0.mu + ct.mu;
  rep.b1_milnor_fibre = rep.b0_milnor_fibre - rep.euler_char_fibre;
  if (rep.r1 > 0) rep.warnings.push_back("euler characteristic formula ignores the isolated points of X_t");

  bool curves = std::all_of(fam.components.begin(), fam.components.end(),
                            [](const TotalComponent& c) { return c.dimension <= 2; });
  if (!curves) {
    rep.warnings.push_back("topological triviality: the fibres are not curves");
  } else {
    rep.topologically_trivial = rep.mu_jump == 0 && rep.b0_milnor_fibre == 1;
    rep.triviality_iv = rep.r1 == 0 && rep.delta_constant && c0.r == ct.r;
    rep.warnings.push_back("topological triviality assumes X_t is smooth outside sigma(t) (not verified)");
    if (!fam.extra_points.empty()) {
      rep.warnings.push_back("extra singular points are declared, so X_t is not smooth outside sigma(t)");
    }
    if (c0.mt && ct.mt) rep.strong_resolution = *rep.topologically_trivial && *c0.mt == *ct.mt;
  }
  return rep;
}

FamilyPresentation rescale_parameter(const FamilyPresentation& fam, const Rational& c) {
  if (c == 0) throw std::invalid_argument("rescaling factor must be nonzero");
  FamilyPresentation out = fam;
  std::map<std::string, Polynomial> images{{fam.parameter, c * parameter_polynomial(fam)}};
  for (auto& comp : out.components) comp.prime = kernel::substitute(comp.prime, images, fam.ring);
  auto rescale_point = [&](PointSection& s) {
    for (auto& p : s.coordinates) p = kernel::substitute(p, images, fam.ring);
  };
  rescale_point(out.section);
  for (auto& s : out.extra_points) rescale_point(s);
  return out;
}

}  // namespace inns::family
