#include "inns/invariants/report.hpp"

#include <algorithm>
#include <sstream>

namespace inns::invariants {

using kernel::Rational;
using kernel::vdim;

namespace {

using Univariate = std::vector<Rational>;  // ascending coefficients

void trim(Univariate& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Univariate poly_mod(Univariate a, const Univariate& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

Univariate poly_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::int64_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::int64_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    auto& pr = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / pr[c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * pr[k];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::int64_t> branch_data_delta(const ComponentPresentation& c, const Options& opts,
                                              std::vector<std::string>& warnings,
                                              std::int64_t& mult) {
  std::vector<branch::Branch> bs = c.branches;
  for (int attempt = 0;; ++attempt) {
    try {
      std::int64_t d = plane_curve_delta(bs);
      mult = 0;
      for (const auto& b : bs) mult += branch::branch_multiplicity(b);
      return d;
    } catch (const branch::PrecisionError& e) {
      if (attempt >= opts.max_precision_retries) throw;
      int p = bs.front().precision() * 2;
      for (auto& b : bs) b = b.with_precision(p);
      warnings.push_back("component " + c.name + ": precision raised to " + std::to_string(p) +
                         " after: " + e.what());
    }
  }
}

}  // namespace

std::int64_t intersection_number(const Ideal& A, const Ideal& B) {
  auto v = vdim(A + B);
  if (!v) throw kernel::QuotientError("intersection number is infinite: the germs share a curve");
  return *v;
}

bool is_smooth_at_origin(const Ideal& prime, int dimension) {
  const std::size_t n = prime.ring()->var_count();
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : prime.generators()) {
    if (g.coefficient(kernel::Monomial(n)) != 0) return false;  // unit: origin not on the germ
    std::vector<Rational> row(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      kernel::Monomial m(n);
      m[i] = 1;
      row[i] = g.coefficient(m);
    }
    rows.push_back(std::move(row));
  }
  return rank_of(std::move(rows)) == static_cast<std::int64_t>(n) - dimension;
}

std::optional<std::int64_t> ordinary_branch_count(const Polynomial& h) {
  if (h.ring()->var_count() != 2) throw std::invalid_argument("tangent cone test needs a plane curve");
  const int m = h.order();
  if (m <= 0) return std::nullopt;
  Polynomial H = h.homogeneous_part(m);
  // H(s, 1) has degree m - (power of x dividing... ) ; b^2 | H means a repeated line.
  Univariate p(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& t : H.terms()) p[static_cast<std::size_t>(t.mono[0])] += t.coef;
  trim(p);
  if (static_cast<int>(p.size()) - 1 < m - 1) return std::nullopt;
  Univariate dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<long>(i));
  if (!dp.empty() && poly_gcd(p, dp).size() > 1) return std::nullopt;
  return m;
}

std::optional<Polynomial> planar_equation(const Ideal& prime) {
  RingPtr ring = prime.ring();
  std::vector<Polynomial> gens = prime.generators();
  if (ring->var_count() < 2) return std::nullopt;
  while (ring->var_count() > 2) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;  // (generator, variable)
    for (std::size_t gi = 0; gi < gens.size() && !pivot; ++gi) {
      for (std::size_t v = 0; v < ring->var_count() && !pivot; ++v) {
        int hits = 0;
        bool linear = false;
        for (const auto& t : gens[gi].terms()) {
          if (t.mono[v] == 0) continue;
          ++hits;
          linear = t.mono.degree() == 1;
        }
        if (hits == 1 && linear) pivot = std::make_pair(gi, v);
      }
    }
    if (!pivot) return std::nullopt;
    const auto [gi, v] = *pivot;
    const std::string name = ring->variables()[v];
    RingPtr smaller = kernel::without_variable(ring, name);
    kernel::Monomial xv(ring->var_count());
    xv[v] = 1;
    Rational c = gens[gi].coefficient(xv);
    Polynomial rest = gens[gi] - Polynomial::term(ring, xv, c);
    Polynomial image = kernel::substitute(rest, {{name, Polynomial(smaller)}}, smaller) * (-1 / c);
    std::vector<Polynomial> next;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k == gi) continue;
      Polynomial s = kernel::substitute(gens[k], {{name, image}}, smaller);
      if (!s.is_zero()) next.push_back(std::move(s));
    }
    gens = std::move(next);
    ring = smaller;
  }
  if (gens.empty()) return std::nullopt;
  Ideal all(ring, gens);
  for (const auto& g : gens) {
    if (g.is_constant()) return std::nullopt;
    Ideal principal(ring, {g});
    if (kernel::is_subset(all, principal)) return g;
  }
  return std::nullopt;
}

std::int64_t plane_curve_delta(const std::vector<branch::Branch>& branches) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    d += branch::delta_branch(branches[i]);
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      d += branch::intersection_multiplicity_branches(branches[i], branches[j]);
    }
  }
  return d;
}

ComponentDelta component_delta(const ComponentPresentation& c, const Options& opts,
                               std::vector<std::string>& warnings) {
  ComponentDelta out;
  out.name = c.name;
  const bool smooth = is_smooth_at_origin(c.prime, c.dimension);
  if (c.declared_smooth && *c.declared_smooth != smooth) {
    throw ConsistencyError("component " + c.name + " is declared " +
                           (smooth ? "singular" : "smooth") + " but the Jacobian rank says otherwise");
  }
  auto check_declared = [&](std::int64_t delta, std::int64_t r) {
    if (c.declared_delta && *c.declared_delta != delta) {
      throw ConsistencyError("component " + c.name + ": declared delta " +
                             std::to_string(*c.declared_delta) + " but computed " + std::to_string(delta));
    }
    if (c.declared_branch_count && *c.declared_branch_count != r) {
      throw ConsistencyError("component " + c.name + ": declared " +
                             std::to_string(*c.declared_branch_count) + " branches but found " +
                             std::to_string(r));
    }
  };

  if (smooth) {
    out.delta = 0;
    out.branch_count = 1;
    out.source = "smooth";
    out.multiplicity = 1;
    check_declared(0, 1);
    if (!c.branches.empty() && c.branches.size() != 1) {
      throw ConsistencyError("smooth component " + c.name + " cannot have several branches");
    }
    return out;
  }

  if (!c.branches.empty()) {
    std::int64_t mult = 0;
    out.delta = *branch_data_delta(c, opts, warnings, mult);
    out.branch_count = static_cast<std::int64_t>(c.branches.size());
    out.multiplicity = mult;
    out.source = "branches";
    check_declared(out.delta, out.branch_count);
    return out;
  }

  std::optional<std::int64_t> r = c.declared_branch_count;
  if (c.declared_delta) {
    out.delta = *c.declared_delta;
    out.source = "declared";
    if (!r) {
      if (opts.branch_policy == BranchCountPolicy::Require) {
        throw UnderdeterminedError("component " + c.name + ": declared delta needs a branch count");
      }
      warnings.push_back("component " + c.name + " assumed to have one branch");
      r = 1;
    }
    out.branch_count = *r;
    out.multiplicity = kernel::multiplicity(c.prime);
    return out;
  }

  if (c.dimension == 1) {
    if (auto h = planar_equation(c.prime)) {
      auto mu = vdim(kernel::jacobian_ideal(*h));
      if (!mu) throw UnderdeterminedError("component " + c.name + " is not reduced");
      auto ordinary = ordinary_branch_count(*h);
      if (ordinary && r && *r != *ordinary) {
        throw ConsistencyError("component " + c.name + ": declared " + std::to_string(*r) +
                               " branches but the tangent cone has " + std::to_string(*ordinary) +
                               " distinct lines");
      }
      if (!r) r = ordinary;
      if (!r) {
        if (opts.branch_policy == BranchCountPolicy::Require) {
          throw UnderdeterminedError("component " + c.name +
                                     ": singular with a non-ordinary tangent cone; declare its branch count");
        }
        warnings.push_back("component " + c.name + " assumed to have one branch");
        r = 1;
      }
      const std::int64_t twice = *mu + *r - 1;
      if (twice % 2 != 0) {
        throw ConsistencyError("component " + c.name + ": mu + r - 1 = " + std::to_string(twice) +
                               " is odd, so the branch count is wrong");
      }
      out.delta = twice / 2;
      out.branch_count = *r;
      out.source = "planar";
      out.multiplicity = h->order();
      return out;
    }
  }
  throw UnderdeterminedError("delta of component " + c.name +
                             " is not determined: give branches, smooth or delta");
}

Ideal reduced_ideal(const InnsPresentation& p) {
  if (p.components.empty()) return Ideal(p.ring, {Polynomial::constant(p.ring, 1)});
  std::vector<Ideal> primes;
  for (const auto& c : p.components) primes.push_back(c.prime);
  return kernel::ideal_intersection(primes);
}

Ideal full_ideal(const InnsPresentation& p) {
  if (p.full) return *p.full;
  if (p.embedded) {
    if (p.components.empty()) return *p.embedded;
    return kernel::ideal_intersection(reduced_ideal(p), *p.embedded);
  }
  return reduced_ideal(p);
}

DeltaPositive delta_positive(const InnsPresentation& p, const Options& opts,
                             std::vector<std::string>& warnings) {
  DeltaPositive out;
  const auto& comps = p.components;
  for (const auto& c : comps) {
    out.components.push_back(component_delta(c, opts, warnings));
    out.value += out.components.back().delta;
  }
  if (comps.empty()) return out;
  std::vector<std::int64_t> chained(comps.size(), 0);
  Ideal suffix = comps.back().prime;
  for (std::size_t i = comps.size() - 1; i-- > 0;) {
    chained[i] = intersection_number(comps[i].prime, suffix);
    suffix = kernel::ideal_intersection(comps[i].prime, suffix);
  }
  for (auto v : chained) out.value += v;
  out.chained = std::move(chained);
  return out;
}

EpsilonRoutes epsilon(const InnsPresentation& p) {
  EpsilonRoutes out;
  Ideal reduced = reduced_ideal(p);
  if (p.embedded) {
    auto q = vdim(*p.embedded);
    auto s = vdim(reduced + *p.embedded);
    if (!q || !s) throw kernel::QuotientError("embedded ideal is not m-primary");
    out.vdim_embedded = q;
    out.vdim_sum = s;
    out.embedded_route = *q - *s;
  }
  if (p.full || p.embedded) {
    Ideal I = full_ideal(p);
    if (p.components.empty()) {
      auto v = vdim(I);
      if (!v) throw kernel::QuotientError("zero-dimensional germ expected");
      out.quotient_route = *v;
    } else {
      out.quotient_route = kernel::vdim_quotient(reduced, I);
    }
  } else {
    out.quotient_route = 0;
  }
  if (out.embedded_route && out.quotient_route && *out.embedded_route != *out.quotient_route) {
    throw ConsistencyError("epsilon routes disagree: " + std::to_string(*out.embedded_route) + " vs " +
                           std::to_string(*out.quotient_route));
  }
  out.value = out.embedded_route ? *out.embedded_route : *out.quotient_route;
  return out;
}

InvariantReport invariant_report(const InnsPresentation& p, const Options& opts) {
  auto rec = verify_decomposition(p);
  if (!rec.ok()) throw VerificationError(std::move(rec));
  InvariantReport rep;
  const auto& comps = p.components;
  for (const auto& c : comps) rep.dimension = std::max(rep.dimension, c.dimension);

  auto eps = epsilon(p);
  rep.epsilon = eps.value;
  rep.epsilon_embedded_route = eps.embedded_route;
  rep.epsilon_quotient_route = eps.quotient_route;
  rep.vdim_embedded = eps.vdim_embedded;
  rep.vdim_reduced_plus_embedded = eps.vdim_sum;

  if (comps.empty()) {
    rep.delta_positive = 0;
    rep.delta = -rep.epsilon;
    rep.r = 1;
    rep.r_prime = 0;
    rep.mu = 2 * rep.delta;
    rep.mt = kernel::multiplicity(full_ideal(p));
    return rep;
  }

  auto dp = delta_positive(p, opts, rep.warnings);
  rep.delta_positive = dp.value;
  rep.components = dp.components;
  rep.chained_intersections = dp.chained;
  rep.delta = rep.delta_positive - rep.epsilon;
  rep.r = 0;
  for (const auto& c : rep.components) rep.r += c.branch_count;
  rep.r_prime = rep.r - 1;
  rep.mu = 2 * rep.delta - rep.r_prime;

  rep.intersection_matrix.assign(comps.size(), std::vector<std::int64_t>(comps.size(), 0));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      auto v = intersection_number(comps[i].prime, comps[j].prime);
      rep.intersection_matrix[i][j] = rep.intersection_matrix[j][i] = v;
    }
  }

  rep.mt = kernel::multiplicity(reduced_ideal(p));
  bool all_curves = std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.dimension == 1; });
  if (all_curves && rep.mt) {
    std::int64_t sum = 0;
    for (const auto& c : rep.components) sum += c.multiplicity.value_or(0);
    bool known = std::all_of(rep.components.begin(), rep.components.end(),
                             [](const ComponentDelta& c) { return c.multiplicity.has_value(); });
    if (known && sum != *rep.mt) {
      throw ConsistencyError("multiplicity from the tangent cone (" + std::to_string(*rep.mt) +
                             ") differs from the component multiplicities (" + std::to_string(sum) + ")");
    }
  }
  return rep;
}

std::int64_t milnor_number_jacobian(const Polynomial& f) {
  auto v = vdim(kernel::jacobian_ideal(f));
  if (!v) throw std::domain_error("singularity is not isolated: Milnor number is infinite");
  return *v;
}

std::int64_t tjurina_number(const Polynomial& f) {
  auto v = vdim(kernel::tjurina_ideal(f));
  if (!v) throw std::domain_error("singularity is not isolated: Tjurina number is infinite");
  return *v;
}

MilnorCheck milnor_formula_check(const PlaneCurve& curve) {
  MilnorCheck out;
  out.mu_jacobian = milnor_number_jacobian(curve.equation);
  out.delta = plane_curve_delta(curve.branches);
  out.r = static_cast<std::int64_t>(curve.branches.size());
  out.holds = out.mu_jacobian == 2 * out.delta - out.r + 1;
  return out;
}

WeakNormality is_ordinary_weakly_normal(const InnsPresentation& p, const Options& opts) {
  if (p.components.empty()) throw std::invalid_argument("weak normality test needs dimension >= 1");
  auto rep = invariant_report(p, opts);
  if (rep.epsilon != 0) throw std::invalid_argument("presentation is not reduced (epsilon > 0)");
  if (rep.delta < rep.r_prime) {
    throw ConsistencyError("delta < r' contradicts delta >= r' for reduced germs");
  }
  return {rep.delta == rep.r_prime, rep.delta, rep.r_prime};
}

}  // namespace inns::invariants
