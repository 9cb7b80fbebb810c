#include "inns/invariants/presentation.hpp"

#include <sstream>

namespace inns::invariants {

using kernel::krull_dim;
using kernel::vdim;

bool VerificationRecord::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string VerificationRecord::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  }
  return {};
}

VerificationError::VerificationError(VerificationRecord record)
    : std::runtime_error("decomposition check failed: " + record.first_failure()),
      record_(std::move(record)) {}

bool branch_lies_on(const branch::Branch& b, const Ideal& ideal) {
  using branch::Series;
  const auto& ring = ideal.ring();
  if (b.dimension() != ring->var_count()) {
    throw branch::BranchError("branch has " + std::to_string(b.dimension()) +
                              " components but the ring has " + std::to_string(ring->var_count()) +
                              " variables");
  }
  const int prec = b.precision();
  for (const auto& g : ideal.generators()) {
    Series acc = Series::zero(prec, true);
    for (const auto& t : g.terms()) {
      Series term({t.coef}, 0, true);
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        for (int k = 0; k < t.mono[i]; ++k) term = term * b[i];
      }
      acc = acc + term;
    }
    if (acc.order()) return false;
  }
  return true;
}

namespace {

Check make_check(std::string name, bool passed, std::string detail = {}) {
  return Check{std::move(name), passed, std::move(detail)};
}

}  // namespace

VerificationRecord verify_decomposition(const InnsPresentation& p) {
  VerificationRecord rec;
  const auto& comps = p.components;

  for (const auto& c : comps) {
    int d = krull_dim(c.prime);
    std::ostringstream os;
    os << "krull_dim = " << d << ", declared " << c.dimension;
    rec.checks.push_back(make_check("dimension of " + c.name, d == c.dimension && d >= 1, os.str()));
  }

  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const std::string pair = comps[i].name + ", " + comps[j].name;
      bool same = kernel::equal(comps[i].prime, comps[j].prime);
      rec.checks.push_back(make_check("distinct components " + pair, !same,
                                      same ? "the ideals coincide locally" : ""));
      if (same) continue;
      auto v = vdim(comps[i].prime + comps[j].prime);
      rec.checks.push_back(make_check("components meet only at the origin: " + pair, v.has_value(),
                                      v ? "" : "intersection is positive dimensional"));
    }
  }

  std::optional<Ideal> reduced;
  if (!comps.empty()) {
    std::vector<Ideal> primes;
    for (const auto& c : comps) primes.push_back(c.prime);
    reduced = kernel::ideal_intersection(primes);
  }

  if (p.embedded) {
    auto v = vdim(*p.embedded);
    bool primary = v.has_value() && *v > 0;
    rec.checks.push_back(make_check("embedded ideal is m-primary", primary,
                                    v ? "vdim = " + std::to_string(*v) : "infinite colength"));
    if (reduced && primary) {
      bool redundant = kernel::is_subset(*reduced, *p.embedded);
      rec.checks.push_back(make_check("embedded component is irredundant", !redundant,
                                      redundant ? "Q contains the intersection of the components" : ""));
    }
  }

  if (p.full) {
    for (const auto& c : comps) {
      rec.checks.push_back(make_check("I contained in " + c.name, kernel::is_subset(*p.full, c.prime)));
    }
    if (p.embedded) {
      rec.checks.push_back(make_check("I contained in Q", kernel::is_subset(*p.full, *p.embedded)));
      Ideal all = reduced ? kernel::ideal_intersection(*reduced, *p.embedded) : *p.embedded;
      rec.checks.push_back(make_check("intersection of the pieces equals I", kernel::equal(all, *p.full)));
    } else if (reduced) {
      bool finite = true;
      std::string detail;
      try {
        kernel::vdim_quotient(*reduced, *p.full);
      } catch (const kernel::QuotientError& e) {
        finite = false;
        detail = e.what();
      }
      rec.checks.push_back(make_check("I agrees with the components away from the origin", finite, detail));
    } else {
      auto v = vdim(*p.full);
      rec.checks.push_back(make_check("zero-dimensional germ", v.has_value() && *v > 0,
                                      v ? "" : "I is positive dimensional but no components are given"));
    }
  }

  if (!p.full && !p.embedded && comps.empty()) {
    rec.checks.push_back(make_check("presentation is nonempty", false, "no components, Q or I given"));
  }

  for (const auto& c : comps) {
    for (std::size_t k = 0; k < c.branches.size(); ++k) {
      bool on = false;
      std::string detail;
      try {
        on = branch_lies_on(c.branches[k], c.prime);
      } catch (const std::exception& e) {
        detail = e.what();
      }
      rec.checks.push_back(make_check("branch " + std::to_string(k + 1) + " lies on " + c.name, on, detail));
    }
  }
  return rec;
}

}  // namespace inns::invariants
