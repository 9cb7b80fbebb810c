#ifndef INNS_INVARIANTS_REPORT_HPP
#define INNS_INVARIANTS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inns/invariants/presentation.hpp"

namespace inns::invariants {

/// How to obtain the branch count of a singular planar component whose
/// tangent cone is not squarefree.
enum class BranchCountPolicy {
  AssumeIrreducible,  // components are declared prime: r_i = 1, with a warning
  Require,            // fibre components may split: demand declared data
};

struct Options {
  BranchCountPolicy branch_policy = BranchCountPolicy::AssumeIrreducible;
  int max_precision_retries = 2;
};

struct ComponentDelta {
  std::string name;
  std::int64_t delta = 0;
  std::int64_t branch_count = 1;
  std::string source;  // "smooth", "branches", "declared", "planar"
  std::optional<std::int64_t> multiplicity;

  friend bool operator==(const ComponentDelta&, const ComponentDelta&) = default;
};

struct InvariantReport {
  int dimension = 0;
  std::int64_t epsilon = 0;
  std::int64_t delta_positive = 0;
  std::int64_t delta = 0;
  std::int64_t r = 1;
  std::int64_t r_prime = 0;
  std::int64_t mu = 0;
  std::optional<std::int64_t> mt;
  std::optional<std::int64_t> epsilon_embedded_route;  // vdim(Q) - vdim(I^{>0}+Q)
  std::optional<std::int64_t> epsilon_quotient_route;  // dim I^{>0}/I
  std::optional<std::int64_t> vdim_embedded;            // vdim(Q)
  std::optional<std::int64_t> vdim_reduced_plus_embedded;  // vdim(I^{>0}+Q)
  std::vector<ComponentDelta> components;
  // Pairwise (X_i, X_j)_0; diagonal unused (0).
  std::vector<std::vector<std::int64_t>> intersection_matrix;
  // (X_i, X_{i+1} cup ... cup X_r)_0.
  std::vector<std::int64_t> chained_intersections;
  std::vector<std::string> warnings;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// dim O/(A + B); throws kernel::QuotientError if infinite.
std::int64_t intersection_number(const Ideal& A, const Ideal& B);

/// Linear-part rank test: smooth of dimension d at the origin.
bool is_smooth_at_origin(const Ideal& prime, int dimension);

/// Number of distinct lines in the tangent cone if it is squarefree (so
/// the planar curve h has an ordinary m-fold point); nullopt otherwise.
std::optional<std::int64_t> ordinary_branch_count(const Polynomial& h);

/// Reduce a one-dimensional ideal to a principal plane-curve ideal by
/// eliminating variables that occur as x_j - h(others). nullopt if that
/// does not reach two variables and one generator.
std::optional<Polynomial> planar_equation(const Ideal& prime);

ComponentDelta component_delta(const ComponentPresentation& c, const Options& opts,
                               std::vector<std::string>& warnings);

struct DeltaPositive {
  std::int64_t value = 0;
  std::vector<ComponentDelta> components;
  std::vector<std::int64_t> chained;
};

DeltaPositive delta_positive(const InnsPresentation& p, const Options& opts,
                             std::vector<std::string>& warnings);

/// I^{>0} = P_1 cap ... cap P_r, or the unit ideal without components.
Ideal reduced_ideal(const InnsPresentation& p);

/// Full ideal I, computing P_1 cap ... cap P_r cap Q when only Q is given.
Ideal full_ideal(const InnsPresentation& p);

struct EpsilonRoutes {
  std::int64_t value = 0;
  std::optional<std::int64_t> embedded_route;
  std::optional<std::int64_t> quotient_route;
  std::optional<std::int64_t> vdim_embedded;
  std::optional<std::int64_t> vdim_sum;
};

EpsilonRoutes epsilon(const InnsPresentation& p);

/// Verifies, then assembles all invariants. Throws VerificationError.
InvariantReport invariant_report(const InnsPresentation& p, const Options& opts = {});

std::int64_t milnor_number_jacobian(const Polynomial& f);
std::int64_t tjurina_number(const Polynomial& f);

struct PlaneCurve {
  Polynomial equation;
  std::vector<branch::Branch> branches;
};

struct MilnorCheck {
  std::int64_t mu_jacobian = 0;
  std::int64_t delta = 0;
  std::int64_t r = 0;
  bool holds = false;
};

/// Compares the Jacobian Milnor number with 2 delta - r + 1.
MilnorCheck milnor_formula_check(const PlaneCurve& curve);

/// delta of a reduced plane curve from its branches.
std::int64_t plane_curve_delta(const std::vector<branch::Branch>& branches);

struct WeakNormality {
  bool weakly_normal = false;
  std::int64_t delta = 0;
  std::int64_t r_prime = 0;
};

/// delta = r' test for reduced presentations of dimension >= 1.
WeakNormality is_ordinary_weakly_normal(const InnsPresentation& p, const Options& opts = {});

}  // namespace inns::invariants

#endif  // INNS_INVARIANTS_REPORT_HPP
