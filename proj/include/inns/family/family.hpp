#ifndef INNS_FAMILY_FAMILY_HPP
#define INNS_FAMILY_FAMILY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inns/invariants/report.hpp"

namespace inns::family {

using invariants::InnsPresentation;
using invariants::InvariantReport;
using kernel::Ideal;
using kernel::Polynomial;
using kernel::Rational;
using kernel::RingPtr;

/// Irreducible component X_i of the total space, given by its prime in the
/// ring that includes the parameter.
struct TotalComponent {
  std::string name;
  Ideal prime;
  int dimension = 2;
};

/// Local data for the fibre of one total component at a point.
struct FibreComponentData {
  std::optional<std::int64_t> branch_count;
  std::optional<std::int64_t> delta;
  std::optional<bool> smooth;
};

/// A point of X_t as a function of t. Coordinates are polynomials in the
/// family ring that involve only the parameter; empty means the origin.
struct PointSection {
  std::string name;
  std::vector<Polynomial> coordinates;
};

/// f: (X, x) -> (C, 0) given by the total space X = X_1 cup ... cup X_r and
/// the parameter t. Fibre invariants at t = c are sums of the local
/// invariants at sigma(c) and at the extra points, which name further
/// singular points of X_c that tend to sigma(0).
struct FamilyPresentation {
  RingPtr ring;  // local ordering, contains the parameter
  std::string parameter = "t";
  std::vector<TotalComponent> components;
  PointSection section{"sigma", {}};
  std::vector<PointSection> extra_points;
  std::map<std::string, FibreComponentData> central;  // t = 0
  std::map<std::string, FibreComponentData> generic;  // t = sample
  std::vector<Rational> samples{Rational(1), Rational(1, 2), Rational(-1, 3)};
};

class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when invariants differ between sample values of t.
class GenericityError : public FamilyError {
 public:
  using FamilyError::FamilyError;
};

struct Options {
  invariants::Options invariant_options{invariants::BranchCountPolicy::Require, 2};
  std::optional<std::vector<Rational>> samples;  // overrides the presentation
};

/// Fibre ring: the family ring without the parameter, local ordering.
RingPtr fibre_ring(const FamilyPresentation& fam);

/// Coordinates of a section at t = c.
std::vector<Rational> evaluate_section(const FamilyPresentation& fam, const PointSection& s,
                                       const Rational& c);

/// Local presentation of X_c at the given point, re-verified. Components not
/// passing through the point are dropped. Throws VerificationError.
InnsPresentation fibre_at_point(const FamilyPresentation& fam, const Rational& c,
                                const std::vector<Rational>& point);

/// Local presentation of X_c at sigma(c).
InnsPresentation fibre_at(const FamilyPresentation& fam, const Rational& c);

struct PointReport {
  std::string point;
  std::vector<Rational> coordinates;
  InvariantReport report;
};

/// Invariants of X_c summed over sigma(c), the extra points and the isolated
/// points coming from one-dimensional total components (c != 0 only).
struct FibreInvariants {
  Rational parameter;
  std::vector<PointReport> points;
  std::int64_t isolated_points = 0;
  std::int64_t delta = 0;
  std::int64_t epsilon = 0;
  std::int64_t r = 0;
  std::int64_t r_prime = 0;
  std::int64_t mu = 0;
  std::optional<std::int64_t> mt;  // at sigma(c)
  std::int64_t chained_intersection_sum = 0;
  std::vector<std::string> warnings;
};

FibreInvariants fibre_invariants(const FamilyPresentation& fam, const Rational& c,
                                 const Options& opts = {});

/// Invariants at every sample; throws GenericityError on disagreement.
std::vector<FibreInvariants> generic_invariants(const FamilyPresentation& fam,
                                                const Options& opts = {});

/// Number of one-dimensional total components; throws FamilyError when a
/// dimension tag disagrees with krull_dim.
std::int64_t r1_count(const FamilyPresentation& fam);

/// dim O/(intersection of the one-dimensional P_i + <t>), the number of
/// isolated points of X_t with multiplicity.
std::int64_t isolated_point_count(const FamilyPresentation& fam);

/// dim O_{X_i}/<t> = dim X_i - 1 for every component.
bool is_active(const FamilyPresentation& fam);

struct ComponentGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t connected_components = 0;
  bool connected() const { return connected_components == 1; }
};

/// Graph on the >=2-dimensional components with an edge when P_i + P_j
/// defines a set of positive dimension.
ComponentGraph component_graph(const FamilyPresentation& fam);

/// The graph G(f): edge when P_i + P_j + <t> has positive dimension.
ComponentGraph connectivity_graph(const FamilyPresentation& fam);

/// b_0(X^{>1} minus x) plus the isolated points.
std::int64_t milnor_fibre_b0(const FamilyPresentation& fam);

/// Expected sum of local chained intersection numbers of X_c over all
/// points near the origin: sum_i dim O/((P_i + cap_{j>i} P_j) : t^inf + <t>).
std::optional<std::int64_t> expected_intersection_points(const FamilyPresentation& fam);

struct FamilyReport {
  FibreInvariants central;
  FibreInvariants generic;  // first sample
  std::vector<FibreInvariants> samples;

  std::int64_t r1 = 0;
  std::int64_t isolated_points = 0;
  bool active = true;

  std::int64_t delta_jump = 0;
  std::int64_t epsilon_jump = 0;
  std::int64_t mu_jump = 0;
  std::int64_t epsilon_higher_central = 0;  // epsilon(X_0^{>1})
  bool epsilon_jump_matches = true;
  bool delta_constant = false;
  bool equinormalizable = false;
  bool semicontinuity_ok = true;
  bool mu_semicontinuity_violation = false;

  ComponentGraph graph;                // used for b_0
  ComponentGraph connectivity;         // G(f)
  std::int64_t b0_milnor_fibre = 0;
  std::optional<std::int64_t> expected_intersections;

  std::optional<bool> weak_normalization_constant;
  std::int64_t euler_char_fibre = 0;
  std::int64_t b1_milnor_fibre = 0;
  std::optional<bool> topologically_trivial;
  std::optional<bool> triviality_iv;  // pure 2-dim, delta and r constant
  std::optional<bool> strong_resolution;

  std::vector<std::string> warnings;
};

/// Verifies, then assembles every family-level verdict.
FamilyReport family_report(const FamilyPresentation& fam, const Options& opts = {});

/// Same family with the parameter replaced by c * t.
FamilyPresentation rescale_parameter(const FamilyPresentation& fam, const Rational& c);

}  // namespace inns::family

#endif  // INNS_FAMILY_FAMILY_HPP
