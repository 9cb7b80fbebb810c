#ifndef INNS_BRANCH_BRANCH_HPP
#define INNS_BRANCH_BRANCH_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "inns/branch/series.hpp"

namespace inns::branch {

class BranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultPrecision = 32;

/// Parametrized curve germ t -> (x_1(t), ..., x_n(t)) at the origin.
class Branch {
 public:
  Branch(std::vector<Series> components, bool declared_injective = true);

  /// Exact branch from polynomials in one variable; the ring must have
  /// exactly one variable.
  static Branch from_polynomials(const std::vector<kernel::Polynomial>& components,
                                 int precision = kDefaultPrecision);
  /// Exact monomial branch (c_i t^{a_i}); a_i = 0 means the zero component.
  static Branch monomial(const std::vector<int>& exponents,
                         const std::vector<Rational>& coefficients = {},
                         int precision = kDefaultPrecision);

  std::size_t dimension() const { return comps_.size(); }
  const std::vector<Series>& components() const { return comps_; }
  const Series& operator[](std::size_t i) const { return comps_[i]; }
  int precision() const;
  bool exact() const;
  bool declared_injective() const { return injective_; }

  /// Same branch with exact components viewed at a new precision.
  Branch with_precision(int precision) const;

  /// Indices of components that are not identically zero.
  std::vector<std::size_t> support() const;

 private:
  std::vector<Series> comps_;
  bool injective_;
};

/// Minimal t-order over the components.
int branch_multiplicity(const Branch& b);

/// Lowest-order coefficient vector (coefficients of t^m, m the multiplicity).
std::vector<Rational> tangent_direction(const Branch& b);

struct BlowupResult {
  Branch strict_transform;
  std::size_t chart;                  // index of the dividing component
  std::vector<Rational> center;       // infinitely near point in the chart
};

/// Strict transform in the chart of the lowest-index minimal-order
/// component: x_k stays, x_j becomes x_j/x_k minus its constant term.
BlowupResult blowup_branch(const Branch& b);

struct MultSequence {
  std::vector<int> entries;  // trailing 1s trimmed
  bool resolved = false;
};

MultSequence multiplicity_sequence(const Branch& b);

using PuiseuxPair = std::pair<int, int>;
/// Pairs (n_k, m_k) with characteristic exponents beta_k: e_k =
/// gcd(e_{k-1}, beta_k), n_k = e_{k-1}/e_k, m_k = beta_k/e_k. The cusp
/// (t^2, t^3) gives [(2,3)].
using PuiseuxPairs = std::vector<PuiseuxPair>;

/// Characteristic exponents (beta_0; beta_1, ...) of a plane branch.
std::vector<int> characteristic_exponents(const Branch& b);
PuiseuxPairs puiseux_pairs(const Branch& b);

/// Number of gaps of the numerical semigroup generated by `generators`.
std::int64_t semigroup_gaps(const std::vector<int>& generators);

/// True if at most two components are nonzero.
bool is_plane(const Branch& b);
/// True if every nonzero component is exact with a single term.
bool is_monomial(const Branch& b);

/// delta of one branch: 0 if smooth, multiplicity sequence for plane
/// branches, semigroup gaps for monomial ones. Other branches throw.
std::int64_t delta_branch(const Branch& b);

/// Intersection multiplicity of two plane branches by Noether's recursion.
std::int64_t intersection_multiplicity_branches(const Branch& a, const Branch& b);

}  // namespace inns::branch

#endif  // INNS_BRANCH_BRANCH_HPP
