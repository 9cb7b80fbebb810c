#ifndef INNS_KERNEL_IDEAL_HPP
#define INNS_KERNEL_IDEAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "inns/kernel/polynomial.hpp"

namespace inns::kernel {

class StandardBasis;

/// Finitely generated ideal in the localization of Q[x] selected by the
/// ring's ordering (Q[x]_<x> for ds, Q[x] for dp). Zero generators are
/// dropped on construction.
class Ideal {
 public:
  explicit Ideal(RingPtr ring);
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Computed once and shared between copies.
  const StandardBasis& standard_basis() const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;

  std::string to_string() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

class StandardBasis {
 public:
  StandardBasis(RingPtr ring, std::vector<Polynomial> elements);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  // Minimal generators of the lead ideal.
  const std::vector<Monomial>& lead_ideal() const { return lead_; }
  bool complete() const { return true; }
  bool is_unit() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> lead_;
  int noether_ = -1;  // m^noether_ lies in the ideal; -1 if unknown
};

/// Weak normal form with respect to G. For global orderings this is
/// ordinary division of the lead term; otherwise Mora's ecart-driven
/// reduction. Zero iff f lies in <G> (localized) when G is a standard basis.
Polynomial mora_normal_form(const Polynomial& f, std::span<const Polynomial> G);

StandardBasis standard_basis(const Ideal& I);

/// Quotient dimension dim_Q(R/I); nullopt means infinite.
std::optional<std::int64_t> vdim(const Ideal& I);

class QuotientError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// dim_Q(J/I) for I contained in J with finite quotient; throws
/// QuotientError otherwise.
std::int64_t vdim_quotient(const Ideal& J, const Ideal& I);

/// Krull dimension of R/I; -1 for the unit ideal.
int krull_dim(const Ideal& I);

Ideal ideal_intersection(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(std::span<const Ideal> ideals);

/// I : f^infinity.
Ideal saturation(const Ideal& I, const Polynomial& f);

Ideal jacobian_ideal(const Polynomial& f);
Ideal tjurina_ideal(const Polynomial& f);

bool contains(const Ideal& I, const Polynomial& f);
bool is_subset(const Ideal& I, const Ideal& J);  // I contained in J
bool equal(const Ideal& I, const Ideal& J);

Ideal substitute(const Ideal& I, const std::map<std::string, Polynomial>& images,
                 const RingPtr& target);
Ideal translate(const Ideal& I, const std::vector<Rational>& shift);
Ideal in_ring(const Ideal& I, const RingPtr& ring);

/// m^d in the ring of I.
Ideal maximal_ideal_power(const RingPtr& ring, int d);

/// Counts of standard monomials of each total degree 0..max_degree.
std::vector<std::int64_t> hilbert_function(std::span<const Monomial> lead_ideal,
                                           std::size_t var_count, int max_degree);

/// Hilbert-Samuel multiplicity of R/I at the origin. For local orderings
/// the lead ideal is that of the tangent cone. nullopt for the unit ideal.
std::optional<std::int64_t> multiplicity(const Ideal& I);

/// Krull dimension of Q[x]/L for a monomial ideal L; -1 if L contains 1.
int monomial_dimension(std::span<const Monomial> gens, std::size_t var_count);
/// Number of monomials outside L; nullopt if infinite.
std::optional<std::int64_t> count_standard_monomials(std::span<const Monomial> gens,
                                                     std::size_t var_count);

}  // namespace inns::kernel

#endif  // INNS_KERNEL_IDEAL_HPP
