#ifndef INNS_KERNEL_POLYNOMIAL_HPP
#define INNS_KERNEL_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "inns/kernel/monomial.hpp"
#include "inns/kernel/ring.hpp"

namespace inns::kernel {

/// Exact rationals, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

std::string to_string(const Rational& q);

struct Term {
  Monomial mono;
  Rational coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q. Terms are kept in descending order of the
/// ring's monomial ordering and never carry a zero coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial mono, const Rational& c);
  // Terms may be unsorted and contain duplicates or zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Rational& lead_coef() const { return terms_.front().coef; }

  // Maximal total degree of a term; -1 for zero.
  int degree() const;
  // Minimal total degree of a term (the order at the origin); -1 for zero.
  int order() const;
  // deg(f) - deg(LM(f)).
  int ecart() const;

  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  // *this - c*m*g, merged in one pass.
  Polynomial sub_mul_term(const Monomial& m, const Rational& c,
                          const Polynomial& g) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial monic() const;
  // Homogeneous part of total degree d.
  Polynomial homogeneous_part(int d) const;
  // Terms of total degree below `bound`.
  Polynomial truncated(int bound) const;
  bool involves(std::size_t var) const;

  /// Same terms, re-sorted under another ring with the same variables.
  Polynomial in_ring(RingPtr ring) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) {
  return p * c;
}

Polynomial pow(const Polynomial& p, unsigned e);

/// Ring homomorphism into `target`. Each variable of p's ring is mapped
/// either by `images` or, failing that, to the equally named variable of
/// the target ring. Throws std::invalid_argument for a variable with no
/// image.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                      const RingPtr& target);

/// Substitute x_i -> x_i + shift_i. Variables missing from `shift` stay.
Polynomial translate(const Polynomial& p, const std::vector<Rational>& shift);

/// Evaluate at a rational point.
Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

}  // namespace inns::kernel

#endif  // INNS_KERNEL_POLYNOMIAL_HPP
