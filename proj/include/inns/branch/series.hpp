#ifndef INNS_BRANCH_SERIES_HPP
#define INNS_BRANCH_SERIES_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "inns/kernel/polynomial.hpp"

namespace inns::branch {

using kernel::Rational;

/// Raised when a result depends on coefficients beyond the known precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Univariate power series over Q truncated at `precision`: coefficients of
/// t^0..t^precision are known, higher ones are not. Exact series (from a
/// polynomial) know that all higher coefficients vanish.
class Series {
 public:
  Series() = default;
  Series(std::vector<Rational> coefficients, int precision, bool exact);

  static Series zero(int precision, bool exact = true);
  static Series monomial(const Rational& c, int exponent, int precision);

  int precision() const { return prec_; }
  bool exact() const { return exact_; }
  // Coefficient of t^k; throws PrecisionError past the precision of an
  // inexact series.
  Rational operator[](int k) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  // Lowest exponent with nonzero coefficient; nullopt if zero up to the
  // precision (and, for exact series, identically zero).
  std::optional<int> order() const;
  bool is_identically_zero() const { return exact_ && c_.empty(); }
  // Exponents with nonzero coefficient, ascending.
  std::vector<int> support() const;

  // Exact series may be regarded at any precision.
  Series with_precision(int precision) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator*(const Rational& c) const;
  // Divide by t^k; requires order >= k.
  Series shift_down(int k) const;
  // 1/s for s with nonzero constant term.
  Series inverse() const;
  // (1 + w)^(p/q) for w with zero constant term, computed from this = 1 + w.
  Series rational_power(const Rational& exponent) const;
  // this(g(t)) for g with zero constant term.
  Series compose(const Series& g) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  void normalize();

  std::vector<Rational> c_;  // trailing zeros trimmed
  int prec_ = 0;
  bool exact_ = false;
};

}  // namespace inns::branch

#endif  // INNS_BRANCH_SERIES_HPP
