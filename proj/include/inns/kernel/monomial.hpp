#ifndef INNS_KERNEL_MONOMIAL_HPP
#define INNS_KERNEL_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace inns::kernel {

/// Exponent vector x^a over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t var_count) : exps_(var_count, 0) {}
  explicit Monomial(std::vector<int> exponents);
  Monomial(std::initializer_list<int> exponents) : exps_(exponents) {}

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Requires this divisible by other.
  Monomial operator/(const Monomial& other) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);

  // Total order on exponent vectors for use as container keys. Unrelated
  // to any monomial ordering of a ring.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

}  // namespace inns::kernel

#endif  // INNS_KERNEL_MONOMIAL_HPP
