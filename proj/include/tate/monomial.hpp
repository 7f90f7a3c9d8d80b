#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tate {

/// Exponent vector X^alpha. The variable count is fixed by the surrounding
/// algebra; operations between monomials of different lengths throw
/// std::invalid_argument.
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  /// x_index in an algebra with nvars variables.
  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }

  /// Sum of exponents.
  std::int64_t degree() const;
  bool is_one() const;

  /// Componentwise <=.
  bool divides(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// Exact quotient; throws std::invalid_argument when `divisor` does not divide.
  Monomial divided_by(const Monomial& divisor) const;

  Monomial with_variable_removed(std::size_t index) const;
  Monomial with_variable_appended(Exponent e) const;

  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  /// Lexicographic comparison of exponent vectors. This is the storage
  /// order of polynomials, not a term order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  boost::container::small_vector<Exponent, 8> exps_;
};

}  // namespace tate
