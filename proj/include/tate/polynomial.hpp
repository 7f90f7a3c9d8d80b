#pragma once

#include "tate/order.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tate {

/// Sparse polynomial over Q: a finite map from exponent vectors to nonzero
/// rationals. Terms are kept sorted by exponent vector (storage order only);
/// leading terms are always computed against an explicit TateOrder.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial constant(std::size_t nvars, Rational c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial from_term(std::size_t nvars, Term t);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  /// Zero when the monomial is absent.
  Rational coefficient(const Monomial& m) const;
  bool contains(const Monomial& m) const;

  /// Total degree; -1 for the zero polynomial.
  std::int64_t degree() const;
  bool is_homogeneous() const;
  bool involves_variable(std::size_t index) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& f);

  /// c * m * this.
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  /// this -= c * m * g, in a single merge pass.
  void subtract_multiple(const Rational& c, const Monomial& m, const Polynomial& g);

  Polynomial with_variable_removed(std::size_t index) const;
  /// Appends a variable that does not occur.
  Polynomial with_variable_appended() const;
  /// New variable i is old variable perm[i].
  Polynomial permuted(std::span<const std::size_t> perm) const;
  /// Substitutes x_index = value and drops that variable.
  Polynomial substituted(std::size_t index, const Rational& value) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const Polynomial& o) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Index into f.terms() of the maximal term under o. Requires f != 0.
std::size_t leading_index(const Polynomial& f, const TateOrder& o);
/// Throws std::invalid_argument on the zero polynomial.
Term leading_term(const Polynomial& f, const TateOrder& o);
inline Monomial leading_monomial(const Polynomial& f, const TateOrder& o) { return leading_term(f, o).mono; }
inline Rational leading_coefficient(const Polynomial& f, const TateOrder& o) { return leading_term(f, o).coeff; }

/// Minimum Gauss valuation over the terms; +inf for zero.
ExtValue gauss_valuation_poly(const Polynomial& f, const TateOrder& o);

/// (LT(g)/gcd) f - (LT(f)/gcd) g with gcd the monic monomial gcd.
Polynomial spoly(const Polynomial& f, const Polynomial& g, const TateOrder& o);

/// Appends t as last variable; X^a -> X^a t^(deg f - |a|).
Polynomial homogenize(const Polynomial& f);
/// Sets the last variable to 1.
Polynomial dehomogenize(const Polynomial& h);
/// Same for a single term.
Term dehomogenize(const Term& t);

/// Exponents attaining val_s(f). Requires finite s; empty for f = 0.
std::vector<Monomial> support_s(const Polynomial& f, const LogRadii& s, const PrimeContext& p);
/// max over Supp_s(f) of (s - r).alpha. Throws on f = 0 or non-finite radii.
ExtValue deg_sr(const Polynomial& f, const LogRadii& s, const LogRadii& r, const PrimeContext& p);

/// Exact quotient g / f in Q[X], or nullopt when f does not divide g.
std::optional<Polynomial> exact_divide(const Polynomial& g, const Polynomial& f);

}  // namespace tate
