#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tate {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts `[+-]digits[/digits]`. Anything else (floats, blanks) throws
  /// std::invalid_argument.
  static Rational parse(std::string_view text);

  std::string to_string() const { return q_.get_str(); }

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Smallest integer >= this.
  mpz_class ceil() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Rational extended with +inf and -inf. Valuations of zero and Gauss
/// valuations under infinite log-radii live here.
class ExtValue {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtValue() = default;
  ExtValue(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT
  ExtValue(long v) : kind_(Kind::Finite), value_(v) {}                 // NOLINT

  static ExtValue pos_inf() { return ExtValue(Kind::PosInf); }
  static ExtValue neg_inf() { return ExtValue(Kind::NegInf); }

  /// Accepts a rational or one of `inf`, `+inf`, `-inf`.
  static ExtValue parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Throws std::logic_error when infinite.
  const Rational& finite() const;

  std::string to_string() const;

  ExtValue operator-() const;
  /// (+inf) + (-inf) is undefined and throws std::domain_error.
  friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
  friend ExtValue operator-(const ExtValue& a, const ExtValue& b) { return a + (-b); }

  friend bool operator==(const ExtValue& a, const ExtValue& b);
  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);

 private:
  explicit ExtValue(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtValue& v);

/// A prime p, validated at construction. Provides the p-adic valuation on Q.
class PrimeContext {
 public:
  explicit PrimeContext(unsigned long p);

  unsigned long p() const { return p_; }

  /// v_p of a nonzero integer.
  long valuation(const mpz_class& n) const;
  /// v_p of a nonzero rational; throws std::domain_error on zero.
  long valuation(const Rational& q) const;

  /// p^k as a rational (k may be negative).
  Rational power(long k) const;

  friend bool operator==(const PrimeContext& a, const PrimeContext& b) { return a.p_ == b.p_; }

 private:
  unsigned long p_;
  mpz_class pz_;
};

bool is_prime(unsigned long n);

/// v_p(numerator) - v_p(denominator), or +inf for zero.
ExtValue padic_valuation(const Rational& q, const PrimeContext& ctx);

}  // namespace tate
