#pragma once

#include "tate/monomial.hpp"
#include "tate/rational.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tate {

/// a * X^alpha with a != 0.
struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Classical monomial order <=_m used as tie-break. lex and grevlex apply
/// to any number of variables; block(k; A; B) compares the first k
/// variables with A and, on a tie, the remaining ones with B.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
  static MonomialOrder block(std::size_t first_block_size, MonomialOrder first, MonomialOrder rest);

  /// "lex", "grevlex" or "block(k;inner1;inner2)", nesting allowed.
  static MonomialOrder parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::size_t first_block_size() const { return first_size_; }
  std::string to_string() const;

  std::strong_ordering compare(std::span<const Monomial::Exponent> a,
                               std::span<const Monomial::Exponent> b) const;
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return compare(a.exponents(), b.exponents());
  }

  /// The order induced on the algebra with variable `index` deleted.
  MonomialOrder without_variable(std::size_t index) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Grevlex;
  std::size_t first_size_ = 0;
  std::shared_ptr<const MonomialOrder> first_;
  std::shared_ptr<const MonomialOrder> rest_;
};

/// Convergence log-radii, one per variable: finite rationals or +inf.
using LogRadii = std::vector<ExtValue>;

/// "inf,0,0,1/2". Throws std::invalid_argument on malformed entries or -inf.
LogRadii parse_log_radii(std::string_view text);
std::string to_string(const LogRadii& radii);
LogRadii zero_radii(std::size_t nvars);
bool all_finite(const LogRadii& radii);

/// Comparison key of a term: (degree in +inf-radius variables, Gauss
/// valuation of the finite part scaled by the common denominator of the
/// radii). Larger first component and smaller second component mean a
/// larger term.
struct TermKey {
  std::int64_t inf_degree = 0;
  std::int64_t scaled_valuation = 0;
};

/// The Tate term order <_r: lower Gauss valuation is larger, ties broken by
/// the classical monomial order. Terms involving a +inf-radius variable have
/// Gauss valuation -inf and dominate every term that does not.
///
/// The homogenized variant (see `homogenized`) lives on K{X,t; r,0} with t
/// the last variable, and inserts a total-degree comparison between the
/// valuation and the tie-break on the X-part.
class TateOrder {
 public:
  TateOrder(LogRadii radii, MonomialOrder tiebreak, PrimeContext prime);

  static TateOrder homogenized(const TateOrder& base);

  std::size_t nvars() const { return radii_.size(); }
  const LogRadii& radii() const { return radii_; }
  const MonomialOrder& tiebreak() const { return tiebreak_; }
  const PrimeContext& prime() const { return prime_; }
  bool is_homogenized() const { return homogenized_; }
  bool has_infinite_radii() const { return has_infinite_; }

  /// Same tie-break and prime with different radii.
  TateOrder with_radii(LogRadii radii) const;

  TermKey key(long coeff_valuation, const Monomial& m) const;
  TermKey key(const Term& t) const { return key(prime_.valuation(t.coeff), t.mono); }

  std::strong_ordering compare(const TermKey& ka, const Monomial& a, const TermKey& kb,
                               const Monomial& b) const;
  std::strong_ordering compare(const Term& a, const Term& b) const;

  ExtValue gauss_valuation(const Term& t) const;
  /// val(c) - r.alpha restricted to finite-radius variables.
  Rational finite_gauss_valuation(long coeff_valuation, const Monomial& m) const;

  std::string describe() const;

 private:
  void check_dims(const Monomial& m) const;

  LogRadii radii_;
  MonomialOrder tiebreak_;
  PrimeContext prime_;
  bool homogenized_ = false;
  bool has_infinite_ = false;
  // radii scaled to integers by a common denominator; 0 at +inf entries.
  std::vector<std::int64_t> scaled_radii_;
  std::int64_t denominator_ = 1;
};

ExtValue gauss_valuation_term(const Term& t, const TateOrder& o);
std::strong_ordering compare_terms(const Term& a, const Term& b, const TateOrder& o);
/// Terms over K{X,t; r,0} with t last. `o` may be the base order on X or an
/// already homogenized order.
std::strong_ordering compare_terms_homog(const Term& a, const Term& b, const TateOrder& o);
/// Monomial divisibility; coefficients are units over K.
bool term_divides(const Term& a, const Term& b);

}  // namespace tate
