#include "tate/rational.hpp"

#include <cctype>
#include <ostream>

namespace tate {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, 1) / mpq_class(den, 1);
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (sgn(d) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

ExtValue ExtValue::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtValue(Rational::parse(text));
}

const Rational& ExtValue::finite() const {
  if (kind_ != Kind::Finite) throw std::logic_error("infinite value has no finite part");
  return value_;
}

std::string ExtValue::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: break;
  }
  return value_.to_string();
}

ExtValue ExtValue::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: break;
  }
  return ExtValue(-value_);
}

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
  if (a.is_finite() && b.is_finite()) return ExtValue(a.value_ + b.value_);
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw std::domain_error("inf + (-inf) is undefined");
  }
  return a.is_finite() ? b : a;
}

bool operator==(const ExtValue& a, const ExtValue& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtValue& v) { return os << v.to_string(); }

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeContext::PrimeContext(unsigned long p) : p_(p), pz_(p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

long PrimeContext::valuation(const mpz_class& n) const {
  if (sgn(n) == 0) throw std::domain_error("valuation of zero");
  if (mpz_divisible_ui_p(n.get_mpz_t(), p_) == 0) return 0;
  mpz_class rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz_.get_mpz_t()));
}

long PrimeContext::valuation(const Rational& q) const {
  if (q.is_zero()) throw std::domain_error("valuation of zero");
  const mpq_class& v = q.value();
  const long num = valuation(mpz_class(v.get_num()));
  if (num != 0) return num;  // lowest terms: p divides at most one side
  return -valuation(mpz_class(v.get_den()));
}

Rational PrimeContext::power(long k) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), pz_.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(mpz_class(1), r) : Rational(r, mpz_class(1));
}

ExtValue padic_valuation(const Rational& q, const PrimeContext& ctx) {
  if (q.is_zero()) return ExtValue::pos_inf();
  return ExtValue(Rational(ctx.valuation(q)));
}

}  // namespace tate
