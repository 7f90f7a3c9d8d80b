#include "tate/order.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tate {

namespace {

std::strong_ordering lex_compare(std::span<const Monomial::Exponent> a,
                                 std::span<const Monomial::Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_compare(std::span<const Monomial::Exponent> a,
                                     std::span<const Monomial::Exponent> b) {
  std::int64_t da = 0;
  std::int64_t db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

class OrderParser {
 public:
  explicit OrderParser(std::string_view text) : text_(text) {}

  MonomialOrder parse() {
    MonomialOrder o = parse_order();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return o;
  }

 private:
  MonomialOrder parse_order() {
    skip_ws();
    if (consume("grevlex")) return MonomialOrder::grevlex();
    if (consume("lex")) return MonomialOrder::lex();
    if (consume("block")) {
      expect('(');
      skip_ws();
      std::size_t k = 0;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = k * 10 + static_cast<std::size_t>(text_[pos_] - '0');
        ++pos_;
      }
      if (pos_ == start) fail("expected block size");
      expect(';');
      MonomialOrder first = parse_order();
      expect(';');
      MonomialOrder rest = parse_order();
      expect(')');
      return MonomialOrder::block(k, std::move(first), std::move(rest));
    }
    fail("unknown monomial order");
  }

  bool consume(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("monomial order '" + std::string(text_) + "': " + what + " at position " +
                                std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("log-radius too large");
  return z.get_si();
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Gauss valuation overflow");
  return r;
}

std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("Gauss valuation overflow");
  return r;
}

}  // namespace

MonomialOrder MonomialOrder::block(std::size_t first_block_size, MonomialOrder first, MonomialOrder rest) {
  MonomialOrder o(Kind::Block);
  o.first_size_ = first_block_size;
  o.first_ = std::make_shared<const MonomialOrder>(std::move(first));
  o.rest_ = std::make_shared<const MonomialOrder>(std::move(rest));
  return o;
}

MonomialOrder MonomialOrder::parse(std::string_view text) { return OrderParser(text).parse(); }

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: break;
  }
  return "block(" + std::to_string(first_size_) + ";" + first_->to_string() + ";" + rest_->to_string() + ")";
}

std::strong_ordering MonomialOrder::compare(std::span<const Monomial::Exponent> a,
                                            std::span<const Monomial::Exponent> b) const {
  if (a.size() != b.size()) throw std::invalid_argument("monomials over different variable counts");
  switch (kind_) {
    case Kind::Lex: return lex_compare(a, b);
    case Kind::Grevlex: return grevlex_compare(a, b);
    case Kind::Block: break;
  }
  const std::size_t k = std::min(first_size_, a.size());
  if (auto c = first_->compare(a.first(k), b.first(k)); c != 0) return c;
  return rest_->compare(a.subspan(k), b.subspan(k));
}

MonomialOrder MonomialOrder::without_variable(std::size_t index) const {
  if (kind_ != Kind::Block) return *this;
  if (index < first_size_) {
    if (first_size_ == 1) return *rest_;
    return block(first_size_ - 1, first_->without_variable(index), *rest_);
  }
  return block(first_size_, *first_, rest_->without_variable(index - first_size_));
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != MonomialOrder::Kind::Block) return true;
  return a.first_size_ == b.first_size_ && *a.first_ == *b.first_ && *a.rest_ == *b.rest_;
}

LogRadii parse_log_radii(std::string_view text) {
  LogRadii radii;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    ExtValue v;
    try {
      v = ExtValue::parse(item);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed log-radius '" + std::string(item) + "'");
    }
    if (v.is_neg_inf()) throw std::invalid_argument("log-radius -inf is not allowed");
    radii.push_back(std::move(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return radii;
}

std::string to_string(const LogRadii& radii) {
  std::string s;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i) s += ',';
    s += radii[i].to_string();
  }
  return s;
}

LogRadii zero_radii(std::size_t nvars) { return LogRadii(nvars, ExtValue(0)); }

bool all_finite(const LogRadii& radii) {
  return std::all_of(radii.begin(), radii.end(), [](const ExtValue& v) { return v.is_finite(); });
}

TateOrder::TateOrder(LogRadii radii, MonomialOrder tiebreak, PrimeContext prime)
    : radii_(std::move(radii)), tiebreak_(std::move(tiebreak)), prime_(prime) {
  mpz_class den = 1;
  for (const ExtValue& r : radii_) {
    if (r.is_neg_inf()) throw std::invalid_argument("log-radius -inf is not allowed");
    if (r.is_pos_inf()) {
      has_infinite_ = true;
      continue;
    }
    mpz_class d = r.finite().denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  denominator_ = to_int64(den);
  scaled_radii_.reserve(radii_.size());
  for (const ExtValue& r : radii_) {
    if (!r.is_finite()) {
      scaled_radii_.push_back(0);
      continue;
    }
    mpq_class scaled = r.finite().value() * mpq_class(den);
    scaled.canonicalize();
    scaled_radii_.push_back(to_int64(scaled.get_num()));
  }
}

TateOrder TateOrder::homogenized(const TateOrder& base) {
  if (base.homogenized_) return base;
  LogRadii radii = base.radii_;
  radii.emplace_back(0);
  TateOrder o(std::move(radii), base.tiebreak_, base.prime_);
  o.homogenized_ = true;
  return o;
}

TateOrder TateOrder::with_radii(LogRadii radii) const {
  if (radii.size() != radii_.size()) throw std::invalid_argument("radii dimension mismatch");
  TateOrder o(std::move(radii), tiebreak_, prime_);
  o.homogenized_ = homogenized_;
  return o;
}

void TateOrder::check_dims(const Monomial& m) const {
  if (m.size() != radii_.size()) {
    throw std::invalid_argument("term has " + std::to_string(m.size()) + " variables, order has " +
                                std::to_string(radii_.size()));
  }
}

TermKey TateOrder::key(long coeff_valuation, const Monomial& m) const {
  check_dims(m);
  TermKey k;
  std::int64_t v = mul_checked(coeff_valuation, denominator_);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!radii_[i].is_finite()) {
      k.inf_degree += m[i];
    } else {
      v = sub_checked(v, mul_checked(scaled_radii_[i], m[i]));
    }
  }
  k.scaled_valuation = v;
  return k;
}

std::strong_ordering TateOrder::compare(const TermKey& ka, const Monomial& a, const TermKey& kb,
                                        const Monomial& b) const {
  if (ka.inf_degree != kb.inf_degree) return ka.inf_degree <=> kb.inf_degree;
  if (ka.scaled_valuation != kb.scaled_valuation) return kb.scaled_valuation <=> ka.scaled_valuation;
  if (!homogenized_) return tiebreak_.compare(a, b);
  if (auto d = a.degree() <=> b.degree(); d != 0) return d;
  const std::size_t n = a.size() - 1;
  return tiebreak_.compare(a.exponents().first(n), b.exponents().first(n));
}

std::strong_ordering TateOrder::compare(const Term& a, const Term& b) const {
  return compare(key(a), a.mono, key(b), b.mono);
}

ExtValue TateOrder::gauss_valuation(const Term& t) const {
  const TermKey k = key(t);
  if (k.inf_degree > 0) return ExtValue::neg_inf();
  return ExtValue(Rational(k.scaled_valuation) / Rational(denominator_));
}

Rational TateOrder::finite_gauss_valuation(long coeff_valuation, const Monomial& m) const {
  const TermKey k = key(coeff_valuation, m);
  return Rational(k.scaled_valuation) / Rational(denominator_);
}

std::string TateOrder::describe() const {
  std::ostringstream os;
  os << "p=" << prime_.p() << " r=(" << to_string(radii_) << ") order=" << tiebreak_.to_string();
  if (homogenized_) os << " homogenized";
  return os.str();
}

ExtValue gauss_valuation_term(const Term& t, const TateOrder& o) { return o.gauss_valuation(t); }

std::strong_ordering compare_terms(const Term& a, const Term& b, const TateOrder& o) {
  return o.compare(a, b);
}

std::strong_ordering compare_terms_homog(const Term& a, const Term& b, const TateOrder& o) {
  if (o.is_homogenized()) return o.compare(a, b);
  return TateOrder::homogenized(o).compare(a, b);
}

bool term_divides(const Term& a, const Term& b) { return a.mono.divides(b.mono); }

}  // namespace tate
