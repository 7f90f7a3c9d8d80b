#include "tate/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace tate {

namespace {

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == acc.mono) {
      acc.coeff += terms[j].coeff;
      ++j;
    }
    if (!acc.coeff.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

TateOrder valuation_order(const LogRadii& s, const PrimeContext& p) {
  if (!all_finite(s)) throw std::invalid_argument("s-radii must be finite");
  return TateOrder(s, MonomialOrder::grevlex(), p);
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    if (t.mono.size() != nvars_) throw std::invalid_argument("term variable count mismatch");
  }
  canonicalize(terms_);
}

Polynomial Polynomial::constant(std::size_t nvars, Rational c) {
  Polynomial f(nvars);
  if (!c.is_zero()) f.terms_.push_back(Term{std::move(c), Monomial(nvars)});
  return f;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial f(nvars);
  f.terms_.push_back(Term{Rational(1), Monomial::variable(nvars, index)});
  return f;
}

Polynomial Polynomial::from_term(std::size_t nvars, Term t) {
  std::vector<Term> terms;
  terms.push_back(std::move(t));
  return Polynomial(nvars, std::move(terms));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational(0);
}

bool Polynomial::contains(const Monomial& m) const { return !coefficient(m).is_zero(); }

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::int64_t d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

bool Polynomial::involves_variable(std::size_t index) const {
  if (index >= nvars_) throw std::invalid_argument("variable index out of range");
  return std::any_of(terms_.begin(), terms_.end(), [index](const Term& t) { return t.mono[index] != 0; });
}

void Polynomial::check_same(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials over different variable counts");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  subtract_multiple(Rational(-1), Monomial(nvars_), o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  subtract_multiple(Rational(1), Monomial(nvars_), o);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) terms.push_back(Term{s.coeff * t.coeff, s.mono * t.mono});
  }
  return Polynomial(a.nvars_, std::move(terms));
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  if (c.is_zero()) return Polynomial(f.nvars_);
  Polynomial r = f;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  if (m.size() != nvars_) throw std::invalid_argument("term variable count mismatch");
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the storage order
  for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff * c, t.mono * m});
  return r;
}

void Polynomial::subtract_multiple(const Rational& c, const Monomial& m, const Polynomial& g) {
  check_same(g);
  if (m.size() != nvars_) throw std::invalid_argument("term variable count mismatch");
  if (c.is_zero() || g.is_zero()) return;
  if (&g == this) {
    const Polynomial copy = g;
    subtract_multiple(c, m, copy);
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  for (const Term& gt : g.terms_) {
    Monomial shifted = gt.mono * m;
    while (it != terms_.end() && it->mono < shifted) out.push_back(std::move(*it++));
    Rational prod = c * gt.coeff;
    if (it != terms_.end() && it->mono == shifted) {
      it->coeff -= prod;
      if (!it->coeff.is_zero()) out.push_back(std::move(*it));
      ++it;
    } else {
      out.push_back(Term{-prod, std::move(shifted)});
    }
  }
  while (it != terms_.end()) out.push_back(std::move(*it++));
  terms_ = std::move(out);
}

Polynomial Polynomial::with_variable_removed(std::size_t index) const {
  if (index >= nvars_) throw std::invalid_argument("variable index out of range");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (t.mono[index] != 0) throw std::invalid_argument("polynomial involves the removed variable");
    terms.push_back(Term{t.coeff, t.mono.with_variable_removed(index)});
  }
  return Polynomial(nvars_ - 1, std::move(terms));
}

Polynomial Polynomial::with_variable_appended() const {
  Polynomial r(nvars_ + 1);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff, t.mono.with_variable_appended(0)});
  return r;
}

Polynomial Polynomial::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != nvars_) throw std::invalid_argument("permutation size mismatch");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  std::vector<Monomial::Exponent> exps(nvars_);
  for (const Term& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) exps[i] = t.mono[perm[i]];
    terms.push_back(Term{t.coeff, Monomial(std::span<const Monomial::Exponent>(exps))});
  }
  return Polynomial(nvars_, std::move(terms));
}

Polynomial Polynomial::substituted(std::size_t index, const Rational& value) const {
  if (index >= nvars_) throw std::invalid_argument("variable index out of range");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const Term& t : terms_) {
    Rational c = t.coeff;
    for (Monomial::Exponent e = 0; e < t.mono[index]; ++e) c *= value;
    if (c.is_zero()) continue;
    Monomial m = t.mono;
    terms.push_back(Term{std::move(c), m.with_variable_removed(index)});
  }
  return Polynomial(nvars_ - 1, std::move(terms));
}

std::size_t leading_index(const Polynomial& f, const TateOrder& o) {
  if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  const auto terms = f.terms();
  std::size_t best = 0;
  TermKey best_key = o.key(terms[0]);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    TermKey k = o.key(terms[i]);
    if (o.compare(k, terms[i].mono, best_key, terms[best].mono) > 0) {
      best = i;
      best_key = k;
    }
  }
  return best;
}

Term leading_term(const Polynomial& f, const TateOrder& o) { return f.terms()[leading_index(f, o)]; }

ExtValue gauss_valuation_poly(const Polynomial& f, const TateOrder& o) {
  ExtValue v = ExtValue::pos_inf();
  for (const Term& t : f.terms()) v = std::min(v, o.gauss_valuation(t));
  return v;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const TateOrder& o) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of the zero polynomial");
  const Term lf = leading_term(f, o);
  const Term lg = leading_term(g, o);
  const Monomial common = gcd(lf.mono, lg.mono);
  Polynomial s = f.times_term(lg.coeff, lg.mono.divided_by(common));
  s.subtract_multiple(lf.coeff, lf.mono.divided_by(common), g);
  return s;
}

Polynomial homogenize(const Polynomial& f) {
  const std::int64_t d = f.degree();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    terms.push_back(Term{t.coeff, t.mono.with_variable_appended(static_cast<Monomial::Exponent>(d - t.mono.degree()))});
  }
  return Polynomial(f.nvars() + 1, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& h) {
  if (h.nvars() == 0) throw std::invalid_argument("dehomogenize needs at least one variable");
  return h.substituted(h.nvars() - 1, Rational(1));
}

Term dehomogenize(const Term& t) {
  if (t.mono.size() == 0) throw std::invalid_argument("dehomogenize needs at least one variable");
  return Term{t.coeff, t.mono.with_variable_removed(t.mono.size() - 1)};
}

std::vector<Monomial> support_s(const Polynomial& f, const LogRadii& s, const PrimeContext& p) {
  const TateOrder vs = valuation_order(s, p);
  std::vector<Monomial> support;
  if (f.is_zero()) return support;
  std::int64_t best = 0;
  bool first = true;
  for (const Term& t : f.terms()) {
    const std::int64_t v = vs.key(t).scaled_valuation;
    if (first || v < best) {
      support.clear();
      best = v;
      first = false;
    }
    if (v == best) support.push_back(t.mono);
  }
  return support;
}

ExtValue deg_sr(const Polynomial& f, const LogRadii& s, const LogRadii& r, const PrimeContext& p) {
  if (f.is_zero()) throw std::invalid_argument("(s,r)-degree of the zero polynomial");
  if (!all_finite(r) || r.size() != s.size()) throw std::invalid_argument("r must be finite and match s");
  std::optional<Rational> best;
  for (const Monomial& m : support_s(f, s, p)) {
    Rational d(0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) d += (s[i].finite() - r[i].finite()) * Rational(m[i]);
    }
    if (!best || d > *best) best = d;
  }
  return ExtValue(*best);
}

std::optional<Polynomial> exact_divide(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.nvars() != g.nvars()) throw std::invalid_argument("polynomials over different variable counts");
  const MonomialOrder grevlex = MonomialOrder::grevlex();
  auto lead = [&](const Polynomial& p) {
    const auto terms = p.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms.size(); ++i) {
      if (grevlex.compare(terms[i].mono, terms[best].mono) > 0) best = i;
    }
    return terms[best];
  };
  const Term lf = lead(f);
  Polynomial quotient(g.nvars());
  Polynomial rest = g;
  while (!rest.is_zero()) {
    const Term lr = lead(rest);
    if (!lf.mono.divides(lr.mono)) return std::nullopt;
    const Rational c = lr.coeff / lf.coeff;
    const Monomial m = lr.mono.divided_by(lf.mono);
    quotient += Polynomial::from_term(g.nvars(), Term{c, m});
    rest.subtract_multiple(c, m, f);
  }
  return quotient;
}

}  // namespace tate
