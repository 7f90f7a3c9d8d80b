#include "tate/mora.hpp"

#include "wnf_engine.hpp"

#include <algorithm>

namespace tate {

namespace {

struct MoraPolicy {
  struct Data {
    std::int64_t ecart1 = 0;
  };

  Data describe(const Polynomial& p, const detail::Lead& lead) const {
    return Data{p.degree() - lead.mono.degree()};
  }
  std::int64_t rank(const Data& d) const { return d.ecart1; }
  bool should_add(const Data& g, const Data& h, std::size_t e2) const { return g.ecart1 > h.ecart1 || e2 > 0; }
  bool after_step(const Data&, const Data&, const Polynomial&) const { return false; }
};

}  // namespace

std::int64_t ecart1(const Polynomial& f, const TateOrder& o) {
  if (f.is_zero()) throw std::invalid_argument("ecart of the zero polynomial");
  return f.degree() - leading_term(f, o).mono.degree();
}

std::size_t ecart2(const Polynomial& h, const Polynomial& g) {
  return ecart2_shifted(h, Monomial(g.nvars()), g);
}

std::size_t ecart2_shifted(const Polynomial& h, const Monomial& m, const Polynomial& g) {
  if (h.nvars() != g.nvars()) throw std::invalid_argument("polynomials over different variable counts");
  const auto hs = h.terms();
  auto it = hs.begin();
  std::size_t missing = 0;
  for (const Term& t : g.terms()) {
    const Monomial shifted = t.mono * m;
    it = std::lower_bound(it, hs.end(), shifted, [](const Term& a, const Monomial& key) { return a.mono < key; });
    if (it == hs.end() || it->mono != shifted) ++missing;
  }
  return missing;
}

Polynomial wnf(const Polynomial& f, std::span<const Polynomial> G, const TateOrder& o, const WnfOptions& opts) {
  MoraPolicy policy;
  return detail::run_wnf<false>(f, G, o, policy, opts).result.remainder;
}

WnfResult wnf_with_cofactors(const Polynomial& f, std::span<const Polynomial> G, const TateOrder& o,
                             const WnfOptions& opts) {
  MoraPolicy policy;
  return detail::run_wnf<true>(f, G, o, policy, opts).result;
}

CertificateReport check_certificate(const Polynomial& f, std::span<const Polynomial> G, const WnfResult& r,
                                    const TateOrder& o) {
  CertificateReport rep;
  if (r.cofactors.size() != G.size()) return rep;

  Polynomial rhs = r.remainder;
  for (std::size_t i = 0; i < G.size(); ++i) rhs += r.cofactors[i] * G[i];
  rep.identity = r.unit * f == rhs;

  const Polynomial one = Polynomial::constant(f.nvars(), Rational(1));
  rep.unit = gauss_valuation_poly(r.unit - one, o) > ExtValue(0);

  rep.lt_bounds = true;
  if (!f.is_zero()) {
    const Term lf = leading_term(f, o);
    std::size_t equalities = 0;
    for (std::size_t i = 0; i < G.size(); ++i) {
      const Polynomial prod = r.cofactors[i] * G[i];
      if (prod.is_zero()) continue;
      const auto c = o.compare(leading_term(prod, o), lf);
      if (c > 0) rep.lt_bounds = false;
      if (c == 0) ++equalities;
    }
    if (equalities > 1) rep.lt_bounds = false;
  } else {
    rep.lt_bounds = std::all_of(r.cofactors.begin(), r.cofactors.end(), [](const Polynomial& u) { return u.is_zero(); });
  }

  rep.irreducible = true;
  if (!r.remainder.is_zero()) {
    const Monomial lh = leading_term(r.remainder, o).mono;
    for (const Polynomial& g : G) {
      if (leading_term(g, o).mono.divides(lh)) rep.irreducible = false;
    }
  }
  return rep;
}

}  // namespace tate
