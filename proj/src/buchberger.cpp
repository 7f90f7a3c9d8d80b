#include "tate/buchberger.hpp"

#include "buchberger_loop.hpp"

namespace tate {

GroebnerBasis groebner(std::span<const Polynomial> F, const TateOrder& o, const GroebnerOptions& opts) {
  return detail::buchberger_loop(F, o, opts, [&](const Polynomial& s, std::span<const Polynomial> G,
                                                 GroebnerStats& stats) {
    WnfOptions w;
    w.step_limit = opts.step_limit;
    w.deadline = opts.deadline;
    w.stats = &stats.wnf;
    return wnf(s, G, o, w);
  });
}

GroebnerCheck is_groebner(std::span<const Polynomial> G, const TateOrder& o, const GroebnerOptions& opts) {
  for (const Polynomial& g : G) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial in a basis");
  }
  WnfOptions w;
  w.step_limit = opts.step_limit;
  w.deadline = opts.deadline;
  GroebnerCheck check;
  for (std::size_t j = 1; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Polynomial s = spoly(G[i], G[j], o);
      if (s.is_zero()) continue;
      Polynomial h = wnf(s, G, o, w);
      if (!h.is_zero()) {
        check.ok = false;
        check.pair = {i, j};
        check.remainder = std::move(h);
        return check;
      }
    }
  }
  return check;
}

Polynomial normalize_lc(const Polynomial& f, const TateOrder& o) {
  const Rational lc = leading_coefficient(f, o);
  const Rational scale = o.prime().power(o.prime().valuation(lc)) / lc;
  return scale.is_one() ? f : scale * f;
}

GroebnerBasis minimalize(const GroebnerBasis& G) {
  if (!G.certified && !is_groebner(G.elements, G.order)) {
    throw std::invalid_argument("minimalize: input is not a Groebner basis");
  }
  const TateOrder& o = G.order;
  std::vector<Monomial> lm;
  lm.reserve(G.elements.size());
  for (const Polynomial& g : G.elements) lm.push_back(leading_monomial(g, o));

  GroebnerBasis out(o);
  out.minimal = true;
  out.certified = true;
  out.stats = G.stats;
  for (std::size_t i = 0; i < lm.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < lm.size() && !drop; ++j) {
      if (j == i || !lm[j].divides(lm[i])) continue;
      // equal monomials: only the earliest survives
      drop = lm[j] != lm[i] || j < i;
    }
    if (!drop) out.elements.push_back(normalize_lc(G.elements[i], o));
  }
  return out;
}

}  // namespace tate
