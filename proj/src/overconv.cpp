#include "tate/overconv.hpp"

#include "buchberger_loop.hpp"
#include "wnf_engine.hpp"

#include <tuple>

namespace tate {

void OverconvParams::validate() const {
  const LogRadii& r = order.radii();
  if (!all_finite(r) || !all_finite(s)) throw std::invalid_argument("overconvergent radii must be finite");
  if (r.size() != s.size()) throw std::invalid_argument("s and r have different lengths");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (s[i] < r[i]) throw std::invalid_argument("s must be >= r componentwise");
  }
  if (step_cap == 0) throw std::invalid_argument("step cap must be positive");
}

namespace {

// val_s and deg_{s,r} evaluated in one pass.
class SrMeasure {
 public:
  explicit SrMeasure(const OverconvParams& P) : vs_(P.order.with_radii(P.s)) {
    const LogRadii& r = P.order.radii();
    for (std::size_t i = 0; i < r.size(); ++i) diff_.push_back(P.s[i].finite() - r[i].finite());
  }

  Rational term_val(long coeff_valuation, const Monomial& m) const {
    return vs_.finite_gauss_valuation(coeff_valuation, m);
  }
  Rational term_deg(const Monomial& m) const {
    Rational d(0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0 && !diff_[i].is_zero()) d += diff_[i] * Rational(m[i]);
    }
    return d;
  }

  /// (val_s(f), deg_{s,r}(f)) for f != 0.
  std::pair<Rational, Rational> of(const Polynomial& f) const {
    const PrimeContext& p = vs_.prime();
    std::int64_t best = 0;
    std::vector<std::size_t> support;
    const auto terms = f.terms();
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::int64_t v = vs_.key(terms[k]).scaled_valuation;
      if (support.empty() || v < best) {
        support.clear();
        best = v;
      }
      if (v == best) support.push_back(k);
    }
    const Term& t0 = terms[support.front()];
    Rational val = term_val(p.valuation(t0.coeff), t0.mono);
    Rational deg = term_deg(t0.mono);
    for (std::size_t k = 1; k < support.size(); ++k) {
      Rational d = term_deg(terms[support[k]].mono);
      if (d > deg) deg = std::move(d);
    }
    return {std::move(val), std::move(deg)};
  }

 private:
  TateOrder vs_;
  std::vector<Rational> diff_;
};

struct OverconvPolicy {
  struct Data {
    Rational e0, e1;
    std::int64_t mora_e1 = 0;
    Rational val, deg;
  };

  const SrMeasure& measure;
  Rational budget;
  std::size_t step_cap;
  bool record;
  std::vector<OverconvStep>* trace;

  std::size_t steps = 0;
  std::size_t last_drop = 0;
  OverconvOutcome::Stop stop = OverconvOutcome::Stop::Terminated;

  Data describe(const Polynomial& p, const detail::Lead& lead) const {
    Data d;
    auto [val, deg] = measure.of(p);
    d.e0 = measure.term_val(lead.coeff_valuation, lead.mono) - val;
    d.e1 = deg - measure.term_deg(lead.mono);
    d.mora_e1 = p.degree() - lead.mono.degree();
    d.val = std::move(val);
    d.deg = std::move(deg);
    return d;
  }

  // Mora's écart only separates reducers the overconvergent écarts tie on.
  auto rank(const Data& d) const { return std::tie(d.e0, d.e1, d.mora_e1); }

  bool should_add(const Data& g, const Data& h, std::size_t e2) const {
    if (g.e0 > h.e0 || g.e1 > h.e1) return true;
    if (g.e0 == h.e0 && g.e1 == h.e1) return g.mora_e1 > h.mora_e1 || e2 > 0;
    return false;
  }

  bool after_step(const Data& g, const Data& h, const Polynomial& next) {
    ++steps;
    std::optional<std::pair<Rational, Rational>> after;
    if (!next.is_zero()) after = measure.of(next);
    if (after && after->first < h.val) last_drop = steps;
    if (record) {
      OverconvStep s;
      s.iteration = steps - 1;
      s.g_ecart0 = g.e0;
      s.g_ecart1 = g.e1;
      s.h_ecart0 = h.e0;
      s.h_ecart1 = h.e1;
      s.hypotheses = g.e0 <= h.e0 && g.e1 <= h.e1;
      s.val_before = h.val;
      s.deg_before = h.deg;
      s.val_after = after ? ExtValue(after->first) : ExtValue::pos_inf();
      if (after) s.deg_after = after->second;
      trace->push_back(std::move(s));
    }
    if (!after) return false;
    if (after->first > budget) {
      stop = OverconvOutcome::Stop::Budget;
      return true;
    }
    if (steps >= step_cap) {
      stop = OverconvOutcome::Stop::StepCap;
      return true;
    }
    return false;
  }
};

}  // namespace

ExtValue val_s(const Polynomial& f, const OverconvParams& P) {
  if (f.is_zero()) return ExtValue::pos_inf();
  return SrMeasure(P).of(f).first;
}

Rational ecart_sr0(const Polynomial& f, const OverconvParams& P) {
  if (f.is_zero()) throw std::invalid_argument("ecart of the zero polynomial");
  const SrMeasure m(P);
  const Term lt = leading_term(f, P.order);
  return m.term_val(P.order.prime().valuation(lt.coeff), lt.mono) - m.of(f).first;
}

Rational ecart_sr1(const Polynomial& f, const OverconvParams& P) {
  if (f.is_zero()) throw std::invalid_argument("ecart of the zero polynomial");
  const SrMeasure m(P);
  return m.of(f).second - m.term_deg(leading_monomial(f, P.order));
}

OverconvOutcome wnf_overconv(const Polynomial& f, std::span<const Polynomial> G, const OverconvParams& P,
                             const OverconvOptions& opts) {
  P.validate();
  OverconvOutcome out;
  const SrMeasure measure(P);
  Rational budget = P.budget ? *P.budget : (f.is_zero() ? Rational(0) : measure.of(f).first + Rational(50));
  OverconvPolicy policy{measure, std::move(budget), P.step_cap, opts.trace, &out.trace};

  WnfOptions w;
  w.deadline = opts.deadline;
  w.stats = opts.stats;
  detail::EngineOutcome e = opts.cofactors ? detail::run_wnf<true>(f, G, P.order, policy, w)
                                           : detail::run_wnf<false>(f, G, P.order, policy, w);
  out.result = std::move(e.result);
  out.stop = policy.stop;
  if (policy.stop == OverconvOutcome::Stop::StepCap && policy.last_drop * 2 > policy.steps) {
    throw OverconvDiverged("step cap reached while val_s was still decreasing");
  }
  if (policy.stop != OverconvOutcome::Stop::Terminated) out.kind = OverconvOutcome::Kind::ReducedToZeroAtBudget;
  return out;
}

GroebnerBasis groebner_overconv(std::span<const Polynomial> F, const OverconvParams& P, const GroebnerOptions& opts) {
  P.validate();
  return detail::buchberger_loop(F, P.order, opts, [&](const Polynomial& s, std::span<const Polynomial> G,
                                                       GroebnerStats& stats) {
    OverconvOptions oo;
    oo.cofactors = false;
    oo.trace = false;
    oo.deadline = opts.deadline;
    oo.stats = &stats.wnf;
    OverconvParams Ps = P;
    Ps.budget.reset();
    OverconvOutcome r = wnf_overconv(s, G, Ps, oo);
    if (r.kind == OverconvOutcome::Kind::ReducedToZeroAtBudget) {
      ++stats.budget_zero_reductions;
      return Polynomial(s.nvars());
    }
    return std::move(r.result.remainder);
  });
}

}  // namespace tate
