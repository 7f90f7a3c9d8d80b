#include "tate/fan.hpp"

#include <algorithm>
#include <map>

namespace tate {

LtSet lt_set_of(const GroebnerBasis& gb) {
  LtSet out;
  for (const Polynomial& g : gb.elements) {
    const Term t = leading_term(g, gb.order);
    out.push_back(LtClass{t.mono, gb.order.prime().valuation(t.coeff)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

LtSet initial_terms(const IdealPresentation& I, const LogRadii& r, const GroebnerOptions& opts) {
  if (!all_finite(r)) throw std::invalid_argument("initial terms need finite radii");
  return lt_set_of(ideal_groebner(IdealPresentation(I.order.with_radii(r), I.generators), opts));
}

FanReport sample_initial_ideals(const IdealPresentation& I, const std::vector<LogRadii>& samples,
                                const GroebnerOptions& opts) {
  if (samples.empty()) throw std::invalid_argument("no sample radii");
  std::map<LtSet, std::size_t> index;
  FanReport report;
  for (const LogRadii& r : samples) {
    if (!all_finite(r)) throw std::invalid_argument("sample radii must be finite");
    GroebnerBasis gb = ideal_groebner(IdealPresentation(I.order.with_radii(r), I.generators), opts);
    LtSet lts = lt_set_of(gb);
    auto [it, fresh] = index.try_emplace(lts, report.entries.size());
    if (fresh) report.entries.push_back(FanEntry{std::move(lts), {}, std::move(gb)});
    report.entries[it->second].representatives.push_back(r);
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const FanEntry& a, const FanEntry& b) { return a.lt_set < b.lt_set; });
  return report;
}

UniversalCheck check_universal(const std::vector<Polynomial>& G, const std::vector<LogRadii>& samples,
                               const MonomialOrder& tiebreak, const PrimeContext& p) {
  UniversalCheck out;
  for (const LogRadii& r : samples) {
    GroebnerCheck c = is_groebner(G, TateOrder(r, tiebreak, p));
    if (!c) {
      out.ok = false;
      out.failing = r;
      out.witness = std::move(c);
      return out;
    }
  }
  return out;
}

namespace {

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return false;
  const auto ta = a.terms();
  const auto tb = b.terms();
  const Rational ratio = ta.front().coeff / tb.front().coeff;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].mono != tb[i].mono || ta[i].coeff != ratio * tb[i].coeff) return false;
  }
  return true;
}

}  // namespace

std::vector<Polynomial> candidate_universal_gb(const IdealPresentation& I, const std::vector<LogRadii>& samples,
                                               const GroebnerOptions& opts) {
  std::vector<Polynomial> out;
  for (const LogRadii& r : samples) {
    const GroebnerBasis gb = ideal_groebner(IdealPresentation(I.order.with_radii(r), I.generators), opts);
    for (const Polynomial& g : gb.elements) {
      const bool seen = std::any_of(out.begin(), out.end(), [&](const Polynomial& h) { return proportional(g, h); });
      if (!seen) out.push_back(g);
    }
  }
  return out;
}

GroebnerBasis groebner_via_homogenization(std::span<const Polynomial> F, const TateOrder& o,
                                          const GroebnerOptions& opts) {
  if (o.is_homogenized()) throw std::invalid_argument("order is already homogenized");
  std::vector<Polynomial> H;
  H.reserve(F.size());
  for (const Polynomial& f : F) H.push_back(homogenize(f));
  const GroebnerBasis hb = groebner(H, TateOrder::homogenized(o), opts);
  GroebnerBasis out(o);
  out.stats = hb.stats;
  for (const Polynomial& h : hb.elements) out.elements.push_back(dehomogenize(h));
  return out;
}

std::vector<LogRadii> grid_samples(const std::vector<Rational>& lo, const std::vector<Rational>& hi,
                                   const std::vector<Rational>& step) {
  if (lo.size() != hi.size() || lo.size() != step.size() || lo.empty()) {
    throw std::invalid_argument("grid bounds have inconsistent lengths");
  }
  std::vector<std::vector<Rational>> axes;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (step[i].sign() <= 0) throw std::invalid_argument("grid step must be positive");
    if (hi[i] < lo[i]) throw std::invalid_argument("grid upper bound below lower bound");
    std::vector<Rational> axis;
    for (Rational v = lo[i]; v <= hi[i]; v += step[i]) axis.push_back(v);
    axes.push_back(std::move(axis));
  }
  std::vector<LogRadii> out{LogRadii{}};
  for (const auto& axis : axes) {
    std::vector<LogRadii> next;
    for (const LogRadii& prefix : out) {
      for (const Rational& v : axis) {
        LogRadii r = prefix;
        r.emplace_back(v);
        next.push_back(std::move(r));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace tate
