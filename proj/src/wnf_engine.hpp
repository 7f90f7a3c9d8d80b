#pragma once

// Shared loop of the weak normal form algorithms. A policy supplies the
// reducer ranking, the rule for appending the current remainder to T, and
// an optional stopping test.

#include "tate/mora.hpp"

#include <deque>
#include <optional>

namespace tate::detail {

struct Lead {
  Monomial mono;
  Rational coeff;
  long coeff_valuation = 0;
};

inline Lead lead_of(const Polynomial& p, const TateOrder& o) {
  const Term& t = p.terms()[leading_index(p, o)];
  return Lead{t.mono, t.coeff, o.prime().valuation(t.coeff)};
}

struct EngineOutcome {
  WnfResult result;
  bool stopped_by_policy = false;
};

/// Policy requirements:
///   using Data;                                   per-polynomial écart data
///   Data describe(const Polynomial&, const Lead&);
///   auto rank(const Data&) const;                 cheap key of a reducer, smaller is preferred
///   bool should_add(const Data& g, const Data& h, std::size_t ecart2) const;
///   bool after_step(const Data& g, const Data& h, const Polynomial& next);  true stops the loop
template <bool Track, class Policy>
EngineOutcome run_wnf(const Polynomial& f, std::span<const Polynomial> G, const TateOrder& o, Policy& policy,
                      const WnfOptions& opts) {
  using Data = typename Policy::Data;
  struct Entry {
    Polynomial owned;
    const Polynomial* poly = nullptr;
    Lead lead;
    Data data;
    std::optional<std::size_t> input;
    Polynomial mu;
    std::vector<Polynomial> u;
  };

  const std::size_t n = f.nvars();
  for (const Polynomial& g : G) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial among the divisors");
    if (g.nvars() != n) throw std::invalid_argument("divisor variable count mismatch");
  }
  if (o.nvars() != n) throw std::invalid_argument("order variable count mismatch");

  EngineOutcome out;
  WnfResult& res = out.result;
  res.remainder = f;
  if constexpr (Track) {
    res.unit = Polynomial::constant(n, Rational(1));
    res.cofactors.assign(G.size(), Polynomial(n));
  }

  std::deque<Entry> T;
  for (std::size_t i = 0; i < G.size(); ++i) {
    Entry e;
    e.poly = &G[i];
    e.lead = lead_of(G[i], o);
    e.data = policy.describe(G[i], e.lead);
    e.input = i;
    T.push_back(std::move(e));
  }
  res.max_t_size = T.size();

  Polynomial& h = res.remainder;
  std::vector<std::size_t> best;
  while (!h.is_zero()) {
    if (opts.deadline) opts.deadline->check();
    const Lead lh = lead_of(h, o);

    best.clear();
    std::optional<decltype(policy.rank(T.front().data))> best_rank;
    for (std::size_t k = 0; k < T.size(); ++k) {
      if (!T[k].lead.mono.divides(lh.mono)) continue;
      auto r = policy.rank(T[k].data);
      if (!best_rank || r < *best_rank) {
        best_rank.emplace(r);
        best.clear();
      }
      if (r == *best_rank) best.push_back(k);
    }
    if (best.empty()) break;

    if (opts.step_limit != 0 && res.steps >= opts.step_limit) throw StepLimitExceeded(opts.step_limit);

    std::size_t chosen = best.front();
    Monomial shift = lh.mono.divided_by(T[chosen].lead.mono);
    std::size_t chosen_e2 = ecart2_shifted(h, shift, *T[chosen].poly);
    for (std::size_t i = 1; i < best.size() && chosen_e2 > 0; ++i) {
      const std::size_t k = best[i];
      Monomial s = lh.mono.divided_by(T[k].lead.mono);
      const std::size_t e2 = ecart2_shifted(h, s, *T[k].poly);
      if (e2 < chosen_e2) {
        chosen = k;
        chosen_e2 = e2;
        shift = std::move(s);
      }
    }

    const Data hdata = policy.describe(h, lh);
    const bool add = policy.should_add(T[chosen].data, hdata, chosen_e2);
    const Rational c = lh.coeff / T[chosen].lead.coeff;

    if constexpr (Track) {
      ReductionStep step;
      step.iteration = res.steps;
      step.divisor = chosen;
      step.multiplier = Term{c, shift};
      step.lead_before = Term{lh.coeff, lh.mono};
      step.added_to_t = add;
      res.divisor_log.push_back(std::move(step));
    }

    if (add) {
      Entry e;
      e.owned = h;
      e.lead = lh;
      e.data = hdata;
      if constexpr (Track) {
        e.mu = res.unit;
        e.u = res.cofactors;
      }
      T.push_back(std::move(e));
      T.back().poly = &T.back().owned;
      res.max_t_size = std::max(res.max_t_size, T.size());
    }

    const Entry& g = T[chosen];
    h.subtract_multiple(c, shift, *g.poly);
    if constexpr (Track) {
      if (g.input) {
        res.cofactors[*g.input] += Polynomial::from_term(n, Term{c, shift});
      } else {
        res.unit.subtract_multiple(c, shift, g.mu);
        for (std::size_t i = 0; i < G.size(); ++i) res.cofactors[i].subtract_multiple(c, shift, g.u[i]);
      }
    }
    ++res.steps;

    if (policy.after_step(g.data, hdata, h)) {
      out.stopped_by_policy = true;
      break;
    }
  }
  if (opts.stats) {
    ++opts.stats->calls;
    opts.stats->steps += res.steps;
    opts.stats->max_t_size = std::max(opts.stats->max_t_size, res.max_t_size);
  }
  return out;
}

}  // namespace tate::detail
