#pragma once

// Reference implementations used as test oracles. They work on plain
// std::map polynomials over mpq_class and share no code with the library
// beyond reading terms out of tate::Polynomial.

#include "tate/polynomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Exps = std::vector<int>;
using Poly = std::map<Exps, mpq_class>;
/// Strict "a is smaller than b" on exponent vectors.
using MonoLess = std::function<bool(const Exps&, const Exps&)>;

inline Poly from_tate(const tate::Polynomial& f) {
  Poly out;
  for (const auto& t : f.terms()) {
    Exps e(t.mono.exponents().begin(), t.mono.exponents().end());
    out[e] = t.coeff.value();
  }
  return out;
}

inline tate::Polynomial to_tate(const Poly& f, std::size_t nvars) {
  std::vector<tate::Term> ts;
  for (const auto& [e, c] : f) {
    std::vector<tate::Monomial::Exponent> ex(e.begin(), e.end());
    ts.push_back(tate::Term{tate::Rational(c), tate::Monomial(std::span<const tate::Monomial::Exponent>(ex))});
  }
  return tate::Polynomial(nvars, std::move(ts));
}

/// v_p of a nonzero integer by repeated division.
inline long vp(mpz_class n, unsigned long p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  long k = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    n /= p;
    ++k;
  }
  return k;
}

inline long vp(const mpq_class& q, unsigned long p) { return vp(q.get_num(), p) - vp(q.get_den(), p); }

/// v_p(c) - r . e with finite radii.
inline mpq_class gauss_val(const mpq_class& c, const Exps& e, const std::vector<mpq_class>& r, unsigned long p) {
  mpq_class v = vp(c, p);
  for (std::size_t i = 0; i < e.size(); ++i) v -= r[i] * e[i];
  return v;
}

inline int deg(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline bool lex_less(const Exps& a, const Exps& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

inline bool grevlex_less(const Exps& a, const Exps& b) {
  if (deg(a) != deg(b)) return deg(a) < deg(b);
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

/// Tate term order: smaller Gauss valuation is larger, ties by `tie`.
struct TateLess {
  std::vector<mpq_class> r;
  unsigned long p;
  MonoLess tie = grevlex_less;

  bool operator()(const std::pair<Exps, mpq_class>& a, const std::pair<Exps, mpq_class>& b) const {
    const mpq_class va = gauss_val(a.second, a.first, r, p), vb = gauss_val(b.second, b.first, r, p);
    if (va != vb) return va > vb;
    return tie(a.first, b.first);
  }
};

inline std::pair<Exps, mpq_class> tate_lt(const Poly& f, const TateLess& less) {
  if (f.empty()) throw std::invalid_argument("leading term of zero");
  std::pair<Exps, mpq_class> best = *f.begin();
  for (const auto& t : f) {
    if (less(best, t)) best = t;
  }
  return best;
}

inline void add_scaled(Poly& h, const mpq_class& c, const Exps& shift, const Poly& g) {
  for (const auto& [e, a] : g) {
    Exps m = e;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += shift[i];
    mpq_class& slot = h[m];
    slot += c * a;
    if (slot == 0) h.erase(m);
  }
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [e, c] : a) add_scaled(out, c, e, b);
  return out;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Exps sub(const Exps& b, const Exps& a) {
  Exps d = b;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= a[i];
  return d;
}

/// Head-only reduction by the first divisor whose leading term divides,
/// under the Tate order. Records the leading-term valuation of each
/// intermediate remainder; stops at zero, at an irreducible LT or after
/// `iterations` steps.
struct NaiveTrace {
  std::vector<mpq_class> valuations;
  bool reached_zero = false;
  bool irreducible = false;
};

inline NaiveTrace naive_reduce(Poly h, const std::vector<Poly>& G, const TateLess& less, int iterations) {
  NaiveTrace tr;
  for (int it = 0; it < iterations; ++it) {
    if (h.empty()) {
      tr.reached_zero = true;
      return tr;
    }
    const auto lh = tate_lt(h, less);
    const Poly* by = nullptr;
    std::pair<Exps, mpq_class> lg;
    for (const auto& g : G) {
      lg = tate_lt(g, less);
      if (divides(lg.first, lh.first)) {
        by = &g;
        break;
      }
    }
    if (!by) {
      tr.irreducible = true;
      return tr;
    }
    add_scaled(h, -lh.second / lg.second, sub(lh.first, lg.first), *by);
    if (!h.empty()) {
      const auto nl = tate_lt(h, less);
      tr.valuations.push_back(gauss_val(nl.second, nl.first, less.r, less.p));
    }
  }
  tr.reached_zero = h.empty();
  return tr;
}

/// Mora's weak normal form, written directly from the reducer rules:
/// smallest degree gap, then fewest new monomials, then earliest in T.
/// Empty when `max_steps` is exceeded.
inline std::optional<Poly> mora_wnf(Poly h, const std::vector<Poly>& G, const TateLess& less, int max_steps) {
  auto ecart = [&](const Poly& f) {
    int d = 0;
    for (const auto& [e, c] : f) d = std::max(d, deg(e));
    return d - deg(tate_lt(f, less).first);
  };
  std::vector<Poly> T = G;
  for (int step = 0; !h.empty(); ++step) {
    const auto lh = tate_lt(h, less);
    int best = -1;
    std::pair<int, int> best_key;
    for (std::size_t k = 0; k < T.size(); ++k) {
      const auto lg = tate_lt(T[k], less);
      if (!divides(lg.first, lh.first)) continue;
      const Exps s = sub(lh.first, lg.first);
      int missing = 0;
      for (const auto& [e, c] : T[k]) {
        Exps m = e;
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += s[i];
        if (!h.count(m)) ++missing;
      }
      const std::pair<int, int> key{ecart(T[k]), missing};
      if (best < 0 || key < best_key) {
        best = int(k);
        best_key = key;
      }
    }
    if (best < 0) break;
    if (step >= max_steps) return std::nullopt;
    const Poly g = T[std::size_t(best)];
    if (best_key.first > ecart(h) || best_key.second > 0) T.push_back(h);
    const auto lg = tate_lt(g, less);
    add_scaled(h, -lh.second / lg.second, sub(lh.first, lg.first), g);
  }
  return h;
}

// Classical Groebner bases over Q[X].

inline Exps leading(const Poly& f, const MonoLess& less) {
  Exps best = f.begin()->first;
  for (const auto& [e, c] : f) {
    if (less(best, e)) best = e;
  }
  return best;
}

/// Full reduction of f modulo G.
inline Poly reduce(Poly f, const std::vector<Poly>& G, const MonoLess& less) {
  Poly rem;
  while (!f.empty()) {
    const Exps lf = leading(f, less);
    const mpq_class cf = f[lf];
    bool done = false;
    for (const auto& g : G) {
      const Exps lg = leading(g, less);
      if (divides(lg, lf)) {
        add_scaled(f, -cf / g.at(lg), sub(lf, lg), g);
        done = true;
        break;
      }
    }
    if (!done) {
      rem[lf] = cf;
      f.erase(lf);
    }
  }
  return rem;
}

inline Poly monic(Poly f, const MonoLess& less) {
  const mpq_class c = f.at(leading(f, less));
  for (auto& [e, a] : f) a /= c;
  return f;
}

/// Reduced Groebner basis, sorted by leading monomial.
inline std::vector<Poly> classical_gb(std::vector<Poly> F, const MonoLess& less) {
  std::vector<Poly> G;
  for (auto& f : F) {
    if (!f.empty()) G.push_back(monic(f, less));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const Exps a = leading(G[i], less), b = leading(G[j], less);
    Exps l(a.size());
    for (std::size_t k = 0; k < l.size(); ++k) l[k] = std::max(a[k], b[k]);
    Poly s;
    add_scaled(s, 1 / G[i].at(a), sub(l, a), G[i]);
    add_scaled(s, -1 / G[j].at(b), sub(l, b), G[j]);
    Poly r = reduce(s, G, less);
    if (!r.empty()) {
      G.push_back(monic(r, less));
      for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
    }
  }
  // minimal, then reduced
  std::vector<Poly> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exps li = leading(G[i], less), lj = leading(G[j], less);
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) M.push_back(G[i]);
  }
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    const Exps li = leading(M[i], less);
    Poly head{{li, M[i].at(li)}};
    Poly tail = M[i];
    tail.erase(li);
    Poly t = reduce(tail, others, less);
    for (const auto& [e, c] : t) head[e] = c;
    M[i] = monic(head, less);
  }
  std::sort(M.begin(), M.end(), [&](const Poly& a, const Poly& b) { return less(leading(a, less), leading(b, less)); });
  return M;
}

inline bool in_ideal(const Poly& f, const std::vector<Poly>& gb, const MonoLess& less) {
  return reduce(f, gb, less).empty();
}

/// Adds a new variable in front (index 0) of every exponent vector.
inline Poly prepend_var(const Poly& f, int power = 0) {
  Poly out;
  for (const auto& [e, c] : f) {
    Exps m{power};
    m.insert(m.end(), e.begin(), e.end());
    out[m] = c;
  }
  return out;
}

/// Elements of a lex basis (first variable largest) free of the first variable, with it dropped.
inline std::vector<Poly> eliminate_first(const std::vector<Poly>& F) {
  std::vector<Poly> out;
  for (const auto& g : classical_gb(F, lex_less)) {
    if (std::all_of(g.begin(), g.end(), [](const auto& t) { return t.first[0] == 0; })) {
      Poly h;
      for (const auto& [e, c] : g) h[Exps(e.begin() + 1, e.end())] = c;
      out.push_back(h);
    }
  }
  return out;
}

inline std::vector<Poly> intersect(const std::vector<Poly>& I, const std::vector<Poly>& J) {
  std::vector<Poly> F;
  for (const auto& f : I) F.push_back(prepend_var(f, 1));
  for (const auto& g : J) {
    Poly a = prepend_var(g, 0);
    Exps t(g.begin()->first.size() + 1, 0);
    t[0] = 1;
    add_scaled(a, -1, t, prepend_var(g, 0));
    F.push_back(a);
  }
  return eliminate_first(F);
}

/// Exact division; throws when f does not divide g.
inline Poly divide(Poly g, const Poly& f) {
  const Exps lf = leading(f, lex_less);
  Poly q;
  while (!g.empty()) {
    const Exps lg = leading(g, lex_less);
    if (!divides(lf, lg)) throw std::logic_error("inexact division");
    const Exps s = sub(lg, lf);
    const mpq_class c = g.at(lg) / f.at(lf);
    q[s] = c;
    add_scaled(g, -c, s, f);
  }
  return q;
}

inline std::vector<Poly> colon(const std::vector<Poly>& I, const Poly& f) {
  std::vector<Poly> out;
  for (const auto& g : intersect(I, {f})) out.push_back(divide(g, f));
  return out;
}

inline std::vector<Poly> saturate(const std::vector<Poly>& I, const Poly& f) {
  std::vector<Poly> F;
  for (const auto& g : I) F.push_back(prepend_var(g, 0));
  const std::size_t n = f.begin()->first.size();
  Poly rab{{Exps(n + 1, 0), 1}};
  Exps t(n + 1, 0);
  t[0] = 1;
  add_scaled(rab, -1, t, prepend_var(f, 0));
  F.push_back(rab);
  return eliminate_first(F);
}

}  // namespace oracle
