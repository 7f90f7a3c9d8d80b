#include "tate/ideals.hpp"

#include <numeric>

namespace tate {

IdealPresentation::IdealPresentation(TateOrder o, std::vector<Polynomial> gens)
    : generators(std::move(gens)), order(std::move(o)) {
  for (const Polynomial& g : generators) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    if (g.nvars() != order.nvars()) throw std::invalid_argument("generator variable count mismatch");
  }
}

namespace {

void check_context(const IdealPresentation& I, const IdealPresentation& J) {
  const TateOrder& a = I.order;
  const TateOrder& b = J.order;
  if (a.radii() != b.radii() || !(a.tiebreak() == b.tiebreak()) || !(a.prime() == b.prime()) ||
      a.is_homogenized() != b.is_homogenized()) {
    throw std::invalid_argument("ideals live in different algebras");
  }
}

LogRadii append_radius(const LogRadii& r, ExtValue extra) {
  LogRadii out = r;
  out.push_back(std::move(extra));
  return out;
}

ExtValue fresh_radius(const EliminationMode& mode) {
  return mode.r0 ? ExtValue(*mode.r0) : ExtValue::pos_inf();
}

Polynomial one_minus(const Polynomial& p) {
  return Polynomial::constant(p.nvars(), Rational(1)) - p;
}

}  // namespace

IdealPresentation ideal_sum(const IdealPresentation& I, const IdealPresentation& J) {
  check_context(I, J);
  std::vector<Polynomial> gens = I.generators;
  gens.insert(gens.end(), J.generators.begin(), J.generators.end());
  return IdealPresentation(I.order, std::move(gens));
}

IdealPresentation ideal_product(const IdealPresentation& I, const IdealPresentation& J) {
  check_context(I, J);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators) {
    for (const Polynomial& g : J.generators) gens.push_back(f * g);
  }
  return IdealPresentation(I.order, std::move(gens));
}

GroebnerBasis ideal_groebner(const IdealPresentation& I, const GroebnerOptions& opts) {
  if (I.generators.empty()) {
    GroebnerBasis empty(I.order);
    empty.certified = empty.minimal = true;
    return empty;
  }
  return minimalize(groebner(I.generators, I.order, opts));
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (gb.elements.empty()) return false;
  return wnf(f, gb.elements, gb.order).is_zero();
}

bool ideals_equal(const IdealPresentation& I, const IdealPresentation& J) {
  check_context(I, J);
  const GroebnerBasis gi = ideal_groebner(I);
  const GroebnerBasis gj = ideal_groebner(J);
  for (const Polynomial& f : I.generators) {
    if (!ideal_contains(gj, f)) return false;
  }
  for (const Polynomial& g : J.generators) {
    if (!ideal_contains(gi, g)) return false;
  }
  return true;
}

IdealPresentation eliminate(const IdealPresentation& I, std::size_t var, const IdealOptions& opts) {
  const std::size_t n = I.nvars();
  if (var >= n) throw std::invalid_argument("no variable with index " + std::to_string(var));
  const TateOrder& o = I.order;

  LogRadii rest_radii = o.radii();
  rest_radii.erase(rest_radii.begin() + static_cast<std::ptrdiff_t>(var));
  const MonomialOrder rest_tiebreak = o.tiebreak().without_variable(var);
  TateOrder inherited(rest_radii, rest_tiebreak, o.prime());
  if (I.generators.empty()) return IdealPresentation(inherited, {});

  // var moves to the front so that a (1; lex; inherited) block order makes
  // it dominate.
  std::vector<std::size_t> perm(n);
  perm[0] = var;
  for (std::size_t i = 0, k = 1; i < n; ++i) {
    if (i != var) perm[k++] = i;
  }
  LogRadii elim_radii{fresh_radius(opts.mode)};
  elim_radii.insert(elim_radii.end(), rest_radii.begin(), rest_radii.end());
  const TateOrder elim(elim_radii, MonomialOrder::block(1, MonomialOrder::lex(), rest_tiebreak), o.prime());

  std::vector<Polynomial> gens;
  gens.reserve(I.generators.size());
  for (const Polynomial& g : I.generators) gens.push_back(g.permuted(perm));
  const GroebnerBasis gb = minimalize(groebner(gens, elim, opts.gb));

  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb.elements) {
    if (!g.involves_variable(0)) {
      kept.push_back(g.with_variable_removed(0));
      continue;
    }
    if (leading_monomial(g, elim)[0] == 0) {
      if (opts.mode.r0) {
        throw EliminationCheckFailed("r0 = " + opts.mode.r0->to_string() +
                                     " is too small: a basis element has its leading term free of the variable");
      }
      throw std::logic_error("elimination order failed to dominate the eliminated variable");
    }
  }
  return IdealPresentation(std::move(inherited), std::move(kept));
}

IdealPresentation intersect(const IdealPresentation& I, const IdealPresentation& J, const IdealOptions& opts) {
  check_context(I, J);
  if (I.generators.empty() || J.generators.empty()) return IdealPresentation(I.order, {});
  const std::size_t n = I.nvars();
  const TateOrder ext(append_radius(I.order.radii(), ExtValue(0)), I.order.tiebreak(), I.order.prime());
  const Polynomial t = Polynomial::variable(n + 1, n);
  const Polynomial u = one_minus(t);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators) gens.push_back(t * f.with_variable_appended());
  for (const Polynomial& g : J.generators) gens.push_back(u * g.with_variable_appended());
  IdealPresentation out = eliminate(IdealPresentation(ext, std::move(gens)), n, opts);
  return IdealPresentation(I.order, std::move(out.generators));
}

IdealPresentation colon(const IdealPresentation& I, const Polynomial& f, const IdealOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  const IdealPresentation K = intersect(I, IdealPresentation(I.order, {f}), opts);
  const std::vector<Polynomial> divisor{f};
  std::vector<Polynomial> gens;
  for (const Polynomial& g : K.generators) {
    if (auto q = exact_divide(g, f)) {
      gens.push_back(std::move(*q));
      continue;
    }
    // g lies in <f> over K{X;r} but not necessarily in K[X]: mu g = u f
    // with mu a unit, so u generates the same ideal as g / f.
    WnfResult r = wnf_with_cofactors(g, divisor, I.order);
    if (!r.remainder.is_zero()) throw std::logic_error("colon: intersection generator outside <f>");
    gens.push_back(std::move(r.cofactors.front()));
  }
  return IdealPresentation(I.order, std::move(gens));
}

IdealPresentation colon(const IdealPresentation& I, const IdealPresentation& J, const IdealOptions& opts) {
  check_context(I, J);
  if (J.generators.empty()) {
    return IdealPresentation(I.order, {Polynomial::constant(I.nvars(), Rational(1))});
  }
  IdealPresentation acc = colon(I, J.generators.front(), opts);
  for (std::size_t k = 1; k < J.generators.size(); ++k) acc = intersect(acc, colon(I, J.generators[k], opts), opts);
  return acc;
}

IdealPresentation saturate(const IdealPresentation& I, const Polynomial& f, const IdealOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  const std::size_t n = I.nvars();
  const TateOrder ext(append_radius(I.order.radii(), ExtValue(0)), I.order.tiebreak(), I.order.prime());
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators) gens.push_back(g.with_variable_appended());
  gens.push_back(one_minus(Polynomial::variable(n + 1, n) * f.with_variable_appended()));
  IdealPresentation out = eliminate(IdealPresentation(ext, std::move(gens)), n, opts);
  return IdealPresentation(I.order, std::move(out.generators));
}

IdealPresentation saturate_by_colon(const IdealPresentation& I, const Polynomial& f, const IdealOptions& opts,
                                    std::size_t max_rounds) {
  IdealPresentation cur = I;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    IdealPresentation next = colon(cur, f, opts);
    if (ideals_equal(cur, next)) return next;
    cur = std::move(next);
  }
  throw std::runtime_error("saturation by iterated colon did not stabilize");
}

}  // namespace tate
