#pragma once

#include "tate/buchberger.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tate {

/// Ideal of K{X;r} spanned by polynomials. An empty generator list is the
/// zero ideal.
struct IdealPresentation {
  std::vector<Polynomial> generators;
  TateOrder order;

  IdealPresentation(TateOrder o, std::vector<Polynomial> gens);
  std::size_t nvars() const { return order.nvars(); }
};

/// How the eliminated variable is weighted: log-radius +inf, or a finite r0
/// that must be large enough.
struct EliminationMode {
  std::optional<Rational> r0;

  static EliminationMode infinite() { return {}; }
  static EliminationMode finite(Rational r) { return EliminationMode{std::move(r)}; }
};

/// Finite-r0 elimination produced a basis element whose LT avoids the
/// eliminated variable while the element itself does not.
class EliminationCheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IdealOptions {
  GroebnerOptions gb;
  EliminationMode mode;
};

IdealPresentation ideal_sum(const IdealPresentation& I, const IdealPresentation& J);
IdealPresentation ideal_product(const IdealPresentation& I, const IdealPresentation& J);

/// Minimal GB of I. The zero ideal gives an empty basis.
GroebnerBasis ideal_groebner(const IdealPresentation& I, const GroebnerOptions& opts = {});
bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f);
bool ideals_equal(const IdealPresentation& I, const IdealPresentation& J);

/// I ∩ K{X without var}. The generators of the result form a minimal GB
/// under the inherited order (radius and tie-break restricted).
IdealPresentation eliminate(const IdealPresentation& I, std::size_t var, const IdealOptions& opts = {});

IdealPresentation intersect(const IdealPresentation& I, const IdealPresentation& J, const IdealOptions& opts = {});

/// I : f via (I ∩ <f>) / f.
IdealPresentation colon(const IdealPresentation& I, const Polynomial& f, const IdealOptions& opts = {});
/// I : J as the intersection of I : g over the generators g of J.
IdealPresentation colon(const IdealPresentation& I, const IdealPresentation& J, const IdealOptions& opts = {});

/// I : f^inf via <I, 1 - t f> ∩ K{X}.
IdealPresentation saturate(const IdealPresentation& I, const Polynomial& f, const IdealOptions& opts = {});
/// Same ideal by repeated colon until it stabilizes; for cross-checking.
IdealPresentation saturate_by_colon(const IdealPresentation& I, const Polynomial& f, const IdealOptions& opts = {},
                                    std::size_t max_rounds = 64);

}  // namespace tate
