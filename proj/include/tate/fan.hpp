#pragma once

#include "tate/ideals.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace tate {

/// A leading term up to units of the valuation ring: monomial plus
/// valuation of the coefficient.
struct LtClass {
  Monomial mono;
  long valuation = 0;

  friend auto operator<=>(const LtClass&, const LtClass&) = default;
  friend bool operator==(const LtClass&, const LtClass&) = default;
};

/// Sorted minimal generators of LT_r(I).
using LtSet = std::vector<LtClass>;

LtSet lt_set_of(const GroebnerBasis& minimal_gb);
LtSet initial_terms(const IdealPresentation& I, const LogRadii& r, const GroebnerOptions& opts = {});

struct FanEntry {
  LtSet lt_set;
  std::vector<LogRadii> representatives;
  GroebnerBasis basis;  // minimal GB at the first representative
};

struct FanReport {
  std::vector<FanEntry> entries;  // sorted by lt_set
};

FanReport sample_initial_ideals(const IdealPresentation& I, const std::vector<LogRadii>& samples,
                                const GroebnerOptions& opts = {});

struct UniversalCheck {
  bool ok = true;
  std::optional<LogRadii> failing;
  GroebnerCheck witness;

  explicit operator bool() const { return ok; }
};

/// is_groebner(G) at every sample, with the given tie-break and prime.
UniversalCheck check_universal(const std::vector<Polynomial>& G, const std::vector<LogRadii>& samples,
                               const MonomialOrder& tiebreak, const PrimeContext& p);

/// Union of the minimal GBs at the samples, without scalar duplicates.
std::vector<Polynomial> candidate_universal_gb(const IdealPresentation& I, const std::vector<LogRadii>& samples,
                                               const GroebnerOptions& opts = {});

/// GB of the homogenized generators under the (r,0) order, dehomogenized.
/// A GB at r when the generators are homogeneous.
GroebnerBasis groebner_via_homogenization(std::span<const Polynomial> F, const TateOrder& o,
                                          const GroebnerOptions& opts = {});

/// Cartesian grid; axis i runs lo[i], lo[i] + step[i], ... <= hi[i].
std::vector<LogRadii> grid_samples(const std::vector<Rational>& lo, const std::vector<Rational>& hi,
                                   const std::vector<Rational>& step);

}  // namespace tate
