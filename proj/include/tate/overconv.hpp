#pragma once

#include "tate/buchberger.hpp"
#include "tate/mora.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tate {

/// Reduction over K{X;r} of polynomials viewed as s-convergent series, s >= r.
struct OverconvParams {
  TateOrder order;  // carries r, the tie-break and p
  LogRadii s;
  /// Stop once val_s(h) exceeds this. Defaults to val_s(f) + 50.
  std::optional<Rational> budget;
  std::size_t step_cap = 1'000'000;

  OverconvParams(TateOrder o, LogRadii s_radii) : order(std::move(o)), s(std::move(s_radii)) {}
  /// Throws std::invalid_argument unless s >= r, both finite, step_cap > 0.
  void validate() const;
};

/// Écarts of a nonzero polynomial; both are >= 0.
Rational ecart_sr0(const Polynomial& f, const OverconvParams& P);
Rational ecart_sr1(const Polynomial& f, const OverconvParams& P);
/// val_s(f), +inf for zero.
ExtValue val_s(const Polynomial& f, const OverconvParams& P);

struct OverconvStep {
  std::size_t iteration = 0;
  Rational g_ecart0, g_ecart1;
  Rational h_ecart0, h_ecart1;
  /// Both écarts of g are <= those of h.
  bool hypotheses = false;
  ExtValue val_before, val_after;
  Rational deg_before;
  std::optional<Rational> deg_after;  // empty once h = 0
};

struct OverconvOutcome {
  enum class Kind { Remainder, ReducedToZeroAtBudget };
  enum class Stop { Terminated, Budget, StepCap };

  Kind kind = Kind::Remainder;
  Stop stop = Stop::Terminated;
  /// For budget stops this is the partial identity mu_j f = sum u_ij g_i + h_j
  /// at the last step; no claim is made beyond it.
  WnfResult result;
  std::vector<OverconvStep> trace;
};

struct OverconvOptions {
  bool cofactors = true;
  bool trace = true;
  const Deadline* deadline = nullptr;
  WnfStats* stats = nullptr;
};

/// Raised when the step cap is hit while val_s is still dropping.
class OverconvDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OverconvOutcome wnf_overconv(const Polynomial& f, std::span<const Polynomial> G, const OverconvParams& P,
                             const OverconvOptions& opts = {});

/// Buchberger loop reducing S-polynomials with wnf_overconv. Budget stops
/// count as zero reductions and are tallied in stats.budget_zero_reductions.
GroebnerBasis groebner_overconv(std::span<const Polynomial> F, const OverconvParams& P,
                                const GroebnerOptions& opts = {});

}  // namespace tate
