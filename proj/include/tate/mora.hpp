#pragma once

#include "tate/deadline.hpp"
#include "tate/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace tate {

/// One iteration of the weak normal form loop: h_{j+1} = h_j - multiplier * T[divisor].
struct ReductionStep {
  std::size_t iteration = 0;
  /// Index into T. Indices below the number of input divisors are inputs;
  /// the rest are intermediate remainders appended during the run.
  std::size_t divisor = 0;
  Term multiplier;
  Term lead_before;
  bool added_to_t = false;
};

/// mu * f = sum_i cofactors[i] * G[i] + remainder, with val_r(mu - 1) > 0.
struct WnfResult {
  Polynomial remainder;
  Polynomial unit;
  std::vector<Polynomial> cofactors;
  std::size_t steps = 0;
  std::size_t max_t_size = 0;
  std::vector<ReductionStep> divisor_log;
};

struct WnfStats {
  std::size_t calls = 0;
  std::size_t steps = 0;
  std::size_t max_t_size = 0;
};

struct WnfOptions {
  /// 0 means unlimited. Exceeding the limit throws StepLimitExceeded.
  std::size_t step_limit = 0;
  const Deadline* deadline = nullptr;
  /// Accumulated across calls when set.
  WnfStats* stats = nullptr;
};

class StepLimitExceeded : public std::runtime_error {
 public:
  explicit StepLimitExceeded(std::size_t steps)
      : std::runtime_error("reduction exceeded " + std::to_string(steps) + " steps") {}
};

/// deg(f) - deg(LM_r(f)).
std::int64_t ecart1(const Polynomial& f, const TateOrder& o);
/// Number of monomials of g absent from h.
std::size_t ecart2(const Polynomial& h, const Polynomial& g);
/// ecart2(h, m * g) without forming the product.
std::size_t ecart2_shifted(const Polynomial& h, const Monomial& m, const Polynomial& g);

/// Mora's weak normal form of f modulo G.
Polynomial wnf(const Polynomial& f, std::span<const Polynomial> G, const TateOrder& o, const WnfOptions& opts = {});

/// Same remainder as `wnf`, plus the unit, cofactors and reduction trace.
WnfResult wnf_with_cofactors(const Polynomial& f, std::span<const Polynomial> G, const TateOrder& o,
                             const WnfOptions& opts = {});

/// Re-checks a weak normal form certificate by exact multiplication.
struct CertificateReport {
  bool identity = false;       // mu f == sum u_i g_i + h
  bool unit = false;           // val_r(mu - 1) > 0
  bool lt_bounds = false;      // LT(u_i g_i) <= LT(f), equality at most once
  bool irreducible = false;    // h == 0 or LT(h) divisible by no LT(g_i)

  bool ok() const { return identity && unit && lt_bounds && irreducible; }
};

CertificateReport check_certificate(const Polynomial& f, std::span<const Polynomial> G, const WnfResult& r,
                                    const TateOrder& o);

}  // namespace tate
