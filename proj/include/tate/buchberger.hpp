#pragma once

#include "tate/deadline.hpp"
#include "tate/mora.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tate {

struct GroebnerStats {
  std::size_t pairs = 0;             // S-polynomials reduced
  std::size_t zero_reductions = 0;
  std::size_t budget_zero_reductions = 0;  // overconvergent runs only
  std::size_t additions = 0;         // elements appended beyond the input
  WnfStats wnf;
};

struct GroebnerBasis {
  std::vector<Polynomial> elements;
  TateOrder order;
  bool minimal = false;
  /// Produced by a Buchberger run, hence known to satisfy the criterion.
  bool certified = false;
  GroebnerStats stats;

  explicit GroebnerBasis(TateOrder o) : order(std::move(o)) {}
};

struct GroebnerOptions {
  const Deadline* deadline = nullptr;
  /// Per-reduction step limit, 0 for none.
  std::size_t step_limit = 0;
};

/// Buchberger with FIFO pair selection and no pair criteria. The result is
/// not minimalized.
GroebnerBasis groebner(std::span<const Polynomial> F, const TateOrder& o, const GroebnerOptions& opts = {});

struct GroebnerCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  Polynomial remainder;

  explicit operator bool() const { return ok; }
};

/// Buchberger criterion: every S-polynomial has weak normal form 0.
GroebnerCheck is_groebner(std::span<const Polynomial> G, const TateOrder& o, const GroebnerOptions& opts = {});

/// Drops elements whose LT is divisible by another retained LT (earliest
/// wins on equal LMs) and scales each element so that LC = p^val(LC).
/// Uncertified input is checked first; std::invalid_argument if not a GB.
GroebnerBasis minimalize(const GroebnerBasis& G);

/// LC scaled to p^val(LC).
Polynomial normalize_lc(const Polynomial& f, const TateOrder& o);

}  // namespace tate
