#pragma once

#include "tate/buchberger.hpp"

#include <deque>

namespace tate::detail {

/// Buchberger loop. `reduce(s, G)` returns the weak normal form of s, or zero.
template <class Reduce>
GroebnerBasis buchberger_loop(std::span<const Polynomial> F, const TateOrder& o, const GroebnerOptions& opts,
                              Reduce&& reduce) {
  if (F.empty()) throw std::invalid_argument("empty generator list");
  for (const Polynomial& f : F) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial among the generators");
    if (f.nvars() != o.nvars()) throw std::invalid_argument("generator variable count mismatch");
  }

  GroebnerBasis out(o);
  out.certified = true;
  std::vector<Polynomial>& G = out.elements;
  G.assign(F.begin(), F.end());

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }

  while (!pairs.empty()) {
    if (opts.deadline) opts.deadline->check();
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    ++out.stats.pairs;
    const Polynomial s = spoly(G[i], G[j], o);
    Polynomial h = s.is_zero() ? s : reduce(s, std::span<const Polynomial>(G), out.stats);
    if (h.is_zero()) {
      ++out.stats.zero_reductions;
      continue;
    }
    const std::size_t k = G.size();
    G.push_back(std::move(h));
    ++out.stats.additions;
    for (std::size_t m = 0; m < k; ++m) pairs.emplace_back(m, k);
  }
  return out;
}

}  // namespace tate::detail
