#pragma once

#include "tate/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tate {

struct PolynomialSystem {
  std::string name;
  std::vector<std::string> variables;
  std::vector<Polynomial> equations;
};

/// Variables x0..xn; n equations sum_i x_|i| x_|k-i| - x_k for k < n, then
/// x0 + 2(x1 + ... + xn) - 1.
PolynomialSystem katsura(std::size_t n);
/// Variables x1..xn; elementary cyclic sums of lengths 1..n-1, then
/// x1...xn - 1.
PolynomialSystem cyclic(std::size_t n);

/// "katsura:3" or "cyclic:5".
PolynomialSystem system_by_name(std::string_view spec);

}  // namespace tate
