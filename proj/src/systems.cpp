#include "tate/systems.hpp"

#include <charconv>
#include <stdexcept>

namespace tate {

namespace {

std::vector<std::string> names(std::size_t count, std::size_t first) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back("x" + std::to_string(first + i));
  return out;
}

void check_size(std::size_t n) {
  if (n < 2) throw std::invalid_argument("system size must be at least 2");
}

}  // namespace

PolynomialSystem katsura(std::size_t n) {
  check_size(n);
  const std::size_t nv = n + 1;
  auto x = [&](long i) -> Polynomial {
    const std::size_t j = static_cast<std::size_t>(i < 0 ? -i : i);
    return j > n ? Polynomial(nv) : Polynomial::variable(nv, j);
  };
  PolynomialSystem sys{"katsura:" + std::to_string(n), names(nv, 0), {}};
  const long ln = static_cast<long>(n);
  for (long k = 0; k < ln; ++k) {
    Polynomial eq(nv);
    for (long i = -ln; i <= ln; ++i) eq += x(i) * x(k - i);
    eq -= x(k);
    sys.equations.push_back(std::move(eq));
  }
  Polynomial last = x(0) - Polynomial::constant(nv, Rational(1));
  for (std::size_t i = 1; i <= n; ++i) last += Rational(2) * x(static_cast<long>(i));
  sys.equations.push_back(std::move(last));
  return sys;
}

PolynomialSystem cyclic(std::size_t n) {
  check_size(n);
  PolynomialSystem sys{"cyclic:" + std::to_string(n), names(n, 1), {}};
  for (std::size_t k = 1; k < n; ++k) {
    Polynomial eq(n);
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial prod = Polynomial::constant(n, Rational(1));
      for (std::size_t j = i; j < i + k; ++j) prod = prod * Polynomial::variable(n, j % n);
      eq += prod;
    }
    sys.equations.push_back(std::move(eq));
  }
  Polynomial prod = Polynomial::constant(n, Rational(1));
  for (std::size_t j = 0; j < n; ++j) prod = prod * Polynomial::variable(n, j);
  sys.equations.push_back(prod - Polynomial::constant(n, Rational(1)));
  return sys;
}

PolynomialSystem system_by_name(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("system must look like name:n");
  const std::string_view name = spec.substr(0, colon);
  const std::string_view num = spec.substr(colon + 1);
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
  if (ec != std::errc() || ptr != num.data() + num.size()) {
    throw std::invalid_argument("bad system size '" + std::string(num) + "'");
  }
  if (name == "katsura") return katsura(n);
  if (name == "cyclic") return cyclic(n);
  throw std::invalid_argument("unknown system '" + std::string(name) + "'");
}

}  // namespace tate
