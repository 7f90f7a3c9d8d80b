#pragma once

#include "tate/order.hpp"
#include "tate/poly_io.hpp"
#include "tate/polynomial.hpp"

#include <string>
#include <vector>

namespace testutil {

inline const std::vector<std::string>& xy() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}
inline const std::vector<std::string>& xonly() {
  static const std::vector<std::string> v{"x"};
  return v;
}

inline tate::Polynomial poly(const std::string& text, const std::vector<std::string>& vars = xy()) {
  return tate::parse_polynomial(text, vars);
}

inline tate::TateOrder order(unsigned long p, const std::string& radii, const std::string& tie = "grevlex") {
  return tate::TateOrder(tate::parse_log_radii(radii), tate::MonomialOrder::parse(tie), tate::PrimeContext(p));
}

inline tate::Term term(const std::string& text, const std::vector<std::string>& vars = xy()) {
  auto f = poly(text, vars);
  return f.terms().front();
}

inline std::string show(const tate::Polynomial& f, const std::vector<std::string>& vars = xy()) {
  return tate::format_polynomial(f, vars);
}

}  // namespace testutil
