#include "tate/poly_io.hpp"
#include "tate/systems.hpp"

#include "support/oracle.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace tate;

namespace {

ParsedInput golden(const std::string& name) {
  std::ifstream in(std::string(TATE_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

}  // namespace

TEST_CASE("katsura systems") {
  const PolynomialSystem k2 = katsura(2);
  const ParsedInput expected = golden("katsura2.txt");
  CHECK(k2.variables == expected.variables);
  CHECK(k2.equations == expected.polynomials);
  CHECK(katsura(3).equations.size() == 4);
  CHECK(katsura(3).variables.size() == 4);
  CHECK(katsura(6).equations.size() == 7);
  CHECK(katsura(6).variables.front() == "x0");
  CHECK_THROWS_AS(katsura(1), std::invalid_argument);
}

TEST_CASE("katsura 2 has four solutions") {
  std::vector<oracle::Poly> F;
  for (const auto& f : katsura(2).equations) F.push_back(oracle::from_tate(f));
  const auto gb = oracle::classical_gb(F, oracle::lex_less);
  // shape position: one element in x2 alone, of degree 4, and x0, x1 linear over it
  int univariate = 0;
  for (const auto& g : gb) {
    bool only_last = true;
    int deg = 0;
    for (const auto& [e, c] : g) {
      if (e[0] != 0 || e[1] != 0) only_last = false;
      deg = std::max(deg, e[2]);
    }
    if (only_last) {
      ++univariate;
      CHECK(deg == 4);
    }
  }
  CHECK(univariate == 1);
  CHECK(gb.size() == 3);
}

TEST_CASE("cyclic systems") {
  const ParsedInput expected = golden("cyclic3.txt");
  CHECK(cyclic(3).variables == expected.variables);
  CHECK(cyclic(3).equations == expected.polynomials);
  const PolynomialSystem c2 = cyclic(2);
  REQUIRE(c2.equations.size() == 2);
  CHECK(c2.equations[0] == parse_polynomial("x1 + x2", c2.variables));
  CHECK(c2.equations[1] == parse_polynomial("x1*x2 - 1", c2.variables));
  CHECK(cyclic(5).equations.size() == 5);
}

TEST_CASE("systems by name") {
  CHECK(system_by_name("katsura:3").name == "katsura:3");
  CHECK(system_by_name("cyclic:5").equations.size() == 5);
  CHECK_THROWS_AS(system_by_name("katsura"), std::invalid_argument);
  CHECK_THROWS_AS(system_by_name("katsura:x"), std::invalid_argument);
  CHECK_THROWS_AS(system_by_name("noon:3"), std::invalid_argument);
}
