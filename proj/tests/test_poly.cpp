#include "tate/poly_io.hpp"
#include "tate/polynomial.hpp"

#include "support/helpers.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace tate;
using testutil::order;
using testutil::poly;
using testutil::xonly;

namespace {

const std::vector<std::string> xyt{"x", "y", "t"};
const std::vector<std::string> xt{"x", "t"};

Term term_of(const std::string& s, const std::vector<std::string>& vars) { return poly(s, vars).terms().front(); }

}  // namespace

TEST_CASE("leading term") {
  const auto f = poly("x + 2*x^2", xonly());
  CHECK(leading_term(f, order(2, "0")) == term_of("x", xonly()));
  CHECK(leading_term(f, order(2, "1")) == term_of("2*x^2", xonly()));
  CHECK(leading_term(poly("5", xonly()), order(3, "-1/2")) == term_of("5", xonly()));
  CHECK(leading_monomial(poly("3 + 1/9*y"), order(3, "0,0")) == Monomial{0, 1});
  CHECK_THROWS_AS(leading_term(Polynomial(1), order(2, "0")), std::invalid_argument);
}

TEST_CASE("Gauss valuation of a polynomial") {
  CHECK(gauss_valuation_poly(poly("x + 2*x^2", xonly()), order(2, "0")) == ExtValue(0));
  CHECK(gauss_valuation_poly(Polynomial(1), order(2, "0")).is_pos_inf());
  CHECK(gauss_valuation_poly(poly("4 + 2*x", xonly()), order(2, "1")) == ExtValue(0));
}

TEST_CASE("S-polynomials") {
  const TateOrder o = order(2, "0");
  const auto f = poly("x + 2*x^2", xonly());
  CHECK(spoly(f, f, o).is_zero());
  const auto s = spoly(f, poly("x", xonly()), o);
  CHECK(s == poly("2*x^2", xonly()));
  CHECK(spoly(poly("x^2"), poly("y^2"), order(2, "0,0")).is_zero());
  // the leading terms of the two products agree and cancel
  const auto g = poly("3*x*y - y^3"), h = poly("1/2*x^2 + 4*y");
  const TateOrder o2 = order(3, "0,1/2");
  const auto sp = spoly(g, h, o2);
  if (!sp.is_zero()) {
    const Term lg = leading_term(g, o2), lh = leading_term(h, o2);
    std::vector<Monomial::Exponent> e(2);
    for (std::size_t i = 0; i < 2; ++i) e[i] = std::max(lg.mono[i], lh.mono[i]);
    const Monomial lcm{std::span<const Monomial::Exponent>(e)};
    CHECK(compare_terms(leading_term(sp, o2), Term{lg.coeff * lh.coeff, lcm}, o2) < 0);
  }
}

TEST_CASE("homogenization") {
  CHECK(homogenize(poly("x^2 + y")) == poly("x^2 + y*t", xyt));
  CHECK(homogenize(Polynomial(2)).is_zero());
  CHECK(homogenize(poly("3 + x", xonly())) == poly("3*t + x", xt));
  CHECK(dehomogenize(poly("x^2 + y*t", xyt)) == poly("x^2 + y"));
  CHECK(dehomogenize(poly("x*t + x", xt)) == poly("2*x", xonly()));
  CHECK(homogenize(poly("x^3 - 2*x*y + 7")).is_homogeneous());

  testgen::Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const auto f = g.polynomial(g.between(1, 3), 4, 5);
    CHECK(dehomogenize(homogenize(f)) == f);
  }
}

TEST_CASE("leading terms commute with dehomogenization") {
  testgen::Gen g(31);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = g.between(1, 3);
    const TateOrder o = g.order(n);
    const TateOrder oh = TateOrder::homogenized(o);
    // homogeneous h over (r, 0) with t last
    const auto h = g.homogeneous(n + 1, int(g.between(1, 4)), 5);
    CHECK(dehomogenize(leading_term(h, oh)) == leading_term(dehomogenize(h), o));
    const auto f = g.nonzero_polynomial(n, 4, 5);
    CHECK(leading_term(f, o) == dehomogenize(leading_term(homogenize(f), oh)));
  }
}

TEST_CASE("s-support and (s,r)-degree") {
  const PrimeContext p2(2);
  const auto f = poly("x + 2*x^2", xonly());
  CHECK(support_s(f, parse_log_radii("1"), p2) == std::vector<Monomial>{Monomial{1}, Monomial{2}});
  CHECK(support_s(f, parse_log_radii("0"), p2) == std::vector<Monomial>{Monomial{1}});
  CHECK(support_s(poly("5", xonly()), parse_log_radii("3"), p2) == std::vector<Monomial>{Monomial{0}});
  CHECK(deg_sr(f, parse_log_radii("1"), parse_log_radii("0"), p2) == ExtValue(2));
  CHECK(deg_sr(poly("7", xonly()), parse_log_radii("1"), parse_log_radii("0"), p2) == ExtValue(0));

  testgen::Gen g(8);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = g.between(1, 3);
    const auto r = g.radii(n);
    const auto h = g.nonzero_polynomial(n, 4, 4);
    CHECK(deg_sr(h, r, r, PrimeContext(g.prime())) == ExtValue(0));
  }
}

TEST_CASE("exact division") {
  const auto q = exact_divide(poly("x^3*y - x*y^3"), poly("x + y"));
  REQUIRE(q);
  CHECK(*q == poly("x^2*y - x*y^2"));
  CHECK_FALSE(exact_divide(poly("x^2 + 1"), poly("x")));
  CHECK_THROWS_AS(exact_divide(poly("x"), Polynomial(2)), std::domain_error);
}

TEST_CASE("arithmetic keeps terms canonical") {
  testgen::Gen g(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = g.between(1, 3);
    const auto a = g.polynomial(n, 3, 4), b = g.polynomial(n, 3, 4);
    for (const auto& h : {a + b, a - b, a * b, a - a}) {
      for (const auto& t : h.terms()) CHECK_FALSE(t.coeff.is_zero());
    }
    CHECK((a - a).is_zero());
    CHECK(oracle::from_tate(a * b) == oracle::mul(oracle::from_tate(a), oracle::from_tate(b)));
  }
}

TEST_CASE("parsing polynomials") {
  CHECK(poly("x + 2*x^2", xonly()) == Polynomial(1, {Term{1, Monomial{1}}, Term{2, Monomial{2}}}));
  const auto f = poly("-3/8*x*y^2");
  REQUIRE(f.size() == 1);
  CHECK(f.terms()[0].coeff == Rational(-3, 8));
  CHECK(f.terms()[0].mono == Monomial{1, 2});
  CHECK(poly("2 x y") == poly("2*x*y"));
  CHECK(poly("x^2 - x^2 + y") == poly("y"));

  try {
    poly("x +", xonly());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(poly("x + z"), ParseError);
  CHECK_THROWS_AS(poly("x^-1"), ParseError);
  CHECK_THROWS_AS(poly("1/0*x"), ParseError);
}

TEST_CASE("parsing generator lists") {
  const auto in = parse_input("# comment\nx1 - x2^2; x3\nx2 - x2\n");
  CHECK(in.variables == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(in.polynomials.size() == 2);
  CHECK(in.warnings.size() == 1);

  const auto declared = parse_input("vars: b, a\na*b - 1");
  CHECK(declared.variables == std::vector<std::string>{"b", "a"});
  CHECK(parse_input("y + x, x").variables == std::vector<std::string>{"y", "x"});
  CHECK_THROWS_AS(parse_input("x + w", std::vector<std::string>{"x"}), ParseError);
}

TEST_CASE("formatting round-trips through the parser") {
  testgen::Gen g(3);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 200; ++i) {
    const auto f = g.polynomial(3, 4, 5);
    const TateOrder o = g.order(3);
    CHECK(parse_polynomial(format_polynomial(f, vars, &o), vars) == f);
    CHECK(parse_polynomial(format_polynomial(f, vars), vars) == f);
  }
  CHECK(format_polynomial(poly("x + 2*x^2", xonly()), xonly(), nullptr) != "");
  CHECK(format_polynomial(Polynomial(1), xonly()) == "0");
}
