#include "tate/mora.hpp"

#include "support/helpers.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace tate;
using testutil::order;
using testutil::poly;
using testutil::xonly;

namespace {

std::vector<mpq_class> finite_radii(const LogRadii& r) {
  std::vector<mpq_class> out;
  for (const auto& v : r) out.push_back(v.finite().value());
  return out;
}

}  // namespace

TEST_CASE("degree ecart") {
  CHECK(ecart1(poly("x + 2*x^2", xonly()), order(2, "0")) == 1);
  CHECK(ecart1(poly("x^2", xonly()), order(2, "0")) == 0);
  CHECK(ecart1(poly("x + 2*x^2", xonly()), order(2, "1")) == 0);
  CHECK_THROWS_AS(ecart1(Polynomial(1), order(2, "0")), std::invalid_argument);
}

TEST_CASE("support ecart") {
  CHECK(ecart2(poly("x^2 + x + 1"), poly("x^2 + y")) == 1);
  const auto h = poly("3*x*y - 1/2*y^4 + 7");
  CHECK(ecart2(h, h) == 0);
  CHECK(ecart2(Polynomial(2), poly("x + y")) == 2);
  CHECK(ecart2_shifted(poly("x^3 + x^2*y"), Monomial{1, 0}, poly("x^2 + x*y")) == 0);
  CHECK(ecart2_shifted(poly("x^3"), Monomial{1, 0}, poly("x^2 + x*y")) == 1);
  CHECK_THROWS_AS(ecart2(poly("x", xonly()), poly("x + y")), std::invalid_argument);
}

TEST_CASE("Mora reduces X by X - 2X^2 to zero") {
  const TateOrder o = order(2, "0");
  const std::vector<Polynomial> G{poly("x - 2*x^2", xonly())};
  const auto f = poly("x", xonly());
  const WnfResult r = wnf_with_cofactors(f, G, o);
  CHECK(r.remainder.is_zero());
  CHECK(r.steps <= 3);
  REQUIRE(r.divisor_log.size() == r.steps);
  // h0 = X is recorded since ecart1(g) = 1 > 0 = ecart1(X); then 2X^2 is reduced by X itself
  CHECK(r.divisor_log[0].added_to_t);
  CHECK(r.divisor_log[0].divisor == 0);
  CHECK(r.divisor_log[1].divisor == 1);
  CHECK(r.divisor_log[1].lead_before == Term{2, Monomial{2}});
  CHECK(r.unit == poly("1 - 2*x", xonly()));
  CHECK(r.cofactors.at(0) == poly("1", xonly()));
  CHECK(check_certificate(f, G, r, o).ok());
  CHECK(wnf(f, G, o).is_zero());
}

TEST_CASE("trivial weak normal forms") {
  const TateOrder o = order(3, "0,0");
  const auto f = poly("x*y - 2");
  const WnfResult none = wnf_with_cofactors(f, {}, o);
  CHECK(none.remainder == f);
  CHECK(none.unit == poly("1"));
  CHECK(none.cofactors.empty());
  CHECK(none.steps == 0);

  CHECK(wnf(poly("x^2*y"), std::vector<Polynomial>{poly("x^2")}, o).is_zero());

  const auto g = poly("x^2 + 3*y");
  const WnfResult self = wnf_with_cofactors(g, std::vector<Polynomial>{g}, o);
  CHECK(self.remainder.is_zero());
  CHECK(self.unit == poly("1"));
  CHECK(self.cofactors.at(0) == poly("1"));
  CHECK(self.steps == 1);

  // irreducible leading term stays
  const auto h = wnf(poly("y + x^2"), std::vector<Polynomial>{poly("x^3")}, order(2, "0,0"));
  CHECK(h == poly("y + x^2"));
}

TEST_CASE("weak normal form errors") {
  const TateOrder o = order(2, "0,0");
  CHECK_THROWS_AS(wnf(poly("x"), std::vector<Polynomial>{Polynomial(2)}, o), std::invalid_argument);
  CHECK_THROWS_AS(wnf(poly("x"), std::vector<Polynomial>{poly("x", xonly())}, o), std::invalid_argument);
  CHECK_THROWS_AS(wnf(poly("x", xonly()), {}, o), std::invalid_argument);
}

TEST_CASE("remainders agree with a direct implementation") {
  testgen::Gen g(4242);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = g.between(1, 3);
    const TateOrder o = g.order(n);
    const auto G = g.divisors(n, 4, 4, 4);
    const auto f = g.nonzero_polynomial(n, 4, 5);
    std::vector<oracle::Poly> OG;
    for (const auto& d : G) OG.push_back(oracle::from_tate(d));
    const auto expected = oracle::mora_wnf(oracle::from_tate(f), OG, {finite_radii(o.radii()), o.prime().p()}, 60);
    if (!expected) continue;
    ++compared;
    CHECK(oracle::from_tate(wnf(f, G, o)) == *expected);
  }
  CHECK(compared >= 250);
}

TEST_CASE("certificates of random reductions") {
  testgen::Gen g(77);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = g.between(1, 3);
    const TateOrder o = g.order(n);
    const auto G = g.divisors(n, 4, 4, 4);
    const auto f = g.nonzero_polynomial(n, 4, 5);
    WnfOptions opts;
    opts.step_limit = 60;
    WnfResult r;
    try {
      r = wnf_with_cofactors(f, G, o, opts);
    } catch (const StepLimitExceeded&) {
      continue;
    }
    ++checked;
    const CertificateReport rep = check_certificate(f, G, r, o);
    CHECK(rep.identity);
    CHECK(rep.unit);
    CHECK(rep.lt_bounds);
    CHECK(rep.irreducible);
    CHECK(r.remainder == wnf(f, G, o, opts));
    // leading terms strictly decrease along the trace
    for (std::size_t k = 1; k < r.divisor_log.size(); ++k) {
      CHECK(compare_terms(r.divisor_log[k].lead_before, r.divisor_log[k - 1].lead_before, o) < 0);
    }
    for (const auto& d : G) CHECK(ecart1(d, o) >= 0);
  }
  CHECK(checked >= 250);
}

TEST_CASE("a broken certificate is detected") {
  const TateOrder o = order(2, "0");
  const std::vector<Polynomial> G{poly("x - 2*x^2", xonly())};
  WnfResult r = wnf_with_cofactors(poly("x", xonly()), G, o);
  r.cofactors[0] = poly("2", xonly());
  CHECK_FALSE(check_certificate(poly("x", xonly()), G, r, o).identity);
  WnfResult bad_unit = wnf_with_cofactors(poly("x", xonly()), G, o);
  bad_unit.unit = poly("2 - 2*x", xonly());
  CHECK_FALSE(check_certificate(poly("x", xonly()), G, bad_unit, o).unit);
}

TEST_CASE("members of an ideal with a single generator reduce to zero") {
  testgen::Gen g(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = g.between(1, 2);
    const TateOrder o = g.order(n);
    const auto d = g.nonzero_polynomial(n, 3, 3);
    const auto u = g.nonzero_polynomial(n, 2, 3);
    WnfOptions opts;
    opts.step_limit = 200;
    try {
      CHECK(wnf(u * d, std::vector<Polynomial>{d}, o, opts).is_zero());
    } catch (const StepLimitExceeded&) {
      // see the non-terminating input below
    }
  }
}

// Over exact rationals some inputs make the leading valuation climb forever:
// the leading valuation of the remainder climbs without bound.
TEST_CASE("known non-terminating reduction hits the step limit") {
  const std::vector<std::string> v{"x1", "x2"};
  const TateOrder o = order(2, "1/2,0");
  const std::vector<Polynomial> G{
      poly("-9/2*x1*x2^2 + 4/3*x1^2*x2^2 - 8/3", v), poly("3/4*x1^3*x2 + 2*x1^2*x2 - 8*x1", v),
      poly("-7/4 + 1/2*x1*x2^2 - 2*x2", v), poly("1/4*x1*x2 - 3*x1^2*x2", v)};
  const auto f = poly("1/2*x1^2*x2^2 - 1/2*x1 + 5*x2^2 - 4/3*x1*x2^3 - 4", v);
  WnfOptions opts;
  opts.step_limit = 60;
  CHECK_THROWS_AS(wnf(f, G, o, opts), StepLimitExceeded);
  std::vector<oracle::Poly> OG;
  for (const auto& d : G) OG.push_back(oracle::from_tate(d));
  CHECK_FALSE(oracle::mora_wnf(oracle::from_tate(f), OG, {finite_radii(o.radii()), 2}, 60));
}

TEST_CASE("stats accumulate across calls") {
  const TateOrder o = order(2, "0");
  const std::vector<Polynomial> G{poly("x - 2*x^2", xonly())};
  WnfStats stats;
  WnfOptions opts;
  opts.stats = &stats;
  wnf(poly("x", xonly()), G, o, opts);
  wnf(poly("x^2", xonly()), G, o, opts);
  CHECK(stats.calls == 2);
  CHECK(stats.steps >= 3);
  CHECK(stats.max_t_size >= 2);
}
