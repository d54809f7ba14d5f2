#include "doctest.h"

#include "stieltjes/numerics/zeta.hpp"
#include "stieltjes/oracle.hpp"
#include "stieltjes/stieltjes.hpp"
#include "stieltjes/trigintegrals.hpp"

using namespace stieltjes;
using namespace stieltjes::series;

namespace {

const char* const kGamma1 = "-0.072815845483676724860586375874901319137736338334337952599";  // 58 digits
const char* const kGamma2 = "-0.0096903631928723184845303860352125293590658061013407498807";
const char* const kGamma3 = "0.0020538344203033458661600465427533842857158044454106203448";

StieltjesRequest request(int k, long n, Acceleration acc) {
  StieltjesRequest r;
  r.k = k;
  r.n_terms = n;
  r.acceleration = acc;
  return r;
}

std::vector<std::pair<long, Real>> samples(int j, long lo, long hi, long step) {
  std::vector<std::pair<long, Real>> s;
  for (long n = lo; n <= hi; n += step) s.emplace_back(n, summand(j, n).value);
  return s;
}

}  // namespace

TEST_CASE("euler: one term, tail correction and bracketing") {
  PrecisionGuard g(256);
  const auto one = euler_gamma(1, false);
  CHECK(abs(one.value - (Real(5) / 4 - constants::ln2())) < Real("1e-70"));

  const auto r = euler_gamma(1000);
  CHECK(abs(r.value - constants::euler()) < Real("1e-8"));
  CHECK(abs(r.value - constants::euler()) <= r.error_estimate + Real("1e-70"));

  // summand ~ -1/(12 j^3) < 0, so partial sums increase monotonically onto gamma
  Real prev = euler_gamma(10, false).value;
  for (long n : {20L, 40L, 80L, 160L}) {
    const Real cur = euler_gamma(n, false).value;
    CHECK(cur > prev);
    CHECK(cur < constants::euler());
    prev = cur;
  }
}

TEST_CASE("gamma1: both accelerations at N = 10^4") {
  PrecisionGuard g(256);
  const auto paper = gamma1(request(1, 10000, Acceleration::paper_1_4));
  CHECK(abs(paper.value - Real(kGamma1)) < Real("1e-9"));
  const auto tail = gamma1(request(1, 10000, Acceleration::asymptotic_tail));
  CHECK(abs(tail.value - Real(kGamma1)) < Real("1e-30"));
  CHECK(abs(tail.value - Real(kGamma1)) <= tail.error_estimate + Real("1e-57"));
}

TEST_CASE("gamma1: summand decay n^-4, and n^-6 after subtraction") {
  PrecisionGuard g(256);
  const auto e = summand_expansion({{1, Real(2)}}, 8);
  Real c4(0);
  for (const auto& [p, c] : e)
    if (p == 4) c4 = c;
  const Real pi4 = pow(constants::pi(), 4);
  CHECK(abs(c4 - Real(5) / (8 * pi4)) < Real("1e-70"));
  for (long n : {50L, 100L}) {
    const Real a = summand(1, n).value, b = summand(1, 2 * n).value;
    CHECK(abs(b / a * 16 - 1) < Real("0.1"));
    const Real a6 = a - c4 / pow(Real(n), 4), b6 = b - c4 / pow(Real(2 * n), 4);
    CHECK(abs(b6 / a6 * 64 - 1) < Real("0.1"));
  }
  // the accelerated constant absorbs c4 zeta(4) = 1/144
  CHECK(abs(Real(73) / 144 - Real(1) / 2 - c4 * numerics::zeta(Real(4))) < Real("1e-20"));
}

TEST_CASE("gamma1: constant shift between the two forms") {
  PrecisionGuard g(256);
  const long n = 500;
  const Real plain = gamma1(request(1, n, Acceleration::none)).value;
  const Real paper = gamma1(request(1, n, Acceleration::paper_1_4)).value;
  Real partial(0);
  for (long m = 1; m <= n; ++m) partial += Real(1) / pow(Real(m), 4);
  const Real c4 = Real(5) / (8 * pow(constants::pi(), 4));
  CHECK(abs((paper - plain) - c4 * (numerics::zeta(Real(4)) - partial)) < Real("1e-60"));
}

TEST_CASE("fit_tail: leading coefficient, degenerate input, decay exponent") {
  PrecisionGuard g(256);
  const auto s1 = samples(1, 50, 200, 5);
  const auto model = fit_tail(s1, 6);
  REQUIRE(model.coefficients.size() == 6);
  CHECK(model.coefficients[0].power == 4);
  const Real lead = Real(5) / (8 * pow(constants::pi(), 4));
  CHECK(abs(model.coefficients[0].coefficient / lead - 1) < Real("1e-6"));

  std::vector<std::pair<long, Real>> flat;
  for (long n = 10; n < 30; ++n) flat.emplace_back(n, Real(1));
  CHECK_THROWS_AS(fit_tail(flat, 4), IllConditionedFit);

  CHECK(abs(decay_exponent(s1) - 4) < Real("0.04"));
  const auto s2 = samples(2, 50, 200, 5);
  CHECK(abs(decay_exponent(s2) - 4) < Real("0.04"));
}

TEST_CASE("closed-form brackets match the combined summands") {
  PrecisionGuard g(256);
  for (long n : {1L, 2L, 7L, 60L}) {
    CHECK(abs(2 * bracket_gamma1(n).value - summand(1, n).value) < Real("1e-65"));
    const Real combined = 2 * bracket_gamma2(n).value - 4 * bracket_gamma1(n).value;
    CHECK(abs(combined - summand(2, n).value) < Real("1e-65"));
  }
}

TEST_CASE("gamma2 and gamma3") {
  PrecisionGuard g(256);
  const auto r2 = gamma2(request(2, 10000, Acceleration::asymptotic_tail));
  CHECK(abs(r2.value - Real(kGamma2)) < Real("1e-30"));
  CHECK(abs(r2.value - Real(kGamma2)) <= r2.error_estimate + Real("1e-57"));
  const auto r3 = gamma_j(request(3, 10000, Acceleration::asymptotic_tail));
  CHECK(abs(r3.value - Real(kGamma3)) < Real("1e-30"));
  CHECK(abs(r2.value) < abs(Real(kGamma1)));
  CHECK(abs(Real(kGamma1)) < constants::euler());
}

TEST_CASE("gamma_j reduces to gamma1 and gamma2") {
  PrecisionGuard g(256);
  for (int k : {1, 2}) {
    const auto general = gamma_j(request(k, 2000, Acceleration::asymptotic_tail));
    const auto special = k == 1 ? gamma1(request(1, 2000, Acceleration::asymptotic_tail))
                                : gamma2(request(2, 2000, Acceleration::asymptotic_tail));
    CHECK(abs(general.value - special.value) < Real("1e-10"));
  }
}

TEST_CASE("summand at n = 1 against the sine quadrature") {
  PrecisionGuard g(192);
  const Real two_pi = 2 * constants::pi();
  oracle::QuadratureProblem p;
  p.integrand = [&](const Real& x) {
    const Real l = log(x);
    return sin(two_pi * x) * (2 - l) * l / (x * x);
  };
  p.lower = Real(1);
  p.oscillation_period = Real(1);
  const auto q = oracle::integrate(p, Real("1e-40"));
  CHECK(abs(summand(2, 1).value + q.value / constants::pi()) < Real("1e-38"));
}

TEST_CASE("digamma series") {
  PrecisionGuard g(256);
  for (const char* as : {"1", "0.5", "2"}) {
    const Real a(as);
    const auto r = digamma_series(a, 10000);
    const Real ref = reference::digamma(a);
    CHECK(abs(r.value - ref) < Real("1e-20"));
    CHECK(abs(r.value - ref) <= r.error_estimate);
  }
  const Real half = digamma_series(Real("0.5"), 2000).value;
  CHECK(abs(half + constants::euler() + 2 * constants::ln2()) < Real("1e-15"));
}

TEST_CASE("gamma1 at a = 1/2") {
  PrecisionGuard g(256);
  const Real ln2 = constants::ln2();
  const Real expected = Real(kGamma1) - 2 * constants::euler() * ln2 - ln2 * ln2;
  const auto r = gamma1_half(10000);
  CHECK(abs(r.value - expected) < Real("1e-6"));
  CHECK(abs(r.value - expected) <= r.error_estimate + Real("1e-57"));
  // terms are positive, and the closed tail shrinks the error as N grows
  Real prev = abs(gamma1_half(5).value - expected);
  for (long n : {10L, 20L}) {
    const Real cur = abs(gamma1_half(n).value - expected);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(gamma1_half_summand(3).value > 0);
  CHECK(gamma1_half_summand(4).value > 0);
}

TEST_CASE("compute: dispatch, determinism across threads, rounding") {
  StieltjesRequest r = request(1, 3000, Acceleration::asymptotic_tail);
  r.precision_bits = 128;
  const auto one = compute(r);
  r.threads = 4;
  const auto four = compute(r);
  CHECK(one.value == four.value);
  CHECK(one.error_estimate == four.error_estimate);
  CHECK(one.value.precision() == 128);

  StieltjesRequest z = request(0, 1000, Acceleration::asymptotic_tail);
  PrecisionGuard g(256);
  CHECK(abs(compute(z).value - constants::euler()) < Real("1e-60"));
  z.a = Real(1) / 2;
  z.n_terms = 10000;
  CHECK(abs(compute(z).value - (constants::euler() + 2 * constants::ln2())) < Real("1e-15"));
}

TEST_CASE("request validation") {
  StieltjesRequest r;
  r.k = 99;
  CHECK_THROWS_AS(r.validate(), RecursionDepthExceeded);
  try {
    r.validate();
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("J_MAX") != std::string::npos);
  }
  r.k = 2;
  r.a = Real(1) / 2;
  CHECK_THROWS_AS(r.validate(), InvalidParameters);
  r.a = Real(3);
  r.k = 1;
  CHECK_THROWS_AS(r.validate(), InvalidParameters);
  r.a = Real(1);
  r.n_terms = 0;
  CHECK_THROWS_AS(r.validate(), InvalidParameters);
  r.n_terms = 10;
  CHECK_THROWS_AS(gamma1(r), InvalidParameters);  // too few terms for the tail fit
}
