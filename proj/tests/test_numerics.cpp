#include "doctest.h"

#include <Eigen/Dense>

#include "stieltjes/numerics/bernoulli.hpp"
#include "stieltjes/numerics/log_power.hpp"
#include "stieltjes/numerics/quadrature.hpp"
#include "stieltjes/numerics/summation.hpp"
#include "stieltjes/numerics/zeta.hpp"
#include "stieltjes/real.hpp"

using namespace stieltjes;
using namespace stieltjes::numerics;

TEST_CASE("real: round trip and guard digits") {
  PrecisionGuard g(256);
  const Real x = constants::pi() / Real(7);
  CHECK(Real::parse(x.to_shortest_string(), 256) == x);
  Real y;
  {
    PrecisionGuard g2(512);
    y = exp(constants::pi() / Real(7)) * log(Real(3));
  }
  const Real z = exp(x) * log(Real(3));
  CHECK(abs(z - y) / abs(y) < ldexp(Real(1), 8 - 256));
}

TEST_CASE("real: precision floor") {
  PrecisionGuard g(32);
  CHECK(working_precision() == kMinPrecisionBits);
  CHECK(Real(1).precision() == kMinPrecisionBits);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK(bernoulli(13) == 0);
}

TEST_CASE("zeta by Euler-Maclaurin") {
  PrecisionGuard g(256);
  const Real pi = constants::pi();
  CHECK(abs(zeta(Real(2)) - pi * pi / Real(6)) < ldexp(Real(1), -250));
  CHECK(abs(zeta(Real(4)) - pow(pi, 4) / Real(90)) < ldexp(Real(1), -250));
  CHECK(abs(zeta(Real(3)) - reference::zeta(Real(3))) < ldexp(Real(1), -250));
  CHECK(abs(zeta(Real("1.1")) - reference::zeta(Real("1.1"))) < ldexp(Real(1), -245));
  // tail identity: zeta(4) = partial + tail
  CHECK(abs(log_power_partial(Real(4), 0, 10) + log_power_tail(Real(4), 0, 10) - zeta(Real(4))) <
        ldexp(Real(1), -248));
}

TEST_CASE("log-power tail with logarithms against direct sum") {
  PrecisionGuard g(128);
  // sum_{n>5} ln^2 n / n^3 vs a long direct sum plus its own EM tail
  const Real a = log_power_tail(Real(3), 2, 5);
  const Real b = log_power_partial(Real(3), 2, 2000) - log_power_partial(Real(3), 2, 5) + log_power_tail(Real(3), 2, 2000);
  CHECK(abs(a - b) < ldexp(Real(1), -115));
}

TEST_CASE("periodic Bernoulli tail reproduces int_1^inf P1/x^2 = 1/2 - gamma") {
  PrecisionGuard g(192);
  const long m = 40;
  const auto rule = gauss_legendre(48);
  Real s(0);
  for (long j = 1; j < m; ++j) {
    auto f = [j](const Real& x) { return (x - Real(j) - Real(1) / 2) / (x * x); };
    s += gauss_panel(*rule, f, Real(j), Real(j + 1));
  }
  auto w = LogPower<Real>::monomial(Real(1), Real(2), 0);
  s += periodic_bernoulli_tail(w, Real(m), epsilon_for(192)).value;
  CHECK(abs(s - (Real(1) / 2 - constants::euler())) < ldexp(Real(1), -170));
}

TEST_CASE("gauss-legendre and adaptive quadrature") {
  PrecisionGuard g(256);
  auto r = adaptive_gauss([](const Real& x) { return exp(x); }, Real(0), Real(1), ldexp(Real(1), -240));
  CHECK(abs(r.value - (exp(Real(1)) - 1)) < ldexp(Real(1), -235));
  auto rd = adaptive_gauss([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-14);
  CHECK(std::abs(rd.value - 2.0) < 1e-13);
}

TEST_CASE("cvz acceleration of log 2") {
  PrecisionGuard g(256);
  std::vector<Real> a;
  for (int k = 0; k < 160; ++k) a.push_back(Real(1) / Real(k + 1));
  CHECK(abs(cvz_alternating(a) - constants::ln2()) < ldexp(Real(1), -240));
  std::vector<double> ad;
  for (int k = 0; k < 30; ++k) ad.push_back(1.0 / (k + 1));
  CHECK(std::abs(cvz_alternating(ad) - std::log(2.0)) < 1e-15);
}

TEST_CASE("series exp and pairwise sum") {
  // exp(t) coefficients 1/m!
  std::vector<double> a{0.0, 1.0};
  auto b = series_exp(a, 6);
  CHECK(b[5] == doctest::Approx(1.0 / 120));
  std::vector<Real> v;
  for (int i = 1; i <= 1000; ++i) v.push_back(Real(i));
  CHECK(pairwise_sum(v) == Real(500500));
}

TEST_CASE("eigen least squares over Real") {
  PrecisionGuard g(256);
  std::vector<Real> x, y;
  for (int i = 1; i <= 8; ++i) {
    x.push_back(Real(10 * i));
    y.push_back(Real(3) + Real(2) / Real(10 * i) - Real(5) / pow(Real(10 * i), 2));
  }
  std::vector<std::function<Real(const Real&)>> basis{[](const Real& t) { return Real(1) / t; },
                                                      [](const Real& t) { return Real(1) / (t * t); }};
  CHECK(abs(generalized_richardson(x, y, basis) - Real(3)) < ldexp(Real(1), -230));
}

TEST_CASE("parallel map is scheduling independent") {
  PrecisionGuard g(200);
  auto f = [](std::size_t i) { return sqrt(Real(static_cast<long>(i) + 2)); };
  auto a = parallel_map<Real>(101, 1, f);
  auto b = parallel_map<Real>(101, 4, f);
  CHECK(pairwise_sum(a) == pairwise_sum(b));
  CHECK(b[5].precision() == 200);
}
