#include "doctest.h"

#include "stieltjes/oracle.hpp"
#include "stieltjes/stieltjes.hpp"
#include "stieltjes/trigintegrals.hpp"

using namespace stieltjes;
using namespace stieltjes::oracle;

namespace {

const char* const kGamma1 = "-0.072815845483676724860586375874901319137736338334337952599";
const char* const kGamma2 = "-0.0096903631928723184845303860352125293590658061013407498807";

}  // namespace

TEST_CASE("integrate: log singularity and oscillatory tail") {
  PrecisionGuard g(192);
  QuadratureProblem p;
  p.integrand = [](const Real& x) { return log(x); };
  p.lower = Real(0);
  p.upper = Real(1);
  p.singular_lower = true;
  const auto r = integrate(p, Real("1e-45"));
  CHECK(abs(r.value + 1) < Real("1e-45"));
  CHECK(r.method == Method::quadrature);

  const Real two_pi = 2 * constants::pi();
  QuadratureProblem s;
  s.integrand = [&](const Real& x) { return sin(two_pi * x) / (x * x); };
  s.lower = Real(1);
  s.oscillation_period = Real(1);
  const auto q = integrate(s, Real("1e-45"));
  CHECK(abs(q.value + two_pi * trig::ci(two_pi)) < Real("1e-44"));
}

TEST_CASE("integrate: decaying infinite range") {
  PrecisionGuard g(192);
  QuadratureProblem p;
  p.integrand = [](const Real& x) { return exp(-x) * x; };
  p.lower = Real(0);
  CHECK(abs(integrate(p, Real("1e-45")).value - 1) < Real("1e-44"));
}

TEST_CASE("integrate: unattainable target throws with best value") {
  PrecisionGuard g(128);
  QuadratureProblem p;
  p.integrand = [](const Real& x) { return log(x); };
  p.lower = Real(0);
  p.upper = Real(1);
  p.singular_lower = true;
  try {
    integrate(p, Real("1e-300"));
    FAIL("expected ToleranceNotMet");
  } catch (const ToleranceNotMet& e) {
    CHECK(abs(e.best_value() + 1) < Real("1e-30"));
    CHECK(e.achieved_error() > 0);
  }
}

TEST_CASE("P1: range, Fourier sums, integral against 1/x^2") {
  PrecisionGuard g(192);
  P1Evaluator p1;
  for (const char* xs : {"0.1", "1.5", "2.999", "7.25"}) {
    const Real x(xs);
    CHECK(abs(p1(x)) <= Real(1) / 2);
    const Real d = min(x - floor(x), ceil(x) - x);
    for (long j : {100L, 400L}) CHECK(abs(p1.fourier(x, j) - p1(x)) <= 1 / (Real(j) * d));
  }
  CHECK(p1(Real(3)) == Real(-1) / 2);
  const auto r = p1_integral(numerics::LogPower<Real>::monomial(Real(1), Real(2), 0));
  CHECK(abs(r.value - (Real(1) / 2 - constants::euler())) < Real("1e-50"));
}

TEST_CASE("quadrature and limit oracles for the constants") {
  PrecisionGuard g(192);
  const auto q0 = stieltjes_quadrature(0);
  CHECK(abs(q0.value - constants::euler()) < Real("1e-50"));
  const auto q1 = stieltjes_quadrature(1);
  CHECK(abs(q1.value - Real(kGamma1)) < Real("1e-50"));
  const auto q2 = stieltjes_quadrature(2);
  CHECK(abs(q2.value - Real(kGamma2)) < Real("1e-50"));

  const auto l0 = stieltjes_limit(0, Real(1), 20000);
  CHECK(abs(l0.value - constants::euler()) < Real("1e-20"));
  CHECK(abs(l0.value - constants::euler()) <= l0.error_estimate);
  const auto lh = stieltjes_limit(0, Real("0.5"), 20000);
  CHECK(abs(lh.value - (constants::euler() + 2 * constants::ln2())) < Real("1e-20"));
  const auto l1 = stieltjes_limit(1, Real(1), 20000);
  CHECK(abs(l1.value - Real(kGamma1)) < Real("1e-15"));
  CHECK(abs(l1.value - Real(kGamma1)) <= l1.error_estimate);
}

TEST_CASE("appendix closed forms and verification") {
  PrecisionGuard g(256);
  const Real pi = constants::pi(), ga = constants::euler(), ln2 = constants::ln2();
  const Real cos1 = (pi / 2 + ln2 + 2 * (1 + ga)) / 4;
  const Real sin1 = (-pi / 2 + ln2 + 2 * (1 + ga)) / 4;
  CHECK(abs(appendix_closed_form(AppendixKind::cosine, Real(1)) - cos1) < Real("1e-70"));
  CHECK(abs(appendix_closed_form(AppendixKind::sine, Real(1)) - sin1) < Real("1e-70"));
  CHECK(abs(cos1 - Real("1.3545937")) < Real("1e-7"));
  CHECK(abs(sin1 - Real("0.5691955")) < Real("1e-7"));

  // small a approaches the a -> 0 value pi/2 at rate a ln a
  const Real a("1e-3");
  CHECK(abs(appendix_closed_form(AppendixKind::cosine, a) - pi / 2) < 10 * a * abs(log(a)));
  CHECK(abs(appendix_closed_form(AppendixKind::sine, Real(1000))) < Real("1e-5"));
  CHECK_THROWS_AS(appendix_closed_form(AppendixKind::cosine, Real(0)), DomainError);

  for (auto kind : {AppendixKind::cosine, AppendixKind::sine}) {
    const auto rep = appendix_verify(kind, Real(1), Real("1e-14"));
    CHECK(rep.passed);
    CHECK(abs(rep.difference) < Real("1e-12"));
    CHECK(abs(rep.generating_partial - rep.generating_exact) <= rep.generating_remainder);
    CHECK(abs(rep.elementary_quadrature - rep.elementary_exact) < Real("1e-12"));
  }
}

TEST_CASE("verify: suites run and unknown names are rejected") {
  PrecisionGuard g(192);
  for (const char* s : {"lemma1", "lemma5", "fourier"}) {
    const auto rep = verify(s, Real("1e-10"));
    CHECK(!rep.checks.empty());
    CHECK(rep.passed());
  }
  CHECK_THROWS_AS(verify("lemma6", Real("1e-10")), InvalidParameters);
  CHECK(suite_names().size() == 9);
}
