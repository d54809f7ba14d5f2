#include "doctest.h"

#include "oracles.hpp"
#include "stieltjes/numerics/log_power.hpp"
#include "stieltjes/numerics/quadrature.hpp"
#include "stieltjes/trigintegrals.hpp"

using namespace stieltjes;
using namespace stieltjes::trig;
using hypergeom::Family;

namespace {

Real tiny(long bits) { return ldexp(Real(1), -bits); }

// int_1^inf sin(kappa x) ln^j x / x^2 dx: quadrature on [1, X] plus repeated
// integration by parts beyond X.
Real logsine_oracle(const Real& kappa, int j) {
  const Real two_pi = 2 * constants::pi();
  const Real x_end = max(two_pi * 40 / kappa, Real(200));
  auto f = [&](const Real& x) { return sin(kappa * x) * pow(log(x), j) / (x * x); };
  Real body(0);
  const Real period = two_pi / kappa;
  Real a(1);
  for (Real b = period; a < x_end; b += period) {
    const Real hi = min(b, x_end);
    if (hi > a) {
      body += numerics::adaptive_gauss(f, a, hi, tiny(150)).value;
      a = hi;
    }
  }
  auto d = numerics::LogPower<Real>::monomial(Real(1), Real(2), j);
  Real s, c;
  sin_cos(kappa * x_end, s, c);
  // I(f) = cos f/k + J(f')/k, J(g) = -sin g/k - I(g')/k
  Real tail(0), scale = Real(1) / kappa;
  for (int k = 0; k < 40; ++k) {
    tail += (k % 2 == 0 ? c : -s) * d(x_end) * scale * ((k / 2) % 2 == 0 ? 1 : -1);
    d = d.derivative();
    scale /= kappa;
  }
  return body + tail;
}

}  // namespace

TEST_CASE("trig: Ci and Si reference points") {
  PrecisionGuard g(256);
  CHECK(abs(ci(Real(1)) - Real("0.337403922900968134662646203889")) < Real("1e-29"));
  CHECK(abs(si(constants::pi()) - Real("1.851937051982466170361053370157992")) < Real("1e-32"));
  CHECK(abs(si_lower(Real(0)) + constants::pi() / 2) < tiny(250));
  for (const char* xs : {"0.01", "0.5", "3", "39.5", "41", "120", "1000"}) {
    const Real x(xs);
    CHECK(abs(ci(x) - oracle_ref::ci_series(x)) < tiny(245));
    CHECK(abs(si(x) - oracle_ref::si_series(x)) < tiny(245));
  }
  CHECK(abs(si(Real(-2)) + si(Real(2))) < tiny(250));
}

TEST_CASE("trig: si decays like 1/x") {
  PrecisionGuard g(128);
  for (int x = 11; x < 400; x += 13) CHECK(abs(si_lower(Real(x))) < Real(2) / Real(x));
}

TEST_CASE("trig: gamma + ln x - Ci(x) = (x^2/4) 2F3(1,1;2,2,3/2;-x^2/4)") {
  PrecisionGuard g(256);
  for (const char* xs : {"0.1", "0.5", "1", "2", "5", "10", "20"}) {
    const Real x(xs);
    const Real z = x * x / 4;
    const auto f = hypergeom::eval_auto(Family{2, 3}.spec(z), tiny(250));
    CHECK(abs(z * f.value - (constants::euler() + log(x) - ci(x))) < tiny(235));
  }
}

TEST_CASE("trig: Ci/z integrals against quadrature") {
  PrecisionGuard g(192);
  const Real a(2), x("0.5"), y(7);
  auto integrand = [&](const Real& z) { return ci(a * z) / z; };
  const auto q = numerics::adaptive_gauss(integrand, x, y, tiny(180));
  const auto r = ci_log_integral(a, x, y);
  CHECK(abs(r.value - q.value) < Real("1e-45"));
  CHECK(r.error_estimate < Real("1e-45"));
  CHECK(abs(ci_log_integral(-a, x, y).value - r.value) < tiny(180));
  CHECK(ci_log_integral(a, x, x).value == Real(0));
  CHECK_THROWS_AS(ci_log_integral(Real(0), x, y), InvalidParameters);
  CHECK_THROWS_AS(ci_log_integral(a, y, x), DomainError);
}

TEST_CASE("trig: Ci/z integral to infinity is the y -> inf limit") {
  PrecisionGuard g(192);
  const Real a(3), x("0.7");
  const auto inf = ci_log_integral_to_infinity(a, x);
  const auto big = ci_log_integral(a, x, Real(1000000));
  CHECK(abs(inf.value - big.value) < Real("1e-12"));
  for (const char* ys : {"2", "50", "900"}) {
    const Real y(ys);
    const Real split = inf.value - ci_log_integral_to_infinity(a, y).value;
    CHECK(abs(split - ci_log_integral(a, x, y).value) < Real("1e-50"));
  }
}

TEST_CASE("trig: finite log-sine integral against quadrature") {
  PrecisionGuard g(192);
  for (const char* ks : {"1", "3", "6.283185307179586"}) {
    const Real kappa(ks);
    const Real a("1"), b("5");
    auto f = [&](const Real& x) { return sin(kappa * x) * log(x) / (x * x); };
    const auto q = numerics::adaptive_gauss(f, a, b, tiny(180));
    const auto r = logsine_finite(kappa, a, b);
    CHECK(abs(r.value - q.value) < Real("1e-45"));
  }
  CHECK(logsine_finite(Real(2), Real(3), Real(3)).value == Real(0));
}

TEST_CASE("trig: j = 1 tail, three routes") {
  PrecisionGuard g(192);
  for (const char* ks : {"0.5", "1", "6.283185307179586476925286766559", "30"}) {
    const Real kappa(ks);
    const auto closed = logsine_tail(kappa, 1);
    const auto compact = logsine_tail_compact(kappa, 1);
    const Real q = logsine_oracle(kappa, 1);
    CHECK(abs(closed.value - compact.value) < Real("1e-50"));
    CHECK(abs(closed.value - q) < Real("1e-40"));
    const auto rec = build_recursion(1).g(1, kappa);
    CHECK(abs(rec.value - closed.value) <= rec.error_estimate + Real("1e-50"));
  }
}

TEST_CASE("trig: recursion constants") {
  PrecisionGuard g(192);
  const auto st = build_recursion(4);
  const Real ga = constants::euler(), pi = constants::pi();
  const Real c1 = ga * ga / 2 - pi * pi / 24;
  CHECK(abs(st.level(1).c - c1) < Real("1e-20"));
  CHECK(abs(st.level(1).c - c1) <= st.level(1).c_error);
  CHECK(st.c_constants().size() == 4u);
  CHECK(st.level(0).beta == Real(1));
  CHECK(st.level(3).beta == Real(6));
  CHECK_THROWS_AS(build_recursion(kJMax + 1), RecursionDepthExceeded);
  CHECK_THROWS_AS(st.level(5), RecursionDepthExceeded);
}

TEST_CASE("trig: higher tails, recursion against residue form and quadrature") {
  PrecisionGuard g(192);
  const auto st = build_recursion(4);
  for (int j = 2; j <= 4; ++j) {
    for (const char* ks : {"1", "6.283185307179586476925286766559", "20"}) {
      const Real kappa(ks);
      const auto rec = st.g(j, kappa);
      const auto compact = logsine_tail_compact(kappa, j);
      CHECK(abs(rec.value - compact.value) <= rec.error_estimate + compact.error_estimate + Real("1e-40"));
      CHECK(abs(rec.value - compact.value) < Real("1e-18"));
      CHECK(abs(compact.value - logsine_oracle(kappa, j)) < Real("1e-35"));
    }
  }
  CHECK(abs(logsine_tail(Real(3), 2).value - logsine_tail_compact(Real(3), 2).value) < Real("1e-18"));
}

TEST_CASE("trig: g_j vanishes at both ends") {
  PrecisionGuard g(160);
  const auto st = build_recursion(3);
  for (int j = 1; j <= 3; ++j) {
    const Real b("1e-6");
    CHECK(abs(st.g(j, b).value) < 2 * b * pow(-log(b), j + 1) / (j + 1));
    const Real big = 2 * constants::pi() * 100000;
    CHECK(abs(st.g(j, big).value) < Real("1e-8"));
    CHECK(abs(logsine_tail_compact(big, j).value) < Real("1e-8"));
  }
}

TEST_CASE("trig: precision doubling of the tail stays within its error estimate") {
  Real lo, err;
  {
    PrecisionGuard g(128);
    auto r = logsine_tail(Real(5), 1);
    lo = r.value;
    err = r.error_estimate;
  }
  PrecisionGuard g(256);
  CHECK(abs(logsine_tail(Real(5), 1).value - lo) <= err);
}

TEST_CASE("trig: query dispatch") {
  PrecisionGuard g(128);
  LogSineIntegralQuery q{Real(2), Real(1), std::nullopt, 1};
  CHECK(abs(evaluate(q).value - logsine_tail(Real(2), 1).value) < tiny(120));
  q.b = Real(4);
  CHECK(abs(evaluate(q).value - logsine_finite(Real(2), Real(1), Real(4)).value) < tiny(120));
  q.j = 2;
  CHECK_THROWS_AS(evaluate(q), InvalidParameters);
  q.b.reset();
  q.j = kJMax + 1;
  CHECK_THROWS_AS(evaluate(q), RecursionDepthExceeded);
}

TEST_CASE("trig: Laplace form equals 3F4(1,1,1;2,2,2,5/2;-kappa^2/4)") {
  PrecisionGuard g(160);
  for (const char* ks : {"1", "6.283185307179586476925286766559", "12"}) {
    const Real kappa(ks);
    const auto lf = laplace_form_3f4(kappa);
    const auto f = hypergeom::eval_taylor(Family{3, 5}.spec(kappa * kappa / 4), tiny(160));
    CHECK(abs(lf.value - f.value) < Real("1e-40"));
    CHECK(lf.method == Method::quadrature);
  }
  CHECK(abs(laplace_form_3f4(Real("1e-8")).value - 1) < Real("1e-16"));
}

TEST_CASE("trig: x^(mu-1) sin(a x) ln^k x on [0,1]") {
  PrecisionGuard g(160);
  CHECK(abs(mu_sine_integral(Real(1), constants::pi(), 0).value - 2 / constants::pi()) < tiny(150));
  CHECK(abs(mu_sine_integral(Real(2), Real(1), 0).value - (sin(Real(1)) - cos(Real(1)))) < tiny(150));
  CHECK(abs(mu_sine_integral(Real(2), Real(1), 0).value - Real("0.3011686789")) < Real("1e-10"));
  for (const char* ms : {"-0.5", "0.5", "2", "3.25"}) {
    const Real mu(ms);
    const Real a(3);
    const Real v = mu_sine_integral(mu, a, 0).value;
    CHECK(abs(v - mu_sine_series(mu, a).value) < tiny(145));
    // substitute x = t^2 to tame the endpoint for mu < 1
    auto f0 = [&](const Real& t) { return 2 * pow(t, 2 * mu - 1) * sin(a * t * t); };
    CHECK(abs(v - numerics::adaptive_gauss(f0, Real(0), Real(1), tiny(150)).value) < Real("1e-30"));
  }
  for (int k = 1; k <= 3; ++k) {
    const Real mu(2), a("1.5");
    const auto r = mu_sine_integral(mu, a, k);
    auto f = [&](const Real& t) {
      const Real x = t * t;
      return 2 * t * x * sin(a * x) * pow(log(x), k);
    };
    const auto q = numerics::adaptive_gauss(f, Real(0), Real(1), tiny(150));
    CHECK(abs(r.value - q.value) < Real("1e-30"));
    CHECK(r.error_estimate < Real("1e-40"));
  }
  CHECK_THROWS_AS(mu_sine_integral(Real(-1), Real(1), 0), DomainError);
}
