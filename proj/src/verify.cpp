// Named identity checks behind `stj verify`.
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stieltjes/hypergeom.hpp"
#include "stieltjes/oracle.hpp"
#include "stieltjes/trigintegrals.hpp"

namespace stieltjes::oracle {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<const Check*> VerifyReport::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(&c);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "lemma2", "lemma3", "lemma4", "lemma5",
                                              "lemma7", "lemma8", "appendix", "fourier"};
  return names;
}

namespace {

using hypergeom::Family;

struct Ctx {
  std::string suite;
  Real tol;
  Real target;  // quadrature and series targets
  VerifyReport* report;

  // Records |difference| against `tolerance` (tol when empty).
  void equal(const std::string& name, const std::function<Real()>& diff, std::optional<Real> tolerance = {},
             std::string detail = {}) {
    Check c;
    c.suite = suite;
    c.name = name;
    c.tolerance = tolerance.value_or(tol);
    try {
      c.achieved = abs(diff());
      c.passed = c.achieved <= c.tolerance;
      c.status = c.passed ? "pass" : "ToleranceNotMet";
    } catch (const ToleranceNotMet& e) {
      c.achieved = e.achieved_error();
      c.passed = false;
      c.status = "ToleranceNotMet";
      detail = e.what();
    } catch (const std::exception& e) {
      c.achieved = Real(-1);
      c.passed = false;
      c.status = std::string("error: ") + e.what();
    }
    c.detail = std::move(detail);
    report->checks.push_back(std::move(c));
  }

  // Boolean property with a reported statistic.
  void property(const std::string& name, const std::function<std::pair<bool, Real>()>& f, std::string detail) {
    Check c;
    c.suite = suite;
    c.name = name;
    c.tolerance = Real(0);
    try {
      const auto [ok, stat] = f();
      c.achieved = stat;
      c.passed = ok;
      c.status = ok ? "pass" : "fail";
    } catch (const std::exception& e) {
      c.achieved = Real(-1);
      c.passed = false;
      c.status = std::string("error: ") + e.what();
    }
    c.detail = std::move(detail);
    report->checks.push_back(std::move(c));
  }
};

Real quad(const RealFunction& f, const Real& lo, const Real& hi, const Real& target, bool singular_lo = false) {
  QuadratureProblem p;
  p.integrand = f;
  p.lower = lo;
  p.upper = hi;
  p.singular_lower = singular_lo;
  return integrate(p, target).value;
}

Real quad_osc(const RealFunction& f, const Real& lo, const Real& period, const Real& offset, const Real& target,
              bool singular_lo = false) {
  QuadratureProblem p;
  p.integrand = f;
  p.lower = lo;
  p.oscillation_period = period;
  p.zero_offset = offset;
  p.singular_lower = singular_lo;
  return integrate(p, target).value;
}

// `scale` is the factor the value gets multiplied by afterwards
Real taylor(const Family& f, const Real& z, const Real& target, const Real& scale = Real(1)) {
  return hypergeom::eval_taylor(f.spec(z), target / (1 + abs(scale))).value;
}

const Family kF23{2, 3};
const Family kF34_32{3, 3};
const Family kF34_52{3, 5};

std::string num(const Real& x) { return x.to_string(20); }

void lemma1(Ctx& c) {
  for (const char* xs : {"0.5", "2", "7", "25"}) {
    const Real x(xs);
    c.equal(std::string("Ci hypergeometric form vs quadrature, x=") + xs, [&] {
      const Real hyp = constants::euler() + log(x) - x * x / 4 * taylor(kF23, x * x / 4, c.target, x * x);
      const Real q = constants::euler() + log(x) + quad([](const Real& t) { return (cos(t) - 1) / t; }, Real(0), x, c.target);
      return hyp - q;
    });
  }
}

// explicit hypergeometric form of int_x^y Ci(az)/z dz
Real lemma2a(const Real& a, const Real& x, const Real& y, const Real& target) {
  const Real g = constants::euler();
  const Real ly = log(a * y), lx = log(a * x);
  return g * log(y / x) + (ly * ly - lx * lx) / 2 -
         a * a / 8 * (y * y * taylor(kF34_32, a * a * y * y / 4, target, a * a * y * y) - x * x * taylor(kF34_32, a * a * x * x / 4, target, a * a * y * y));
}

// explicit form of int_a^b Ci(kz) ln z / z dz
Real lemma2b(const Real& k, const Real& a, const Real& b, const Real& target) {
  const Real g = constants::euler();
  const Real la = log(a), lb = log(b);
  const Real lka = log(k * a), lkb = log(k * b);
  const Real brace = trig::ci(k * b) * (1 + lb) - trig::ci(k * a) * (1 + la) - g * log(b / a) + (lka * lka - lkb * lkb) / 2 +
                     k * k / 8 * (b * b * taylor(kF34_32, k * k * b * b / 4, target, pow(k * b, 3)) - a * a * taylor(kF34_32, k * k * a * a / 4, target, pow(k * b, 3)));
  return k * brace + sin(k * a) / a * (1 + la) - sin(k * b) / b * (1 + lb);
}

void lemma2(Ctx& c) {
  const std::vector<std::array<const char*, 3>> sets_a{{"2", "0.5", "7"}, {"0.3", "1", "40"}, {"5", "0.1", "3"}};
  for (const auto& s : sets_a) {
    const Real a(s[0]), x(s[1]), y(s[2]);
    c.equal(std::string("(a) Ci(az)/z closed form vs quadrature, a=") + s[0] + " [" + s[1] + "," + s[2] + "]", [&] {
      const Real q = quad([&](const Real& z) { return trig::ci(a * z) / z; }, x, y, c.target);
      return lemma2a(a, x, y, c.target) - q;
    });
  }
  const std::vector<std::array<const char*, 3>> sets_b{{"1", "1", "5"}, {"6.283185307179586476925286766559", "0.5", "1"}, {"7", "1", "10"}};
  for (const auto& s : sets_b) {
    const Real k(s[0]), a(s[1]), b(s[2]);
    c.equal(std::string("(b) log-sine on [a,b] closed form vs quadrature, kappa=") + s[0] + " [" + s[1] + "," + s[2] + "]", [&] {
      const Real q = quad([&](const Real& x) { return sin(k * x) * log(x) / (x * x); }, a, b, c.target);
      return lemma2b(k, a, b, c.target) - q;
    });
  }
}

Real logsine_quad(const Real& k, int j, const Real& target) {
  return quad_osc([&](const Real& x) { return sin(k * x) * pow(log(x), j) / (x * x); }, Real(1), 2 * constants::pi() / k,
                  Real(0), target);
}

void lemma3(Ctx& c) {
  for (const char* ks : {"1", "6.283185307179586476925286766559", "10"}) {
    const Real k(ks);
    c.equal(std::string("(b) Ci route vs oscillatory quadrature, kappa=") + ks, [&] {
      const Real route = -k * (trig::ci_log_integral_to_infinity(k, Real(1)).value + trig::ci(k)) + sin(k);
      return route - logsine_quad(k, 1, c.target);
    });
  }
  const Real k = 2 * constants::pi();
  c.equal("(a) j=2 interchanged integral vs direct, kappa=2pi", [&] {
    const Real rhs = 2 * quad_osc([&](const Real& t) { return log(t) / t * (-k * trig::ci(k * t) + sin(k * t) / t); }, Real(1),
                                  2 * constants::pi() / k, constants::pi() / (2 * k), c.target);
    return rhs - logsine_quad(k, 2, c.target);
  });
}

void lemma4(Ctx& c) {
  for (const char* bs : {"1", "6.283185307179586476925286766559", "10"}) {
    const Real b(bs);
    // the integrand carries 1/x: integrate the b-derivative form over b
    c.equal(std::string("(b) int[-b Ci(bx) + sin(bx)/x] dx/x vs log-sine integral, b=") + bs, [&] {
      const Real rhs = quad_osc([&](const Real& x) { return (-b * trig::ci(b * x) + sin(b * x) / x) / x; }, Real(1),
                                2 * constants::pi() / b, constants::pi() / (2 * b), c.target);
      return rhs - logsine_quad(b, 1, c.target);
    });
  }
  const auto st = trig::build_recursion(3);
  const Real b = 2 * constants::pi();
  for (int j = 2; j <= 3; ++j) {
    const auto g = st.g(j, b);
    c.equal("(d) recursion g_" + std::to_string(j) + "(2pi) vs quadrature", [&] { return g.value - logsine_quad(b, j, c.target); },
            max(c.tol, 4 * g.error_estimate), "recursion error estimate " + g.error_estimate.to_string(3));
  }
  const Real c1 = constants::euler() * constants::euler() / 2 - constants::pi() * constants::pi() / 24;
  c.equal("c_1 = gamma^2/2 - pi^2/24 from g_1(inf) = 0", [&] { return st.level(1).c - c1; }, Real("1e-8"),
          "c_1 = " + num(st.level(1).c));
}

void lemma5(Ctx& c) {
  const Real kap("1.7");
  const auto base = hypergeom::family(hypergeom::NamedFamily::F34_52);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 0}, {2, 2}, {1, 1}}) {
    c.equal("termwise antiderivative (p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ") on [0,1.7]", [&] {
      auto f = [&](const Real& k) { return pow(k, q) * taylor(base, pow(k, p) / 4, c.target / 16, pow(kap, q)); };
      const auto anti = hypergeom::integrate_spec(base.spec(pow(kap, p) / 4), Real(p), Real(q));
      const Real closed = pow(kap, anti.kappa_power) * anti.scale * hypergeom::eval_taylor(anti.spec, c.target / 16).value;
      return closed - quad(f, Real(0), kap, c.target);
    });
  }
  c.equal("collapse: kappa^2 3F4(..,3/2) integrates to kappa^3/3 3F4(..,5/2)", [&] {
    auto f = [&](const Real& k) { return k * k * taylor(kF34_32, k * k / 4, c.target / 16); };
    const Real closed = pow(kap, 3) / 3 * taylor(kF34_52, kap * kap / 4, c.target / 16);
    return closed - quad(f, Real(0), kap, c.target);
  });
}

// Laplace-form integrand, evaluated with enough guard bits to survive the cancellation at large x
Real laplace_integrand(const Real& k, const Real& x) {
  const long bits = working_precision();
  // the bracket is ~ k^3 e^-x / 3, so past this point the integrand is below 2^-bits
  const double xd = x.to_double();
  if (xd > 0.7 * static_cast<double>(bits) + 3 * std::log(1 + k.to_double()) + 2 * std::log(1 + xd) + 20) return Real(0);
  Real v;
  {
    PrecisionGuard guard(bits + 16 + static_cast<long>(1.45 * std::max(0.0, xd)));
    const Real e = exp(-x / 2);
    v = x * x * (-k * cos(e * k) + sin(e * k) / e);
  }
  return v.rounded(bits);
}

void lemma7(Ctx& c) {
  for (const char* ks : {"1", "6.283185307179586476925286766559", "12"}) {
    const Real k(ks);
    const Real ref = taylor(kF34_52, k * k / 4, c.target / 16);
    c.equal(std::string("Laplace integral vs 3F4(1,1,1;2,2,2,5/2), kappa=") + ks, [&] {
      QuadratureProblem p;
      p.lower = Real(0);
      p.integrand = [&](const Real& x) { return laplace_integrand(k, x); };
      return Real(3) / 2 / pow(k, 3) * integrate(p, c.target).value - ref;
    });
    c.equal(std::string("library Laplace form vs 3F4, kappa=") + ks, [&] { return trig::laplace_form_3f4(k).value - ref; });
  }
}

void lemma8(Ctx& c) {
  const std::vector<std::pair<const char*, const char*>> pairs{{"0.5", "3"}, {"2", "1"}, {"3.25", "5"}};
  for (const auto& [ms, as] : pairs) {
    const Real mu(ms), a(as);
    const std::string tag = std::string("mu=") + ms + " a=" + as;
    auto integrand = [&](const Real& x) { return pow(x, mu - 1) * sin(a * x); };
    const Real q = quad(integrand, Real(0), Real(1), c.target, true);
    c.equal("1F2 form vs quadrature, " + tag, [&] { return trig::mu_sine_integral(mu, a, 0).value - q; });
    c.equal("1F1 difference (odd terms) vs quadrature, " + tag, [&] { return trig::mu_sine_series(mu, a).value - q; });
  }
  const Real mu(2), a("1.5");
  c.equal("mu-derivative k=1 vs quadrature of x sin(ax) ln x, mu=2 a=1.5", [&] {
    const Real q = quad([&](const Real& x) { return x * sin(a * x) * log(x); }, Real(0), Real(1), c.target, true);
    return trig::mu_sine_integral(mu, a, 1).value - q;
  });
}

void appendix(Ctx& c) {
  for (auto kind : {AppendixKind::cosine, AppendixKind::sine}) {
    for (const char* as : {"0.1", "0.5", "1", "2", "10"}) {
      const Real a(as);
      std::string detail;
      c.equal(std::string("closed form vs quadrature, ") + appendix_kind_name(kind) + " a=" + as, [&] {
        const auto r = appendix_verify(kind, a, c.target);
        detail = "closed form " + num(r.closed_form) + ", quadrature " + num(r.quadrature.value);
        return max(r.difference, abs(r.elementary_quadrature - r.elementary_exact));
      }, {}, "");
      if (!detail.empty()) c.report->checks.back().detail = detail;
    }
  }
  {
    const auto r = appendix_verify(AppendixKind::cosine, Real(1), c.target);
    c.equal("harmonic generating function at z=1/2, 60 terms plus remainder",
            [&] { return r.generating_partial + r.generating_remainder - r.generating_exact; }, {},
            "60-term partial " + num(r.generating_partial) + ", omitted " + r.generating_remainder.to_string(3));
  }
  const long bits = working_precision();
  const Real small = ldexp(Real(1), -bits);
  c.equal("a->0 limit of the cosine form is pi/2",
          [&] { return appendix_closed_form(AppendixKind::cosine, small) - constants::pi() / 2; });
  const Real lim = appendix_closed_form(AppendixKind::sine, small);
  c.equal("a->0 limit of the sine form is +(1+gamma)", [&] { return lim - (1 + constants::euler()); }, {},
          "limit " + num(lim) + " (sign +)");
  c.equal("direct int_0^inf Ci(x) ln x dx = pi/2", [&] {
    return quad_osc([](const Real& x) { return trig::ci(x) * log(x); }, Real(0), 2 * constants::pi(), Real(0), c.target, true) -
           constants::pi() / 2;
  });
  c.equal("direct int_0^inf si(x) ln x dx = +(1+gamma)", [&] {
    return quad_osc([](const Real& x) { return trig::si_lower(x) * log(x); }, Real(0), 2 * constants::pi(),
                    constants::pi() / 2, c.target, true) -
           (1 + constants::euler());
  });
}

void fourier(Ctx& c) {
  c.equal("int_1^inf P1(x)/x^2 dx = 1/2 - gamma", [&] {
    return p1_integral(numerics::LogPower<Real>::monomial(Real(1), Real(2), 0)).value - (Real(1) / 2 - constants::euler());
  });
  // w = x^-2 on [1, 4]; int_1^4 sin(k x)/x^2 dx = k (Ci(4k) - Ci(k)) at k = 2 pi n
  const Real direct = quad([](const Real& x) { return (x - floor(x) - Real(1) / 2) / (x * x); }, Real(1), Real(2), c.target) +
                      quad([](const Real& x) { return (x - floor(x) - Real(1) / 2) / (x * x); }, Real(2), Real(3), c.target) +
                      quad([](const Real& x) { return (x - floor(x) - Real(1) / 2) / (x * x); }, Real(3), Real(4), c.target);
  std::vector<Real> errs;
  c.property("Fourier route -> direct P1 integral on [1,4], rate >= 1/J", [&] {
    Real partial(0);
    long n = 0;
    const Real tp = 2 * constants::pi();
    for (long j : {10L, 100L, 1000L}) {
      for (; n < j; ) {
        ++n;
        const Real k = tp * Real(n);
        partial -= (trig::ci(4 * k) - trig::ci(k)) * k / (constants::pi() * Real(n));
      }
      errs.push_back(abs(partial - direct));
    }
    const Real slope = log(errs[2] / errs[0]) / log(Real(100));
    return std::make_pair(slope <= Real("-0.9"), slope);
  }, "log-log slope of |Fourier - direct| over J in {10, 100, 1000}");
  P1Evaluator p1;
  c.property("|P1 - Fourier_J| <= 1/(J dist(x,Z)) and |P1| <= 1/2", [&] {
    bool ok = true;
    Real worst(0);
    const long j = 200;
    for (const char* xs : {"0.05", "0.3", "0.5", "1.77", "3.9"}) {
      const Real x(xs);
      const Real frac = x - floor(x);
      const Real dist = min(frac, 1 - frac);
      const Real e = abs(p1(x) - p1.fourier(x, j));
      worst = max(worst, e * Real(j) * dist);
      ok = ok && e * Real(j) * dist <= 1 && abs(p1(x)) <= Real(1) / 2;
    }
    return std::make_pair(ok, worst);
  }, "max of J dist(x,Z) |P1 - Fourier_J| at J=200");
}

}  // namespace

VerifyReport verify(const std::string& suite, const Real& tol) {
  if (!(tol > Real(0))) throw InvalidParameters("verify: tolerance must be positive");
  static const std::vector<std::pair<std::string, void (*)(Ctx&)>> table{
      {"lemma1", lemma1}, {"lemma2", lemma2}, {"lemma3", lemma3}, {"lemma4", lemma4}, {"lemma5", lemma5},
      {"lemma7", lemma7}, {"lemma8", lemma8}, {"appendix", appendix}, {"fourier", fourier}};
  VerifyReport report;
  const long bits = working_precision();
  const Real target = max(tol / 64, ldexp(Real(1), -(bits - 24)));
  bool found = false;
  for (const auto& [name, fn] : table) {
    if (suite != "all" && suite != name) continue;
    found = true;
    Ctx c{name, tol, target, &report};
    fn(c);
  }
  if (!found) throw InvalidParameters("verify: unknown suite '" + suite + "'");
  return report;
}

}  // namespace stieltjes::oracle
