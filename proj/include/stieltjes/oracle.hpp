#ifndef STIELTJES_ORACLE_HPP
#define STIELTJES_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stieltjes/errors.hpp"
#include "stieltjes/numerics/log_power.hpp"
#include "stieltjes/real.hpp"
#include "stieltjes/series_result.hpp"

// Brute-force references that share no formulas with the series engine.
namespace stieltjes::oracle {

using RealFunction = std::function<Real(const Real&)>;

struct QuadratureProblem {
  RealFunction integrand;
  Real lower;
  std::optional<Real> upper;  // empty: +infinity
  bool singular_lower = false;
  bool singular_upper = false;
  /// Infinite oscillatory tails: the integrand changes sign near
  /// zero_offset + m * period / 2.
  std::optional<Real> oscillation_period;
  Real zero_offset = Real(0);
};

/// Adaptive Gauss-Legendre with an exponential map at singular endpoints.
/// Infinite ranges: between-zeros panels plus alternating-series acceleration
/// when oscillatory, otherwise the map x = lower - 1 + e^u.
/// Throws ToleranceNotMet carrying the best value when the estimate misses target.
SeriesResult integrate(const QuadratureProblem& problem, const Real& target_abs_err);

/// P1(x) = x - floor(x) - 1/2 and its Fourier partial sums.
struct P1Evaluator {
  Real operator()(const Real& x) const;
  /// -sum_{j<=terms} sin(2 pi j x) / (pi j)
  Real fourier(const Real& x, long terms) const;
};

/// int_1^inf P1(x) w(x) dx: Gauss-Legendre on each [m, m+1] below `split`,
/// then the periodic-Bernoulli expansion -sum_r (-1)^(r-1) B_(r+1)/(r+1)! w^(r-1)(split).
SeriesResult p1_integral(const numerics::LogPower<Real>& w, long split = 64);

/// gamma_k = int_1^inf P1(x) ln^(k-1) x (k - ln x) / x^2 dx (k >= 1), gamma_0 = 1/2 - int P1/x^2.
SeriesResult stieltjes_quadrature(int k);

/// [sum_{m=0}^N ln^k(m+a)/(m+a) - ln^(k+1)(N+a)/(k+1)] extrapolated
/// over a geometric ladder below N with the basis ln^q(x)/x^p, x = N_i + a.
/// No (-1)^k/k! prefactor: that factor already sits in the Laurent series.
SeriesResult stieltjes_limit(int k, const Real& a, long n);

enum class AppendixKind { cosine, sine };
const char* appendix_kind_name(AppendixKind k);

/// Right-hand sides of int_0^inf e^(-at) trig(t) (1 - ln t) dt as closed forms.
Real appendix_closed_form(AppendixKind kind, const Real& a);

struct AppendixReport {
  AppendixKind kind = AppendixKind::cosine;
  Real a;
  Real closed_form;
  SeriesResult quadrature;
  Real difference;
  Real generating_partial;  // 2 sum_{m<60} H_2m z^2m at z = 1/2
  Real generating_exact;
  Real generating_remainder;  // bound on the omitted terms
  Real elementary_quadrature;  // int_0^inf e^(-at) cos t dt
  Real elementary_exact;       // a / (1 + a^2)
  bool passed = false;
};

AppendixReport appendix_verify(AppendixKind kind, const Real& a, const Real& target);

// ---------------------------------------------------------------------------
// Named identity checks, grouped in suites.

struct Check {
  std::string suite;
  std::string name;
  Real achieved;   // |difference| (or the statistic named in `detail`)
  Real tolerance;
  bool passed = false;
  std::string status;  // "pass", "fail", "ToleranceNotMet" or the error text
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool passed() const;
  std::vector<const Check*> failures() const;
};

/// lemma1, lemma2, lemma3, lemma4, lemma5, lemma7, lemma8, appendix, fourier.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") at the working precision. Unknown names throw InvalidParameters.
VerifyReport verify(const std::string& suite, const Real& tol);

}  // namespace stieltjes::oracle

#endif  // STIELTJES_ORACLE_HPP
