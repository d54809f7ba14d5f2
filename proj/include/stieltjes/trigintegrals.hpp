#ifndef STIELTJES_TRIGINTEGRALS_HPP
#define STIELTJES_TRIGINTEGRALS_HPP

#include <optional>
#include <vector>

#include "stieltjes/errors.hpp"
#include "stieltjes/hypergeom.hpp"
#include "stieltjes/real.hpp"
#include "stieltjes/series_result.hpp"

namespace stieltjes::trig {

inline constexpr double kXSwitch = 40.0;
inline constexpr int kJMax = 6;

/// Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt, x > 0.
Real ci(const Real& x);
/// Si(x) = int_0^x sin t / t dt.
Real si(const Real& x);
/// si(x) = Si(x) - pi/2 = -int_x^inf sin t / t dt, x >= 0.
Real si_lower(const Real& x);

/// int_x^y Ci(a z)/z dz (real part for a < 0).
SeriesResult ci_log_integral(const Real& a, const Real& x, const Real& y);
/// int_x^inf Ci(a z)/z dz.
SeriesResult ci_log_integral_to_infinity(const Real& a, const Real& x);

/// int_a^b sin(kappa x) ln x / x^2 dx.
SeriesResult logsine_finite(const Real& kappa, const Real& a, const Real& b);

/// int_1^inf sin(kappa x) ln^j x / x^2 dx.
SeriesResult logsine_tail(const Real& kappa, int j);

struct LogSineIntegralQuery {
  Real kappa;
  Real a;
  std::optional<Real> b;  // empty means +inf
  int j = 1;
};

/// int_a^b sin(kappa x) ln^j x / x^2 dx for the closed-form cases: a = 1,
/// b = inf (any j <= kJMax) or finite b with j = 1.
SeriesResult evaluate(const LogSineIntegralQuery& q);

/// u_j(b) = g_j(b)/b as
///   beta (sin b/b - Ci b) + sum_k log_coeffs[k] ln^k b
///   + sum_m hyp_coeffs[m] b^2 mF(m+1)(1..;2..,3/2;-b^2/4) + c.
struct RecursionLevel {
  Real beta;
  std::vector<Real> log_coeffs;
  std::vector<Real> hyp_coeffs;
  Real c;
  Real c_error;
  std::vector<Real> log_errors;  // bounds on log_coeffs inherited from earlier c_j
};

class RecursionState {
 public:
  int j_max() const { return static_cast<int>(levels_.size()) - 1; }
  const RecursionLevel& level(int j) const;
  std::vector<Real> c_constants() const;

  /// g_j(b) = int_1^inf sin(b x) ln^j x / x^2 dx.
  SeriesResult g(int j, const Real& b) const;
  SeriesResult u(int j, const Real& b) const;

 private:
  friend RecursionState build_recursion(int j_max);
  std::vector<RecursionLevel> levels_;
};

/// Iterates g_j = -j b int g_{j-1}/b^2 db + c_j b from g_0 = sin b - b Ci(b),
/// fixing each c_j from g_j(inf) = 0 by extrapolation over
/// b in {1e3, 3e3, 1e4} * 2 pi.
RecursionState build_recursion(int j_max);

/// Residue form u_j(b) = Lambda_j(ln b) + (-1)^j j!/(3 2^(j+2)) b^2 F_{j+2,5/2}(-b^2/4).
struct CompactForm {
  int j = 0;
  std::vector<Real> log_poly;  // Lambda_j coefficients in ln b
  Real hyp_coeff;
  hypergeom::Family family;
};
CompactForm compact_form(int j);
SeriesResult logsine_tail_compact(const Real& kappa, int j);

/// (3/2) kappa^-3 int_0^inf x^2 [-kappa cos(e^{-x/2} kappa) + e^{x/2} sin(e^{-x/2} kappa)] dx.
SeriesResult laplace_form_3f4(const Real& kappa);

/// int_0^1 x^(mu-1) sin(a x) ln^k x dx.
SeriesResult mu_sine_integral(const Real& mu, const Real& a, int k);
/// sum_m (-1)^m a^(2m+1) / ((mu+2m+1)(2m+1)!), the termwise 1F1-difference form.
SeriesResult mu_sine_series(const Real& mu, const Real& a);

}  // namespace stieltjes::trig

#endif  // STIELTJES_TRIGINTEGRALS_HPP
