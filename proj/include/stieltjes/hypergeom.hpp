#ifndef STIELTJES_HYPERGEOM_HPP
#define STIELTJES_HYPERGEOM_HPP

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stieltjes/errors.hpp"
#include "stieltjes/real.hpp"
#include "stieltjes/series_result.hpp"

namespace stieltjes::hypergeom {

inline constexpr double kZSwitch = 400.0;

/// pFq parameter set and argument.
struct HypSpec {
  std::vector<Real> numerator;
  std::vector<Real> denominator;
  Real argument;

  /// Throws InvalidSpec on a nonpositive-integer denominator parameter or q != p+1.
  void validate() const;
};

/// Sums the defining series at boosted precision until the tail bound drops
/// below target_abs_err. The value is rounded back to the caller's precision.
SeriesResult eval_taylor(const HypSpec& spec, const Real& target_abs_err, std::size_t max_terms = 2000000);

/// int kappa^q pFq(...; -kappa^p/4) dkappa = kappa^(q+1)/(q+1) * spec(...).
struct Antiderivative {
  HypSpec spec;
  Real kappa_power;  // q+1
  Real scale;        // 1/(q+1)
};

Antiderivative integrate_spec(const HypSpec& spec, const Real& p, const Real& q);

/// pF_{p+1}(1,...,1; 2,...,2, alpha; -z) with p = units and alpha = alpha_twice/2.
struct Family {
  int units = 2;
  int alpha_twice = 3;

  Real alpha() const { return Real(alpha_twice) / Real(2); }
  /// Exponent of the oscillatory envelope in kappa = 2 sqrt(z): 1/2 - p - alpha.
  Real theta() const { return Real(1 - 2 * units - alpha_twice) / Real(2); }
  int leading_index() const { return units + (alpha_twice - 1) / 2; }
  HypSpec spec(const Real& z) const;
  std::string name() const;
  friend bool operator==(const Family&, const Family&) = default;
};

enum class NamedFamily { F23_32, F34_52, F45_52 };
Family family(NamedFamily f);
std::optional<Family> match_family(const HypSpec& spec);

inline constexpr int kMaxFamilyUnits = 16;
inline constexpr int kExponentialDepth = 400;

struct GaussianRational {
  mpq_class re;
  mpq_class im;
};

/// Oscillatory part O(kappa) = Re[exp(i kappa) sum_k d[k] kappa^-(min_index+k)]
/// with exact Gaussian-rational coefficients. Memoized; safe for concurrent use.
struct OscillatorySeries {
  int min_index = 0;
  std::vector<GaussianRational> d;
};

const OscillatorySeries& oscillatory_series(const Family& f);

struct AlgebraicTerm {
  Real coefficient;
  int ln_power = 0;
  int z_power = -1;
};

/// F(-z) ~ H(-z) + E(-z) + E(z), H = sum coefficient ln^ln_power(z) z^z_power,
/// E(-z) + E(z) = 2 Gamma(alpha) sum_k A_k kappa^(theta-k) cos(kappa + pi (theta-k)/2).
struct AsymExpansion {
  std::vector<AlgebraicTerm> algebraic_terms;
  Real theta;
  std::vector<Real> exp_coeffs;
  Real alpha;
};

AsymExpansion asym_expansion(const Family& f, int order);

/// Algebraic part H(-z) from the residue at s = -1.
SeriesResult asym_algebraic(const Family& f, const Real& z);
SeriesResult asym_algebraic(NamedFamily f, const Real& z);
SeriesResult asym_algebraic(const HypSpec& spec);

/// E(-z) + E(z) truncated after `order` terms; error estimate is the first
/// omitted term.
SeriesResult asym_exponential(const Family& f, const Real& z, int order);
SeriesResult asym_exponential(NamedFamily f, const Real& z, int order);

/// Envelope of term k of the exponential part: |cos-channel| + |sin-channel| coefficient
/// times (2 sqrt z)^-(leading power + k).
Real exponential_term_bound(const Family& f, const Real& z, int k);

/// Largest order whose terms still decrease at this z, and the error at it.
struct OptimalOrder {
  int order;
  Real error;
};
OptimalOrder optimal_exponential_order(const Family& f, const Real& z, const Real& target);

/// Regime dispatcher: Taylor for |z| <= kZSwitch or unsupported specs;
/// algebraic + exponential parts beyond, when the truncated expansion meets
/// target_abs_err, otherwise Taylor at boosted precision.
SeriesResult eval_auto(const HypSpec& spec, const Real& target_abs_err);

/// Least-squares determination of A_0..A_{order-1} from Taylor values at the
/// given z grid.
struct CoefficientFit {
  Family family;
  std::vector<Real> coefficients;
  Real residual;
};
CoefficientFit fit_exponential_coefficients(const Family& f, const std::vector<Real>& z_grid, int order);

/// Versioned text table: one record per (family, k).
struct CoefficientRecord {
  std::string family;
  int k = 0;
  std::string value;
  std::string residual;
};
void write_coefficient_table(std::ostream& os, const std::vector<CoefficientFit>& fits);
std::vector<CoefficientRecord> read_coefficient_table(std::istream& is);

}  // namespace stieltjes::hypergeom

#endif  // STIELTJES_HYPERGEOM_HPP
