#ifndef STIELTJES_STIELTJES_HPP
#define STIELTJES_STIELTJES_HPP

#include <utility>
#include <vector>

#include "stieltjes/errors.hpp"
#include "stieltjes/real.hpp"
#include "stieltjes/series_result.hpp"

namespace stieltjes::series {

enum class Acceleration { none, paper_1_4, asymptotic_tail };

inline constexpr long kDefaultTerms = 10000;
inline constexpr int kDefaultTailOrder = 8;
inline constexpr long kDefaultBits = 256;

const char* acceleration_name(Acceleration a);

struct StieltjesRequest {
  int k = 1;
  Real a = Real(1);
  long n_terms = kDefaultTerms;
  Acceleration acceleration = Acceleration::asymptotic_tail;
  long precision_bits = kDefaultBits;
  unsigned threads = 1;
  int tail_order = kDefaultTailOrder;

  /// k <= J_MAX, a in {1, 1/2}, k >= 2 only with a = 1, n_terms >= 1.
  void validate() const;
};

/// summand(n) ~ sum coefficient ln^log_power(n) / n^power
struct TailTerm {
  int power = 0;
  int log_power = 0;
  Real coefficient;
};

struct TailModel {
  std::vector<TailTerm> coefficients;
  int order = 0;
  Real residual;  // max relative misfit over the samples

  Real operator()(const Real& n) const;
  /// sum_{m > n} of the model.
  Real tail_sum(long n) const;
};

using TailBasis = std::vector<std::pair<int, int>>;  // (power, log_power)

/// n^-lead, n^-(lead+2), ... with `order` members.
TailBasis even_power_basis(int order, int lead = 4);

/// Least-squares fit over the basis (default: even_power_basis(order)).
/// Throws IllConditionedFit if the relative residual exceeds 1e-8.
TailModel fit_tail(const std::vector<std::pair<long, Real>>& samples, int order, const TailBasis& basis = {});

/// Local decay exponent p of |summand| ~ C n^-p, from a log-log least-squares line.
Real decay_exponent(const std::vector<std::pair<long, Real>>& samples);

/// Weighted combination sum_m w_m u_m with u_m(b) = b^-1 int_1^inf sin(bx) ln^m x / x^2 dx.
using UCombination = std::vector<std::pair<int, Real>>;

/// Exact large-n expansion of sum_m w_m u_m(2 pi n): pairs (p, c_p) with
/// summand ~ sum c_p n^-p, even p up to max_power.
std::vector<std::pair<int, Real>> summand_expansion(const UCombination& w, int max_power);

/// The closed-form brackets of the gamma_1 and gamma_2 series at n (gamma^3 enters
/// the second with a minus sign).
SeriesResult bracket_gamma1(long n);
SeriesResult bracket_gamma2(long n);

/// Summand of gamma_j = sum_n [2 u_j - 2 j u_{j-1}](2 pi n) from the residue
/// forms (for j = 1 only the u_1 part; the u_0 part is the constant 1/2 - gamma).
SeriesResult summand(int j, long n);

/// gamma from 1/2 - sum_{j<=N} [ln((j+1)/j) - (1/(j+1) + 1/j)/2] with the exact tail.
SeriesResult euler_gamma(long n_terms, bool with_tail = true);
Real euler_summand(long j);

SeriesResult gamma1(const StieltjesRequest& req);
SeriesResult gamma2(const StieltjesRequest& req);
SeriesResult gamma_j(const StieltjesRequest& req);

/// psi(a) = ln a - 1/(2a) + sum_j [2 cos(2 pi j a) Ci(2 pi j a) - sin(2 pi j a)(pi - 2 Si(2 pi j a))].
SeriesResult digamma_series(const Real& a, long n_terms);

/// gamma_1(1/2) through the finite/infinite split of the log-sine integrals.
SeriesResult gamma1_half(long n_terms);
SeriesResult gamma1_half_summand(long n);

/// Dispatches on (k, a) at req.precision_bits; the result is rounded to it.
SeriesResult compute(const StieltjesRequest& req);

}  // namespace stieltjes::series

#endif  // STIELTJES_STIELTJES_HPP
