#ifndef STIELTJES_NUMERICS_ZETA_HPP
#define STIELTJES_NUMERICS_ZETA_HPP

#include "stieltjes/numerics/log_power.hpp"
#include "stieltjes/real.hpp"

namespace stieltjes::numerics {

/// Riemann zeta for real s > 1 by Euler-Maclaurin at the working precision.
Real zeta(const Real& s);

/// sum_{n>N} ln(n)^q / n^p, p > 1.
Real log_power_tail(const Real& p, int q, long n);

/// Harmonic-type partial sum sum_{n=1}^{N} ln(n)^q / n^p.
Real log_power_partial(const Real& p, int q, long n);

}  // namespace stieltjes::numerics

#endif  // STIELTJES_NUMERICS_ZETA_HPP
