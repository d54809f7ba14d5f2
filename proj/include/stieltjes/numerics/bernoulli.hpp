#ifndef STIELTJES_NUMERICS_BERNOULLI_HPP
#define STIELTJES_NUMERICS_BERNOULLI_HPP

#include <gmpxx.h>

#include "stieltjes/real.hpp"

namespace stieltjes::numerics {

/// Exact Bernoulli number B_n (B_1 = -1/2). Thread-safe, memoized.
mpq_class bernoulli(int n);

/// B_n rounded to the working precision.
Real bernoulli_real(int n);

/// Exact rational to Real at the working precision.
Real to_real(const mpq_class& q);

}  // namespace stieltjes::numerics

#endif  // STIELTJES_NUMERICS_BERNOULLI_HPP
