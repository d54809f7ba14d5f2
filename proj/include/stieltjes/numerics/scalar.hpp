#ifndef STIELTJES_NUMERICS_SCALAR_HPP
#define STIELTJES_NUMERICS_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <limits>

#include "stieltjes/numerics/bernoulli.hpp"
#include "stieltjes/real.hpp"

namespace stieltjes::numerics {

/// Conversions and constants that differ between double and Real.
template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static double from_rational(const mpq_class& q) { return q.get_d(); }
  static double pi() { return 3.14159265358979323846; }
  static double epsilon() { return std::numeric_limits<double>::epsilon(); }
  static long bits() { return 53; }
};

template <>
struct ScalarTraits<Real> {
  static Real from_rational(const mpq_class& q) { return to_real(q); }
  static Real pi() { return constants::pi(); }
  static Real epsilon() { return epsilon_for(working_precision()); }
  static long bits() { return working_precision(); }
};

}  // namespace stieltjes::numerics

#endif  // STIELTJES_NUMERICS_SCALAR_HPP
