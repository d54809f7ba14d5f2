#ifndef STIELTJES_REAL_HPP
#define STIELTJES_REAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

namespace stieltjes {

/// Lowest precision any Real is allowed to carry.
inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kDefaultPrecisionBits = 256;

/// Precision (in bits) used for results created on the calling thread.
long working_precision() noexcept;
void set_working_precision(long bits);

/// Scoped override of the calling thread's working precision.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(long bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  long saved_;
};

/// Arbitrary-precision real backed by an MPFR value.
///
/// Each value carries its own precision. Arithmetic rounds results to the
/// thread's working precision, so raising precision for an inner computation
/// is a matter of opening a PrecisionGuard.
class Real {
 public:
  Real();
  Real(int v);            // NOLINT(google-explicit-constructor)
  Real(long v);           // NOLINT(google-explicit-constructor)
  Real(long long v);      // NOLINT(google-explicit-constructor)
  Real(unsigned long v);  // NOLINT(google-explicit-constructor)
  Real(double v);         // NOLINT(google-explicit-constructor)
  explicit Real(std::string_view decimal);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  ~Real();

  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  long precision() const noexcept { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Copy rounded to `bits`.
  Real rounded(long bits) const;

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDZ); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| 2^-e < 1; very negative for zero.
  long exponent2() const noexcept;

  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  /// Shortest decimal string that parses back to exactly this value at
  /// this value's precision.
  std::string to_shortest_string() const;
  /// Parse at an explicit precision.
  static Real parse(std::string_view decimal, long bits);

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  /// Result slot at the working precision.
  static Real uninitialized();

 private:
  struct NoInit {};
  explicit Real(NoInit) noexcept;
  mpfr_t v_;
};

Real operator-(const Real& a);
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator/(long a, const Real& b);
Real operator+(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(const Real& a, long b);
Real operator-(long a, const Real& b);
inline Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
inline Real operator*(int a, const Real& b) { return static_cast<long>(a) * b; }
inline Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
inline Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }
inline Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
inline Real operator+(int a, const Real& b) { return static_cast<long>(a) + b; }
inline Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
inline Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
inline Real operator*(const Real& a, double b) { return a * Real(b); }
inline Real operator*(double a, const Real& b) { return Real(a) * b; }
inline Real operator/(const Real& a, double b) { return a / Real(b); }
inline Real operator/(double a, const Real& b) { return Real(a) / b; }
inline Real operator+(const Real& a, double b) { return a + Real(b); }
inline Real operator+(double a, const Real& b) { return Real(a) + b; }
inline Real operator-(const Real& a, double b) { return a - Real(b); }
inline Real operator-(double a, const Real& b) { return Real(a) - b; }

bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log2(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
void sin_cos(const Real& x, Real& s, Real& c);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real asin(const Real& x);
Real acos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
inline Real pow(const Real& x, int n) { return pow(x, static_cast<long>(n)); }
Real floor(const Real& x);
Real ceil(const Real& x);
Real round(const Real& x);
Real trunc(const Real& x);
Real fmod(const Real& x, const Real& y);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
Real hypot(const Real& a, const Real& b);
bool isfinite(const Real& x);
bool isnan(const Real& x);
bool isinf(const Real& x);

/// 2^-bits, the unit of relative rounding at `bits`.
Real epsilon_for(long bits);

namespace constants {
Real pi();
Real euler();
Real ln2();
}  // namespace constants

/// MPFR's own special functions. They are an independent implementation and
/// are only used as references by tests and diagnostics.
namespace reference {
Real zeta(const Real& s);
Real digamma(const Real& x);
Real gamma(const Real& x);
Real lgamma(const Real& x);
Real eint(const Real& x);
}  // namespace reference

}  // namespace stieltjes

// Eigen integration: enough for dense decompositions over Real.
#include <Eigen/Core>
#include <cstdlib>

namespace Eigen {
template <>
struct NumTraits<stieltjes::Real> : GenericNumTraits<stieltjes::Real> {
  using Real = stieltjes::Real;
  using NonInteger = stieltjes::Real;
  using Nested = stieltjes::Real;
  using Literal = stieltjes::Real;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };
  static stieltjes::Real epsilon() {
    return stieltjes::epsilon_for(stieltjes::working_precision() - 1);
  }
  static stieltjes::Real dummy_precision() {
    return stieltjes::epsilon_for(stieltjes::working_precision() * 9 / 10);
  }
  static stieltjes::Real highest() { return stieltjes::ldexp(stieltjes::Real(1), 1L << 20); }
  static stieltjes::Real lowest() { return -highest(); }
  static int digits10() { return static_cast<int>(stieltjes::working_precision() * 0.30103); }
  static stieltjes::Real infinity() { return stieltjes::Real(std::numeric_limits<double>::infinity()); }
  static stieltjes::Real quiet_NaN() { return stieltjes::Real(std::numeric_limits<double>::quiet_NaN()); }
};

namespace internal {
template <>
inline stieltjes::Real random<stieltjes::Real>() {
  return stieltjes::Real(static_cast<double>(std::rand()) / RAND_MAX);
}
template <>
inline stieltjes::Real random<stieltjes::Real>(const stieltjes::Real& a, const stieltjes::Real& b) {
  return a + (b - a) * random<stieltjes::Real>();
}
}  // namespace internal
}  // namespace Eigen

#endif  // STIELTJES_REAL_HPP
