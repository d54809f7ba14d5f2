#include "stieltjes/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace stieltjes {

namespace {

thread_local long t_working_bits = kDefaultPrecisionBits;

long clamp_bits(long bits) { return std::max(bits, kMinPrecisionBits); }

}  // namespace

long working_precision() noexcept { return t_working_bits; }

void set_working_precision(long bits) { t_working_bits = clamp_bits(bits); }

PrecisionGuard::PrecisionGuard(long bits) : saved_(t_working_bits) {
  t_working_bits = clamp_bits(bits);
}

PrecisionGuard::~PrecisionGuard() { t_working_bits = saved_; }

Real::Real(NoInit) noexcept { mpfr_init2(v_, t_working_bits); }

Real Real::uninitialized() { return Real(NoInit{}); }

Real::Real() : Real(NoInit{}) { mpfr_set_zero(v_, 1); }
Real::Real(int v) : Real(NoInit{}) { mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(long v) : Real(NoInit{}) { mpfr_set_si(v_, v, MPFR_RNDN); }
Real::Real(long long v) : Real(NoInit{}) { mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN); }
Real::Real(unsigned long v) : Real(NoInit{}) { mpfr_set_ui(v_, v, MPFR_RNDN); }
Real::Real(double v) : Real(NoInit{}) { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(std::string_view decimal) : Real(NoInit{}) {
  const std::string s(decimal);
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + s);
  }
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real::~Real() { mpfr_clear(v_); }

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

namespace {

// Compound assignment keeps the working-precision contract of the binary
// operators: the left operand is widened or narrowed first.
void adopt_working(mpfr_ptr v) {
  if (mpfr_get_prec(v) != t_working_bits) mpfr_prec_round(v, t_working_bits, MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  adopt_working(v_);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  adopt_working(v_);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  adopt_working(v_);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  adopt_working(v_);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real Real::rounded(long bits) const {
  Real r(*this);
  mpfr_prec_round(r.v_, clamp_bits(bits), MPFR_RNDN);
  return r;
}

long Real::exponent2() const noexcept {
  if (!mpfr_regular_p(v_)) return mpfr_zero_p(v_) ? std::numeric_limits<long>::min() / 2 : 0;
  return static_cast<long>(mpfr_get_exp(v_));
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e = 0;
  std::unique_ptr<char, void (*)(char*)> mant(
      mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(std::max(digits, 1)), v_, MPFR_RNDN),
      mpfr_free_str);
  std::string m(mant.get());
  std::string sign;
  if (m.front() == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  while (m.size() > 1 && m.back() == '0') m.pop_back();
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  const long exp10 = static_cast<long>(e) - 1;
  if (exp10 != 0) out += "e" + std::to_string(exp10);
  return out;
}

Real Real::parse(std::string_view decimal, long bits) {
  PrecisionGuard guard(bits);
  return Real(decimal);
}

std::string Real::to_shortest_string() const {
  if (!mpfr_regular_p(v_)) return to_string(1);
  const long bits = precision();
  // Enough digits always round-trip; search downward for the shortest.
  int hi = static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30103)) + 2;
  int lo = 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (Real::parse(to_string(mid), bits) == *this) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return to_string(hi);
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  const auto p = os.precision();
  return os << x.to_string(p > 0 ? static_cast<int>(p) : 6);
}

#define STIELTJES_UNARY(name, fn)        \
  Real name(const Real& x) {             \
    Real r = Real::uninitialized();      \
    fn(r.raw(), x.raw(), MPFR_RNDN);     \
    return r;                            \
  }

#define STIELTJES_BINARY(name, fn)                  \
  Real name(const Real& a, const Real& b) {         \
    Real r = Real::uninitialized();                 \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);       \
    return r;                                       \
  }

STIELTJES_UNARY(operator-, mpfr_neg)
STIELTJES_BINARY(operator+, mpfr_add)
STIELTJES_BINARY(operator-, mpfr_sub)
STIELTJES_BINARY(operator*, mpfr_mul)
STIELTJES_BINARY(operator/, mpfr_div)
STIELTJES_BINARY(pow, mpfr_pow)
STIELTJES_BINARY(atan2, mpfr_atan2)
STIELTJES_BINARY(fmod, mpfr_fmod)
STIELTJES_BINARY(hypot, mpfr_hypot)
STIELTJES_UNARY(abs, mpfr_abs)
STIELTJES_UNARY(sqrt, mpfr_sqrt)
STIELTJES_UNARY(cbrt, mpfr_cbrt)
STIELTJES_UNARY(exp, mpfr_exp)
STIELTJES_UNARY(expm1, mpfr_expm1)
STIELTJES_UNARY(log, mpfr_log)
STIELTJES_UNARY(log1p, mpfr_log1p)
STIELTJES_UNARY(log2, mpfr_log2)
STIELTJES_UNARY(log10, mpfr_log10)
STIELTJES_UNARY(sin, mpfr_sin)
STIELTJES_UNARY(cos, mpfr_cos)
STIELTJES_UNARY(tan, mpfr_tan)
STIELTJES_UNARY(atan, mpfr_atan)
STIELTJES_UNARY(asin, mpfr_asin)
STIELTJES_UNARY(acos, mpfr_acos)
STIELTJES_UNARY(sinh, mpfr_sinh)
STIELTJES_UNARY(cosh, mpfr_cosh)
STIELTJES_UNARY(tanh, mpfr_tanh)

#undef STIELTJES_UNARY
#undef STIELTJES_BINARY

Real floor(const Real& x) {
  Real r = Real::uninitialized();
  mpfr_floor(r.raw(), x.raw());
  return r;
}
Real ceil(const Real& x) {
  Real r = Real::uninitialized();
  mpfr_ceil(r.raw(), x.raw());
  return r;
}
Real round(const Real& x) {
  Real r = Real::uninitialized();
  mpfr_round(r.raw(), x.raw());
  return r;
}
Real trunc(const Real& x) {
  Real r = Real::uninitialized();
  mpfr_trunc(r.raw(), x.raw());
  return r;
}

Real operator*(const Real& a, long b) {
  Real r = Real::uninitialized();
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(const Real& a, long b) {
  Real r = Real::uninitialized();
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r = Real::uninitialized();
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r = Real::uninitialized();
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(const Real& a, long b) {
  Real r = Real::uninitialized();
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r = Real::uninitialized();
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

void sin_cos(const Real& x, Real& s, Real& c) {
  Real ss = Real::uninitialized();
  Real cc = Real::uninitialized();
  mpfr_sin_cos(ss.raw(), cc.raw(), x.raw(), MPFR_RNDN);
  s = std::move(ss);
  c = std::move(cc);
}

Real pow(const Real& x, long n) {
  Real r = Real::uninitialized();
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r = Real::uninitialized();
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }
bool isfinite(const Real& x) { return x.is_finite(); }
bool isnan(const Real& x) { return mpfr_nan_p(x.raw()) != 0; }
bool isinf(const Real& x) { return mpfr_inf_p(x.raw()) != 0; }

Real epsilon_for(long bits) { return ldexp(Real(1), -bits); }

namespace constants {
Real pi() {
  Real r = Real::uninitialized();
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
Real euler() {
  Real r = Real::uninitialized();
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}
Real ln2() {
  Real r = Real::uninitialized();
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}
}  // namespace constants

namespace reference {
Real zeta(const Real& s) {
  Real r = Real::uninitialized();
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}
Real digamma(const Real& x) {
  Real r = Real::uninitialized();
  mpfr_digamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real gamma(const Real& x) {
  Real r = Real::uninitialized();
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real lgamma(const Real& x) {
  Real r = Real::uninitialized();
  int sign = 0;
  mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
  return r;
}
Real eint(const Real& x) {
  Real r = Real::uninitialized();
  mpfr_eint(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace reference

}  // namespace stieltjes
