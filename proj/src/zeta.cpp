#include "stieltjes/numerics/zeta.hpp"

#include <algorithm>

#include "stieltjes/errors.hpp"

namespace stieltjes::numerics {

namespace {

long em_cutoff() { return std::max<long>(16, working_precision() / 6 + 8); }

}  // namespace

Real log_power_partial(const Real& p, int q, long n) {
  Real s(0);
  for (long k = n; k >= 2; --k) {
    const Real x(k);
    Real t = pow(x, -p);
    if (q > 0) t *= pow(log(x), q);
    s += t;
  }
  if (q == 0 && n >= 1) s += Real(1);
  return s;
}

Real log_power_tail(const Real& p, int q, long n) {
  if (!(p > Real(1))) throw DomainError("log_power_tail: power must exceed 1");
  PrecisionGuard guard(working_precision() + 32);
  const long m = std::max(n, em_cutoff());
  const Real tol = epsilon_for(working_precision());
  auto f = LogPower<Real>::monomial(Real(1), p, q);
  Real s = euler_maclaurin_tail(f, Real(m), tol).value;
  if (m > n) s += log_power_partial(p, q, m) - log_power_partial(p, q, n);
  return s;
}

Real zeta(const Real& s) {
  if (!(s > Real(1))) throw DomainError("zeta: requires s > 1");
  const long bits = working_precision();
  Real r;
  {
    PrecisionGuard guard(bits + 32);
    r = log_power_partial(s, 0, em_cutoff()) + log_power_tail(s, 0, em_cutoff());
  }
  return r.rounded(bits);
}

}  // namespace stieltjes::numerics
