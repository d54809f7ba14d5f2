#ifndef STIELTJES_NUMERICS_LOG_POWER_HPP
#define STIELTJES_NUMERICS_LOG_POWER_HPP

#include <cmath>
#include <vector>

#include "stieltjes/numerics/scalar.hpp"

namespace stieltjes::numerics {

/// coeff * x^(-power) * ln(x)^log_power
template <typename Scalar>
struct LogPowerTerm {
  Scalar coeff;
  Scalar power;
  int log_power = 0;
};

/// Finite sum of log-power terms. Closed under differentiation; integrable to
/// infinity when every power exceeds one.
template <typename Scalar>
class LogPower {
 public:
  using Term = LogPowerTerm<Scalar>;

  LogPower() = default;
  explicit LogPower(std::vector<Term> terms) : terms_(std::move(terms)) { compress(); }

  static LogPower monomial(Scalar coeff, Scalar power, int log_power) {
    return LogPower({Term{std::move(coeff), std::move(power), log_power}});
  }

  const std::vector<Term>& terms() const { return terms_; }

  LogPower& add(Scalar coeff, Scalar power, int log_power) {
    terms_.push_back(Term{std::move(coeff), std::move(power), log_power});
    compress();
    return *this;
  }

  LogPower& operator+=(const LogPower& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    compress();
    return *this;
  }

  LogPower operator*(const Scalar& c) const {
    LogPower r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Scalar operator()(const Scalar& x) const {
    using std::log;
    using std::pow;
    const Scalar lx = log(x);
    Scalar s(0);
    for (const auto& t : terms_) {
      Scalar v = t.coeff * pow(x, -t.power);
      if (t.log_power > 0) v *= pow(lx, t.log_power);
      s += v;
    }
    return s;
  }

  // d/dx c x^-p L^q = c x^-(p+1) (-p L^q + q L^(q-1))
  LogPower derivative() const {
    std::vector<Term> out;
    out.reserve(2 * terms_.size());
    for (const auto& t : terms_) {
      Scalar p1 = t.power + Scalar(1);
      out.push_back(Term{-t.coeff * t.power, p1, t.log_power});
      if (t.log_power > 0) out.push_back(Term{t.coeff * Scalar(t.log_power), p1, t.log_power - 1});
    }
    return LogPower(std::move(out));
  }

  // int_X^inf x^-p L^q dx = X^(1-p) sum_i q!/(q-i)! L^(q-i) / (p-1)^(i+1)
  Scalar integral_to_infinity(const Scalar& x) const {
    using std::log;
    using std::pow;
    const Scalar lx = log(x);
    Scalar s(0);
    for (const auto& t : terms_) {
      const Scalar pm1 = t.power - Scalar(1);
      Scalar inner(0);
      Scalar fall(1);
      Scalar den = pm1;
      for (int i = 0; i <= t.log_power; ++i) {
        inner += fall * pow(lx, t.log_power - i) / den;
        fall *= Scalar(t.log_power - i);
        den *= pm1;
      }
      s += t.coeff * pow(x, -pm1) * inner;
    }
    return s;
  }

  bool empty() const { return terms_.empty(); }

 private:
  void compress() {
    std::vector<Term> merged;
    for (auto& t : terms_) {
      bool found = false;
      for (auto& m : merged) {
        if (m.log_power == t.log_power && m.power == t.power) {
          m.coeff += t.coeff;
          found = true;
          break;
        }
      }
      if (!found) merged.push_back(t);
    }
    terms_ = std::move(merged);
  }

  std::vector<Term> terms_;
};

template <typename Scalar>
struct TailSum {
  Scalar value;
  Scalar error;
  int order = 0;
};

/// sum_{n>N} f(n) by Euler-Maclaurin at N; stops once a correction falls below
/// tol or the asymptotic corrections start to grow.
template <typename Scalar>
TailSum<Scalar> euler_maclaurin_tail(const LogPower<Scalar>& f, const Scalar& x, const Scalar& tol,
                                     int max_order = 600) {
  using std::abs;
  using Traits = ScalarTraits<Scalar>;
  Scalar value = f.integral_to_infinity(x) - f(x) / Scalar(2);
  LogPower<Scalar> d = f.derivative();
  mpz_class fact(2);
  Scalar prev(-1);
  for (int k = 1; k <= max_order; ++k) {
    const Scalar term = Traits::from_rational(bernoulli(2 * k) / mpq_class(fact)) * d(x);
    const Scalar mag = abs(term);
    if (prev >= Scalar(0) && mag > prev) return {value, prev, k - 1};
    value -= term;
    if (mag <= tol) return {value, mag, k};
    prev = mag;
    d = d.derivative().derivative();
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  return {value, prev, max_order};
}

/// int_M^inf P1(x) f(x) dx = -sum_k B_2k/(2k)! f^(2k-2)(M) at integer M.
template <typename Scalar>
TailSum<Scalar> periodic_bernoulli_tail(const LogPower<Scalar>& f, const Scalar& m, const Scalar& tol,
                                        int max_order = 600) {
  using std::abs;
  using Traits = ScalarTraits<Scalar>;
  Scalar value(0);
  LogPower<Scalar> d = f;
  mpz_class fact(2);
  Scalar prev(-1);
  for (int k = 1; k <= max_order; ++k) {
    const Scalar term = Traits::from_rational(bernoulli(2 * k) / mpq_class(fact)) * d(m);
    const Scalar mag = abs(term);
    if (prev >= Scalar(0) && mag > prev) return {value, prev, k - 1};
    value -= term;
    if (mag <= tol) return {value, mag, k};
    prev = mag;
    d = d.derivative().derivative();
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  return {value, prev, max_order};
}

}  // namespace stieltjes::numerics

#endif  // STIELTJES_NUMERICS_LOG_POWER_HPP
