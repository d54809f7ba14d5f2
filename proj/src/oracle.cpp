#include "stieltjes/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "stieltjes/numerics/bernoulli.hpp"
#include "stieltjes/numerics/quadrature.hpp"
#include "stieltjes/numerics/summation.hpp"

namespace stieltjes::oracle {

namespace {

struct Accum {
  Real value = Real(0);
  Real error = Real(0);
  std::size_t panels = 0;
  bool converged = true;

  void add(const numerics::QuadResult<Real>& q) {
    value += q.value;
    error += q.error;
    panels += static_cast<std::size_t>(q.panels);
    converged = converged && q.converged;
  }
};

// int_0^inf g(u) du for g with at least exponential decay, on doubling panels.
void decaying(Accum& acc, const RealFunction& g, const Real& tol) {
  Real lo(0), width(1);
  int small = 0;
  for (int i = 0; i < 80; ++i) {
    const Real hi = lo + width;
    const auto q = numerics::adaptive_gauss(g, lo, hi, tol / 8);
    acc.add(q);
    const bool quiet = abs(q.value) < tol / 16 && abs(g(hi)) * width < tol / 16;
    if (quiet) {
      if (++small == 2) return;
    } else {
      small = 0;
    }
    lo = hi;
    if (i >= 1) width *= 2;
  }
  acc.converged = false;
}

// Finite piece [a, b] with optional integrable endpoint singularities. A
// singular end is pushed to infinity by x = end +- h e^-u.
void finite(Accum& acc, const RealFunction& f, const Real& a, const Real& b, bool sing_a, bool sing_b,
            const Real& tol) {
  if (!(b > a)) return;
  if (sing_a && sing_b) {
    const Real m = (a + b) / 2;
    finite(acc, f, a, m, true, false, tol / 2);
    finite(acc, f, m, b, false, true, tol / 2);
    return;
  }
  const Real h = b - a;
  if (sing_a) {
    decaying(acc, [&](const Real& u) {
      const Real e = h * exp(-u);
      return f(a + e) * e;
    }, tol);
    return;
  }
  if (sing_b) {
    decaying(acc, [&](const Real& u) {
      const Real e = h * exp(-u);
      return f(b - e) * e;
    }, tol);
    return;
  }
  acc.add(numerics::adaptive_gauss(f, a, b, tol));
}

long cvz_terms(long bits) { return 16 + (2 * bits) / 5; }

}  // namespace

SeriesResult integrate(const QuadratureProblem& p, const Real& target) {
  if (!p.integrand) throw InvalidParameters("integrate: integrand missing");
  if (!(target > Real(0))) throw InvalidParameters("integrate: target must be positive");
  const long bits = working_precision();
  Accum acc;
  {
    PrecisionGuard guard(bits + 16);
    const Real tol = max(target / 4, ldexp(Real(1), -bits - 8));
    const RealFunction& f = p.integrand;
    if (p.upper) {
      if (*p.upper < p.lower) throw DomainError("integrate: upper < lower");
      finite(acc, f, p.lower, *p.upper, p.singular_lower, p.singular_upper, tol);
    } else if (p.oscillation_period) {
      const Real half = *p.oscillation_period / 2;
      if (!(half > Real(0))) throw InvalidParameters("integrate: period must be positive");
      Real m0 = ceil((p.lower - p.zero_offset) / half);
      Real z0 = p.zero_offset + m0 * half;
      if (z0 - p.lower < half / 4) z0 += half;  // keep the head panel well shaped
      finite(acc, f, p.lower, z0, p.singular_lower, false, tol / 4);
      const long n = cvz_terms(bits);
      std::vector<Real> alt;
      alt.reserve(static_cast<std::size_t>(n));
      for (long k = 0; k < n; ++k) {
        const Real lo = z0 + Real(k) * half;
        const auto q = numerics::adaptive_gauss(f, lo, lo + half, tol / Real(4 * n));
        acc.error += q.error;
        acc.panels += static_cast<std::size_t>(q.panels);
        acc.converged = acc.converged && q.converged;
        alt.push_back(k % 2 == 0 ? q.value : -q.value);
      }
      const Real full = numerics::cvz_alternating(alt);
      const Real coarse = numerics::cvz_alternating(std::span<const Real>(alt.data(), alt.size() - 8));
      acc.value += full;
      acc.error += abs(full - coarse);
    } else {
      const Real start = p.singular_lower ? p.lower + 1 : p.lower;
      if (p.singular_lower) finite(acc, f, p.lower, start, true, false, tol / 2);
      // x = start - 1 + e^u turns algebraic decay into exponential decay
      decaying(acc, [&](const Real& u) {
        const Real e = exp(u);
        return f(start - 1 + e) * e;
      }, tol / 2);
    }
  }
  SeriesResult r;
  r.value = acc.value.rounded(bits);
  r.error_estimate = acc.error + abs(r.value) * epsilon_for(bits);
  r.terms_used = acc.panels;
  r.method = Method::quadrature;
  if (!acc.converged || r.error_estimate > target)
    throw ToleranceNotMet("integrate: achieved error " + r.error_estimate.to_string(3) + " exceeds target " +
                              target.to_string(3),
                          r.value, r.error_estimate);
  return r;
}

// ---------------------------------------------------------------------------

Real P1Evaluator::operator()(const Real& x) const { return x - floor(x) - Real(1) / 2; }

Real P1Evaluator::fourier(const Real& x, long terms) const {
  const Real tpx = 2 * constants::pi() * x;
  std::vector<Real> t;
  t.reserve(static_cast<std::size_t>(std::max(terms, 0L)));
  for (long j = 1; j <= terms; ++j) t.push_back(sin(tpx * Real(j)) / Real(j));
  return -numerics::pairwise_sum(t) / constants::pi();
}

SeriesResult p1_integral(const numerics::LogPower<Real>& w, long split) {
  if (split < 2) throw InvalidParameters("p1_integral: split must be at least 2");
  const long bits = working_precision();
  SeriesResult r;
  {
    PrecisionGuard guard(bits + 16);
    auto body = [&](int order) {
      const auto rule = numerics::gauss_legendre(order);
      std::vector<Real> parts;
      for (long m = 1; m < split; ++m) {
        const Real shift = Real(m) + Real(1) / 2;
        auto f = [&](const Real& x) { return (x - shift) * w(x); };
        parts.push_back(numerics::gauss_panel(*rule, f, Real(m), Real(m + 1)));
      }
      return numerics::pairwise_sum(parts);
    };
    const int n1 = numerics::default_gauss_order() + 8;
    const Real q1 = body(n1);
    const Real q2 = body(n1 + 12);
    // int_M^inf P1 w = -sum_{r odd} B_(r+1)/(r+1)! w^(r-1)(M)
    const Real m(split);
    auto d = w;
    Real tail(0), last(-1), fact(2);
    const Real tol = ldexp(Real(1), -bits - 8);
    for (int r = 1; r < 4 * bits; r += 2) {
      const Real t = -numerics::bernoulli_real(r + 1) / fact * d(m);
      if (last >= Real(0) && abs(t) > last) break;
      tail += t;
      last = abs(t);
      if (last < tol) break;
      d = d.derivative().derivative();
      fact *= Real(r + 2) * Real(r + 3);
    }
    r.value = q2 + tail;
    r.error_estimate = abs(q2 - q1) + last + abs(r.value) * epsilon_for(bits);
    r.terms_used = static_cast<std::size_t>(split - 1);
    r.method = Method::quadrature;
  }
  r.value = r.value.rounded(bits);
  return r;
}

SeriesResult stieltjes_quadrature(int k) {
  if (k < 0) throw InvalidParameters("stieltjes_quadrature: k must be nonnegative");
  using LP = numerics::LogPower<Real>;
  if (k == 0) {
    auto r = p1_integral(LP::monomial(Real(1), Real(2), 0));
    r.value = Real(1) / 2 - r.value;
    return r;
  }
  LP w({{Real(k), Real(2), k - 1}, {Real(-1), Real(2), k}});
  return p1_integral(w);
}

SeriesResult stieltjes_limit(int k, const Real& a, long n) {
  if (k < 0) throw InvalidParameters("stieltjes_limit: k must be nonnegative");
  if (!(a > Real(0))) throw DomainError("stieltjes_limit: a must be positive");
  const long bits = working_precision();
  // ln^q(x)/x^p, p in {1, 2, 4, 6, 8}, q <= k
  const std::vector<int> powers{1, 2, 4, 6, 8};
  const long unknowns = static_cast<long>(powers.size()) * (k + 1) + 1;
  const long count = unknowns + 6;
  if (n < 64 * count) throw InvalidParameters("stieltjes_limit: N too small for the ladder");
  SeriesResult out;
  {
    PrecisionGuard guard(bits + 32);
    // geometric ladder N r^-i spanning a factor of 16
    const Real ratio = pow(Real(16), Real(1) / Real(count - 1));
    std::vector<long> ladder;
    for (long i = 0; i < count; ++i) {
      const long ni = static_cast<long>(std::llround((Real(n) / pow(ratio, i)).to_double()));
      if (ladder.empty() || ni < ladder.back()) ladder.push_back(ni);
    }
    std::sort(ladder.begin(), ladder.end());
    const long top = ladder.back();
    std::vector<Real> xs, ys;
    Real sum(0);
    std::size_t next = 0;
    for (long m = 0; m <= top; ++m) {
      const Real x = Real(m) + a;
      const Real l = log(x);
      sum += pow(l, k) / x;
      if (next < ladder.size() && m == ladder[next]) {
        xs.push_back(x);
        ys.push_back(sum - pow(l, k + 1) / Real(k + 1));
        ++next;
      }
    }
    const Real x0 = xs.front();
    auto basis_for = [&](std::size_t n_powers) {
      std::vector<std::function<Real(const Real&)>> b;
      for (std::size_t i = 0; i < n_powers; ++i)
        for (int q = 0; q <= k; ++q) {
          const int p = powers[i];
          b.emplace_back([p, q, x0](const Real& x) { return pow(log(x), q) * pow(x0 / x, p); });
        }
      return b;
    };
    const Real full = numerics::generalized_richardson(xs, ys, basis_for(powers.size()));
    const Real coarse = numerics::generalized_richardson(xs, ys, basis_for(powers.size() - 1));
    out.value = full;
    out.error_estimate = abs(full - coarse) + abs(full) * epsilon_for(bits);
    out.terms_used = static_cast<std::size_t>(top + 1);
    out.method = Method::hybrid;
  }
  out.value = out.value.rounded(bits);
  return out;
}

// ---------------------------------------------------------------------------

const char* appendix_kind_name(AppendixKind k) { return k == AppendixKind::cosine ? "cosine" : "sine"; }

Real appendix_closed_form(AppendixKind kind, const Real& a) {
  if (!(a > Real(0))) throw DomainError("appendix_closed_form: a must be positive");
  const long bits = working_precision();
  Real v;
  {
    PrecisionGuard guard(bits + 16);
    const Real acot = atan(Real(1) / a);
    const Real l = log1p(Real(1) / (a * a));
    const Real tail = 2 * (1 + constants::euler() + log(a));
    const Real pre = Real(1) / (2 * (1 + a * a));
    if (kind == AppendixKind::cosine)
      v = pre * (2 * acot + a * (l + tail));
    else
      v = pre * (-2 * a * acot + l + tail);
  }
  return v.rounded(bits);
}

AppendixReport appendix_verify(AppendixKind kind, const Real& a, const Real& target) {
  if (!(a > Real(0))) throw DomainError("appendix_verify: a must be positive");
  AppendixReport rep;
  rep.kind = kind;
  rep.a = a;
  rep.closed_form = appendix_closed_form(kind, a);
  QuadratureProblem q;
  q.lower = Real(0);
  q.singular_lower = true;
  q.integrand = [&](const Real& t) {
    const Real trig = kind == AppendixKind::cosine ? cos(t) : sin(t);
    return exp(-a * t) * trig * (1 - log(t));
  };
  rep.quadrature = integrate(q, target / 4);
  rep.difference = abs(rep.quadrature.value - rep.closed_form);

  // sum H_n [(-1)^n + 1] z^n at z = 1/2
  {
    const long bits = working_precision();
    PrecisionGuard guard(bits + 16);
    const Real z = Real(1) / 2;
    Real h(0), zp(1), partial(0), rest(0);
    const long extra = 60 + 2 * bits;
    for (long m = 0; m < extra; ++m) {
      if (m > 0) h += Real(1) / Real(2 * m - 1) + Real(1) / Real(2 * m);
      const Real t = 2 * h * zp;
      (m < 60 ? partial : rest) += t;
      zp *= z * z;
    }
    rep.generating_partial = partial;
    rep.generating_remainder = rest;
    rep.generating_exact = -log1p(z) / (1 + z) + log1p(-z) / (z - 1);
  }
  QuadratureProblem e;
  e.lower = Real(0);
  e.integrand = [&](const Real& t) { return exp(-a * t) * cos(t); };
  rep.elementary_quadrature = integrate(e, target / 4).value;
  rep.elementary_exact = a / (1 + a * a);
  const bool gen_ok = abs(rep.generating_partial + rep.generating_remainder - rep.generating_exact) <= target;
  rep.passed = rep.difference <= target && gen_ok && abs(rep.elementary_quadrature - rep.elementary_exact) <= target;
  return rep;
}

}  // namespace stieltjes::oracle
