#include "stieltjes/trigintegrals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "stieltjes/numerics/bernoulli.hpp"
#include "stieltjes/numerics/finite_difference.hpp"
#include "stieltjes/numerics/quadrature.hpp"
#include "stieltjes/numerics/summation.hpp"

namespace stieltjes::trig {

using hypergeom::Family;

namespace {

struct Aux {
  Real f;
  Real g;
};

// f(x) ~ (1/x) sum (-1)^k (2k)!/x^2k, g(x) ~ (1/x^2) sum (-1)^k (2k+1)!/x^2k.
// Empty when the optimally truncated series cannot reach tol.
std::optional<Aux> auxiliary_asymptotic(const Real& x, const Real& tol) {
  const Real ix2 = Real(1) / (x * x);
  Real tf = Real(1) / x;
  Real tg = ix2;
  Real f(0), g(0);
  Real prev = abs(tf) + Real(1);
  for (long k = 0; k < 100000; ++k) {
    const Real mag = abs(tf) + abs(tg);
    if (mag > prev) return std::nullopt;
    f += tf;
    g += tg;
    if (mag < tol) return Aux{f, g};
    prev = mag;
    tf *= -Real((2 * k + 1) * (2 * k + 2)) * ix2;
    tg *= -Real((2 * k + 2) * (2 * k + 3)) * ix2;
  }
  return std::nullopt;
}

long series_bits(const Real& x, long bits) {
  return bits + 32 + static_cast<long>(std::ceil(std::max(0.0, x.to_double()) * M_LOG2E));
}

Real ci_series(const Real& x) {
  PrecisionGuard guard(series_bits(x, working_precision()));
  const Real tol = epsilon_for(working_precision());
  const Real x2 = x * x;
  Real term(1), acc(0);
  for (long l = 1;; ++l) {
    term *= -x2 / Real((2 * l - 1) * (2 * l));
    const Real t = term / Real(2 * l);
    acc += t;
    if (static_cast<double>(l) > x.to_double() && abs(t) < tol) break;
  }
  return constants::euler() + log(x) + acc;
}

Real si_series(const Real& x) {
  PrecisionGuard guard(series_bits(x, working_precision()));
  const Real tol = epsilon_for(working_precision()) * (abs(x) + 1);
  const Real x2 = x * x;
  Real term = x, acc = x;
  for (long l = 1;; ++l) {
    term *= -x2 / Real((2 * l) * (2 * l + 1));
    const Real t = term / Real(2 * l + 1);
    acc += t;
    if (static_cast<double>(l) > x.to_double() && abs(t) < tol) break;
  }
  return acc;
}

Real f34_scale_target(const Real& scale, long bits) { return ldexp(Real(1), -bits - 8) / (abs(scale) + 1); }

SeriesResult family_value(const Family& f, const Real& z, const Real& target) {
  return hypergeom::eval_auto(f.spec(z), target);
}

Method merge(Method a, Method b) { return a == b ? a : Method::hybrid; }

std::mutex g_rec_mutex;
std::map<long, std::shared_ptr<const RecursionState>> g_rec_cache;

std::shared_ptr<const RecursionState> shared_recursion() {
  const long bits = working_precision();
  {
    std::lock_guard lock(g_rec_mutex);
    auto it = g_rec_cache.find(bits);
    if (it != g_rec_cache.end()) return it->second;
  }
  auto st = std::make_shared<const RecursionState>(build_recursion(kJMax));
  std::lock_guard lock(g_rec_mutex);
  return g_rec_cache.emplace(bits, std::move(st)).first->second;
}

void check_j(int j) {
  if (j < 0) throw InvalidParameters("log power must be nonnegative");
  if (j > kJMax) throw RecursionDepthExceeded("log power " + std::to_string(j) + " exceeds J_MAX = " + std::to_string(kJMax));
}

}  // namespace

Real ci(const Real& x) {
  if (!(x > Real(0))) throw DomainError("ci: x must be positive");
  const long bits = working_precision();
  if (x > Real(kXSwitch)) {
    PrecisionGuard guard(bits + 16);
    if (auto aux = auxiliary_asymptotic(x, epsilon_for(bits + 8) / x)) {
      Real s, c;
      sin_cos(x, s, c);
      return (s * aux->f - c * aux->g).rounded(bits);
    }
  }
  return ci_series(x).rounded(bits);
}

Real si_lower(const Real& x) {
  if (x < Real(0)) throw DomainError("si_lower: x must be nonnegative");
  const long bits = working_precision();
  if (x > Real(kXSwitch)) {
    PrecisionGuard guard(bits + 16);
    if (auto aux = auxiliary_asymptotic(x, epsilon_for(bits + 8) / x)) {
      Real s, c;
      sin_cos(x, s, c);
      return (-c * aux->f - s * aux->g).rounded(bits);
    }
  }
  Real r;
  {
    PrecisionGuard guard(bits + 16);
    r = si_series(x) - constants::pi() / 2;
  }
  return r.rounded(bits);
}

Real si(const Real& x) {
  if (x < Real(0)) return -si(-x);
  const long bits = working_precision();
  Real r;
  {
    PrecisionGuard guard(bits + 16);
    r = x > Real(kXSwitch) ? si_lower(x) + constants::pi() / 2 : si_series(x);
  }
  return r.rounded(bits);
}

SeriesResult ci_log_integral(const Real& a, const Real& x, const Real& y) {
  if (a.is_zero()) throw InvalidParameters("ci_log_integral: a must be nonzero");
  if (!(x > Real(0)) || y < x) throw DomainError("ci_log_integral: requires 0 < x <= y");
  const long bits = working_precision();
  if (x == y) return {Real(0), Real(0), 0, Method::closed_form};
  SeriesResult out;
  {
    PrecisionGuard guard(bits + 32);
    const Real aa = abs(a);
    const Family f{3, 3};
    const Real sy = aa * aa * y * y / 8;
    const Real sx = aa * aa * x * x / 8;
    const auto fy = family_value(f, sy * 2, f34_scale_target(sy, bits));
    const auto fx = family_value(f, sx * 2, f34_scale_target(sx, bits));
    const Real lay = log(aa * y), lax = log(aa * x);
    out.value = constants::euler() * log(y / x) + (lay * lay - lax * lax) / 2 - (sy * fy.value - sx * fx.value);
    out.error_estimate = sy * fy.error_estimate + sx * fx.error_estimate;
    out.terms_used = fy.terms_used + fx.terms_used;
    out.method = merge(fy.method, fx.method);
  }
  out.value = out.value.rounded(bits);
  out.error_estimate += abs(out.value) * epsilon_for(bits);
  return out;
}

SeriesResult ci_log_integral_to_infinity(const Real& a, const Real& x) {
  if (a.is_zero()) throw InvalidParameters("ci_log_integral_to_infinity: a must be nonzero");
  if (!(x > Real(0))) throw DomainError("ci_log_integral_to_infinity: x must be positive");
  const long bits = working_precision();
  SeriesResult out;
  {
    PrecisionGuard guard(bits + 32);
    const Real aa = abs(a);
    const Real ga = constants::euler();
    const Real pi = constants::pi();
    const Real sx = aa * aa * x * x / 8;
    const auto fx = family_value(Family{3, 3}, sx * 2, f34_scale_target(sx, bits));
    const Real lax = log(aa * x);
    out.value = -ga * log(aa) - ga * ga / 2 + pi * pi / 24 - ga * log(x) - lax * lax / 2 + sx * fx.value;
    out.error_estimate = sx * fx.error_estimate;
    out.terms_used = fx.terms_used;
    out.method = fx.method;
  }
  out.value = out.value.rounded(bits);
  out.error_estimate += abs(out.value) * epsilon_for(bits);
  return out;
}

SeriesResult logsine_finite(const Real& kappa, const Real& a, const Real& b) {
  if (!(kappa > Real(0))) throw DomainError("logsine_finite: kappa must be positive");
  if (!(a > Real(0)) || b < a) throw DomainError("logsine_finite: requires b >= a > 0");
  const long bits = working_precision();
  if (a == b) return {Real(0), Real(0), 0, Method::closed_form};
  SeriesResult out;
  {
    PrecisionGuard guard(bits + 32);
    const auto cl = ci_log_integral(kappa, a, b);
    const Real la = log(a), lb = log(b);
    Real sa, ca, sb, cb;
    sin_cos(kappa * a, sa, ca);
    sin_cos(kappa * b, sb, cb);
    out.value = kappa * (ci(kappa * b) * (1 + lb) - ci(kappa * a) * (1 + la) - cl.value) + sa / a * (1 + la) -
                sb / b * (1 + lb);
    out.error_estimate = kappa * cl.error_estimate;
    out.terms_used = cl.terms_used;
    out.method = cl.method;
  }
  out.value = out.value.rounded(bits);
  out.error_estimate += abs(out.value) * epsilon_for(bits);
  return out;
}

SeriesResult logsine_tail(const Real& kappa, int j) {
  check_j(j);
  if (j < 1) throw InvalidParameters("logsine_tail: j must be at least 1");
  if (!(kappa > Real(0))) throw DomainError("logsine_tail: kappa must be positive");
  const long bits = working_precision();
  if (j >= 2) return shared_recursion()->g(j, kappa);
  SeriesResult out;
  {
    PrecisionGuard guard(bits + 32);
    const Real ga = constants::euler();
    const Real pi = constants::pi();
    const Real scale = kappa * kappa / 24;
    const auto f = family_value(Family{3, 5}, kappa * kappa / 4, f34_scale_target(scale * kappa, bits));
    const Real lk = log(kappa);
    const Real bracket = 1 + (ga - 2) * ga / 2 - pi * pi / 24 - scale * f.value + lk / 2 * (2 * ga - 2 + lk);
    out.value = kappa * bracket;
    out.error_estimate = kappa * scale * f.error_estimate;
    out.terms_used = f.terms_used;
    out.method = f.method;
  }
  out.value = out.value.rounded(bits);
  out.error_estimate += abs(out.value) * epsilon_for(bits);
  return out;
}

SeriesResult evaluate(const LogSineIntegralQuery& q) {
  check_j(q.j);
  if (!q.b) {
    if (q.a != Real(1)) throw InvalidParameters("evaluate: the infinite-range form starts at a = 1");
    return logsine_tail(q.kappa, q.j);
  }
  if (q.j != 1) throw InvalidParameters("evaluate: finite ranges have a closed form only for j = 1");
  return logsine_finite(q.kappa, q.a, *q.b);
}

// ---------------------------------------------------------------------------

const RecursionLevel& RecursionState::level(int j) const {
  if (j < 0 || j > j_max()) throw RecursionDepthExceeded("recursion level not built");
  return levels_[static_cast<std::size_t>(j)];
}

std::vector<Real> RecursionState::c_constants() const {
  std::vector<Real> c;
  for (std::size_t j = 1; j < levels_.size(); ++j) c.push_back(levels_[j].c);
  return c;
}

namespace {

SeriesResult evaluate_level(const RecursionLevel& lv, const Real& b, bool with_constant) {
  const long bits = working_precision();
  SeriesResult out{Real(0), Real(0), 0, Method::closed_form};
  bool any_hyp = false;
  {
    PrecisionGuard guard(bits + 48);
    const Real l = log(b);
    Real v(0);
    Real mag(0);
    if (!lv.beta.is_zero()) {
      const Real t = lv.beta * (sin(b) / b - ci(b));
      v += t;
      mag += abs(t);
    }
    Real lp(1);
    for (const auto& c : lv.log_coeffs) {
      if (!c.is_zero()) {
        v += c * lp;
        mag += abs(c * lp);
      }
      lp *= l;
    }
    lp = Real(1);
    for (const auto& e : lv.log_errors) {
      out.error_estimate += e * abs(lp);
      lp *= l;
    }
    const Real b2 = b * b;
    for (std::size_t m = 0; m < lv.hyp_coeffs.size(); ++m) {
      const Real& h = lv.hyp_coeffs[m];
      if (h.is_zero()) continue;
      const Real scale = h * b2;
      const auto f = family_value(Family{static_cast<int>(m), 3}, b2 / 4, f34_scale_target(scale, bits + 16));
      v += scale * f.value;
      mag += abs(scale * f.value);
      out.error_estimate += abs(scale) * f.error_estimate;
      out.terms_used += f.terms_used;
      out.method = any_hyp ? merge(out.method, f.method) : f.method;
      any_hyp = true;
    }
    if (with_constant) {
      v += lv.c;
      out.error_estimate += lv.c_error;
    }
    out.value = v;
    out.error_estimate += mag * epsilon_for(bits + 40);
  }
  out.value = out.value.rounded(bits);
  out.error_estimate += abs(out.value) * epsilon_for(bits);
  return out;
}

}  // namespace

SeriesResult RecursionState::u(int j, const Real& b) const {
  if (!(b > Real(0))) throw DomainError("recursion: b must be positive");
  return evaluate_level(level(j), b, true);
}

SeriesResult RecursionState::g(int j, const Real& b) const {
  auto r = u(j, b);
  return scaled(r, b);
}

RecursionState build_recursion(int j_max) {
  if (j_max < 0) throw InvalidParameters("build_recursion: j_max must be nonnegative");
  if (j_max > kJMax) throw RecursionDepthExceeded("j_max exceeds J_MAX = " + std::to_string(kJMax));
  const long bits = working_precision();
  RecursionState st;
  st.levels_.push_back(RecursionLevel{Real(1), {}, {}, Real(0), Real(0), {}});
  const Real ga = constants::euler();
  const Real two_pi = 2 * constants::pi();
  const std::vector<Real> grid{two_pi * 1000, two_pi * 3000, two_pi * 10000};
  for (int j = 1; j <= j_max; ++j) {
    const RecursionLevel& p = st.levels_.back();
    RecursionLevel lv;
    lv.beta = p.beta * j;
    lv.log_coeffs.assign(std::max<std::size_t>(3, p.log_coeffs.size() + 1), Real(0));
    lv.hyp_coeffs.assign(std::max<std::size_t>(4, p.hyp_coeffs.size() + 1), Real(0));
    // int (sin b/b - Ci b)/b = -(sin b/b - Ci b) - gamma L - L^2/2 + (b^2/8) Phi_3
    lv.log_coeffs[1] += p.beta * j * ga;
    lv.log_coeffs[2] += p.beta * j / 2;
    lv.hyp_coeffs[3] -= p.beta * j / 8;
    for (std::size_t k = 0; k < p.log_coeffs.size(); ++k)
      lv.log_coeffs[k + 1] -= p.log_coeffs[k] * j / Real(static_cast<long>(k + 1));
    // int b Phi_m db = (b^2/2) Phi_{m+1}
    for (std::size_t m = 0; m < p.hyp_coeffs.size(); ++m) lv.hyp_coeffs[m + 1] -= p.hyp_coeffs[m] * j / 2;
    lv.log_coeffs[1] -= p.c * j;
    lv.log_errors.assign(lv.log_coeffs.size(), Real(0));
    for (std::size_t k = 0; k < p.log_errors.size(); ++k)
      lv.log_errors[k + 1] += p.log_errors[k] * j / Real(static_cast<long>(k + 1));
    lv.log_errors[1] += p.c_error * j;
    lv.c = Real(0);
    lv.c_error = Real(0);

    // g_j(inf) = 0: v(b) = u_j(b) - c_j -> -c_j, corrections in 1/b^2 and 1/b^4
    std::vector<Real> v;
    Real eval_err(0);
    for (const auto& b : grid) {
      auto r = evaluate_level(lv, b, false);
      v.push_back(r.value);
      eval_err = max(eval_err, r.error_estimate);
    }
    Real full, pair_lo, pair_hi;
    {
      PrecisionGuard guard(bits + 32);
      std::vector<std::function<Real(const Real&)>> basis2{[](const Real& b) { return Real(1) / (b * b); }};
      auto basis3 = basis2;
      basis3.push_back([](const Real& b) { return Real(1) / pow(b, 4); });
      full = numerics::generalized_richardson(grid, v, basis3);
      pair_lo = numerics::generalized_richardson<Real>({grid[0], grid[1]}, {v[0], v[1]}, basis2);
      pair_hi = numerics::generalized_richardson<Real>({grid[1], grid[2]}, {v[1], v[2]}, basis2);
    }
    const Real spread = max(abs(full - pair_lo), abs(full - pair_hi));
    const Real target = max(ldexp(Real(1), -bits / 2), Real("1e-15"));
    if (spread > 10 * target * (abs(full) + 1))
      throw ConstantDeterminationFailure("build_recursion: large-b limit of g_" + std::to_string(j) + " did not stabilize");
    lv.c = -full.rounded(bits);
    lv.c_error = abs(full - pair_hi) + eval_err;
    st.levels_.push_back(std::move(lv));
  }
  return st;
}

// ---------------------------------------------------------------------------

namespace {

CompactForm build_compact_form(int j) {
  CompactForm cf;
  cf.j = j;
  cf.family = Family{j + 2, 5};
  Real fact(1);
  for (int i = 2; i <= j; ++i) fact *= Real(i);
  const Real sign = (j % 2 == 0) ? Real(1) : Real(-1);
  cf.hyp_coeff = sign * fact / (Real(3) * pow(Real(2), j + 2));
  const Real outer = -sign * fact / (Real(3) * pow(Real(2), j));
  const auto e = hypergeom::asym_expansion(cf.family, 0);
  // ln z = 2L - 2 ln 2
  const Real l2 = constants::ln2();
  cf.log_poly.assign(static_cast<std::size_t>(j + 2), Real(0));
  for (const auto& t : e.algebraic_terms) {
    const int m = t.ln_power;
    Real binom(1);
    for (int r = 0; r <= m; ++r) {
      // C(m,r) (2L)^r (-2 ln2)^(m-r)
      cf.log_poly[static_cast<std::size_t>(r)] += outer * t.coefficient * binom * pow(Real(2), r) * pow(-2 * l2, m - r);
      binom = binom * Real(m - r) / Real(r + 1);
    }
  }
  return cf;
}

std::mutex g_compact_mutex;
std::map<std::pair<long, int>, CompactForm> g_compact_cache;

}  // namespace

CompactForm compact_form(int j) {
  check_j(j);
  const auto key = std::make_pair(working_precision(), j);
  {
    std::lock_guard lock(g_compact_mutex);
    auto it = g_compact_cache.find(key);
    if (it != g_compact_cache.end()) return it->second;
  }
  CompactForm cf = build_compact_form(j);
  std::lock_guard lock(g_compact_mutex);
  return g_compact_cache.emplace(key, std::move(cf)).first->second;
}

SeriesResult logsine_tail_compact(const Real& kappa, int j) {
  if (!(kappa > Real(0))) throw DomainError("logsine_tail_compact: kappa must be positive");
  const long bits = working_precision();
  SeriesResult out;
  {
    PrecisionGuard guard(bits + 48);
    const CompactForm cf = compact_form(j);
    const Real l = log(kappa);
    Real lam(0), lp(1), mag(0);
    for (const auto& c : cf.log_poly) {
      lam += c * lp;
      mag += abs(c * lp);
      lp *= l;
    }
    const Real scale = cf.hyp_coeff * kappa * kappa;
    const auto f = family_value(cf.family, kappa * kappa / 4, f34_scale_target(scale * kappa, bits + 16));
    out.value = kappa * (lam + scale * f.value);
    out.error_estimate = kappa * (abs(scale) * f.error_estimate + mag * epsilon_for(bits + 40));
    out.terms_used = f.terms_used;
    out.method = f.method;
  }
  out.value = out.value.rounded(bits);
  out.error_estimate += abs(out.value) * epsilon_for(bits);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// sin t / t - cos t without cancellation near 0
Real sinc_minus_cos(const Real& t) {
  if (abs(t) > Real(1) / 4) return sin(t) / t - cos(t);
  const Real t2 = t * t;
  Real term(1), s(0);
  const Real tol = epsilon_for(working_precision());
  for (long k = 1; k < 1000; ++k) {
    term *= -t2 / Real((2 * k) * (2 * k + 1));  // (-1)^k t^2k / (2k+1)!
    const Real add = -term * Real(2 * k);
    s += add;
    if (abs(add) < tol * abs(s)) break;
  }
  return s;
}

}  // namespace

SeriesResult laplace_form_3f4(const Real& kappa) {
  if (!(kappa > Real(0))) throw DomainError("laplace_form_3f4: kappa must be positive");
  const long bits = working_precision();
  SeriesResult out;
  {
    PrecisionGuard guard(bits + 32);
    const Real k3 = kappa * kappa * kappa;
    // tail int_X^inf kappa^3 x^2 e^-x / 3 dx <= kappa^3 (X^2 + 2X + 2) e^-X / 3
    double x_max = (bits + 16) * M_LN2 + std::max(0.0, std::log(k3.to_double()));
    for (int it = 0; it < 8; ++it)
      x_max = (bits + 16) * M_LN2 + std::max(0.0, std::log(k3.to_double() * (x_max * x_max + 2 * x_max + 2) / 3));
    const Real xm(std::ceil(x_max));
    auto integrand = [&](const Real& x) { return kappa * x * x * sinc_minus_cos(kappa * exp(-x / 2)); };
    const Real tol = ldexp(Real(1), -bits - 8) * max(k3, Real(1));
    const Real split = max(Real(1), 2 * log(kappa) + 2);
    auto q1 = numerics::adaptive_gauss(integrand, Real(0), min(split, xm), tol);
    auto q2 = numerics::adaptive_gauss(integrand, min(split, xm), xm, tol);
    const Real tail = k3 * (xm * xm + 2 * xm + 2) * exp(-xm) / 3;
    const Real pre = Real(3) / (2 * k3);
    out.value = pre * (q1.value + q2.value);
    out.error_estimate = pre * (q1.error + q2.error + tail);
    out.terms_used = static_cast<std::size_t>(q1.panels + q2.panels);
    out.method = Method::quadrature;
    if (!q1.converged || !q2.converged)
      throw ToleranceNotMet("laplace_form_3f4: quadrature did not converge", out.value, out.error_estimate);
  }
  out.value = out.value.rounded(bits);
  out.error_estimate += abs(out.value) * epsilon_for(bits);
  return out;
}

namespace {

Real mu_sine_1f2(const Real& mu, const Real& a, const Real& target) {
  hypergeom::HypSpec s{{(1 + mu) / 2}, {Real(3) / 2, (3 + mu) / 2}, -a * a / 4};
  return a / (mu + 1) * hypergeom::eval_taylor(s, target).value;
}

}  // namespace

SeriesResult mu_sine_integral(const Real& mu, const Real& a, int k) {
  if (!(mu > Real(-1))) throw DomainError("mu_sine_integral: mu must exceed -1");
  if (k < 0) throw InvalidParameters("mu_sine_integral: k must be nonnegative");
  const long bits = working_precision();
  if (k == 0) {
    Real v;
    {
      PrecisionGuard guard(bits + 32);
      v = mu_sine_1f2(mu, a, ldexp(Real(1), -bits - 16));
    }
    return {v.rounded(bits), abs(v) * epsilon_for(bits) * 2, 1, Method::closed_form};
  }
  const long step_bits = (bits + 2) / 3;
  const long work = bits + k * step_bits + 64;
  const int n = (k + 1) / 2 + 2;
  std::vector<int> pts;
  for (int i = -n; i <= n; ++i) pts.push_back(i);
  const auto w = numerics::fornberg_weights(k, pts);
  Real d1, d2;
  {
    PrecisionGuard guard(work);
    const Real h = ldexp(Real(1), -step_bits);
    if (!(mu - Real(2 * n) * h > Real(-1))) throw DomainError("mu_sine_integral: mu too close to -1 for the stencil");
    const Real target = ldexp(Real(1), -work + 8);
    std::vector<Real> f1, f2;
    for (int i : pts) {
      f1.push_back(mu_sine_1f2(mu + Real(i) * h, a, target));
      f2.push_back(mu_sine_1f2(mu + Real(2 * i) * h, a, target));
    }
    d1 = Real(0);
    d2 = Real(0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Real wi = numerics::to_real(w[i]);
      d1 += wi * f1[i];
      d2 += wi * f2[i];
    }
    d1 /= pow(h, k);
    d2 /= pow(2 * h, k);
  }
  const Real v = d1.rounded(bits);
  Real err;
  {
    PrecisionGuard guard(bits + 16);
    err = abs(d1 - d2) / 15 + abs(v) * epsilon_for(bits) * 4;
  }
  return {v, err, pts.size(), Method::hybrid};
}

SeriesResult mu_sine_series(const Real& mu, const Real& a) {
  if (!(mu > Real(-1))) throw DomainError("mu_sine_series: mu must exceed -1");
  const long bits = working_precision();
  Real s(0);
  std::size_t terms = 0;
  {
    PrecisionGuard guard(bits + 32 + static_cast<long>(abs(a).to_double() * M_LOG2E));
    const Real tol = epsilon_for(bits + 16);
    Real p = a;  // (-1)^m a^(2m+1)/(2m+1)!
    for (long m = 0; m < 100000; ++m) {
      const Real t = p / (mu + Real(2 * m + 1));
      s += t;
      ++terms;
      if (static_cast<double>(m) > abs(a).to_double() && abs(t) <= tol * abs(s)) break;
      p *= -a * a / Real((2 * m + 2) * (2 * m + 3));
    }
  }
  const Real v = s.rounded(bits);
  return {v, abs(v) * epsilon_for(bits) * 4, terms, Method::taylor};
}

}  // namespace stieltjes::trig
