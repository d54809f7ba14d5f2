#include "stieltjes/stieltjes.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "stieltjes/hypergeom.hpp"
#include "stieltjes/numerics/bernoulli.hpp"
#include "stieltjes/numerics/log_power.hpp"
#include "stieltjes/numerics/summation.hpp"
#include "stieltjes/numerics/zeta.hpp"
#include "stieltjes/trigintegrals.hpp"

namespace stieltjes::series {

using hypergeom::Family;

const char* acceleration_name(Acceleration a) {
  switch (a) {
    case Acceleration::none:
      return "none";
    case Acceleration::paper_1_4:
      return "paper-1-4";
    case Acceleration::asymptotic_tail:
      return "asymptotic-tail";
  }
  return "unknown";
}

void StieltjesRequest::validate() const {
  if (k < 0) throw InvalidParameters("k must be nonnegative");
  if (k > trig::kJMax)
    throw RecursionDepthExceeded("k = " + std::to_string(k) + " exceeds J_MAX = " + std::to_string(trig::kJMax));
  const bool half = a == Real(1) / 2;
  if (a != Real(1) && !half) throw InvalidParameters("a must be 1 or 1/2");
  if (half && k >= 2) throw InvalidParameters("a = 1/2 is supported for k <= 1 only");
  if (n_terms < 1) throw InvalidParameters("n_terms must be positive");
  if (tail_order < 2) throw InvalidParameters("tail_order must be at least 2");
  if (precision_bits < kMinPrecisionBits) throw InvalidParameters("precision_bits below the supported minimum");
}

// ---------------------------------------------------------------------------
// tail models

Real TailModel::operator()(const Real& n) const {
  Real s(0);
  const Real ln = log(n);
  for (const auto& t : coefficients) s += t.coefficient * pow(ln, t.log_power) / pow(n, t.power);
  return s;
}

Real TailModel::tail_sum(long n) const {
  Real s(0);
  for (const auto& t : coefficients) s += t.coefficient * numerics::log_power_tail(Real(t.power), t.log_power, n);
  return s;
}

TailBasis even_power_basis(int order, int lead) {
  TailBasis b;
  for (int i = 0; i < order; ++i) b.emplace_back(lead + 2 * i, 0);
  return b;
}

TailModel fit_tail(const std::vector<std::pair<long, Real>>& samples, int order, const TailBasis& basis_in) {
  const TailBasis basis = basis_in.empty() ? even_power_basis(order) : basis_in;
  if (samples.size() < basis.size() + 2) throw InvalidParameters("fit_tail: need at least order + 2 samples");
  long n_max = 0;
  for (const auto& [n, v] : samples) {
    if (n < 1) throw InvalidParameters("fit_tail: sample index must be positive");
    n_max = std::max(n_max, n);
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(samples.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(basis.size());
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> a(rows, cols);
  Eigen::Matrix<Real, Eigen::Dynamic, 1> y(rows);
  // columns scaled by their value at n_max, rows by the leading column
  const Real nm(n_max);
  const Real lnm = log(nm);
  std::vector<Real> col_scale;
  for (const auto& [p, q] : basis) col_scale.push_back(pow(lnm, q) / pow(nm, p));
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Real n(samples[static_cast<std::size_t>(i)].first);
    const Real ln = log(n);
    const Real row_scale = pow(nm / n, basis[0].first);
    for (Eigen::Index j = 0; j < cols; ++j) {
      const auto [p, q] = basis[static_cast<std::size_t>(j)];
      a(i, j) = pow(ln, q) / pow(n, p) / col_scale[static_cast<std::size_t>(j)] / row_scale;
    }
    y(i) = samples[static_cast<std::size_t>(i)].second / col_scale[0] / row_scale;
  }
  const auto x = numerics::least_squares<Real>(a, y);
  TailModel m;
  m.order = order;
  for (Eigen::Index j = 0; j < cols; ++j) {
    const auto [p, q] = basis[static_cast<std::size_t>(j)];
    m.coefficients.push_back(TailTerm{p, q, x(j) * col_scale[0] / col_scale[static_cast<std::size_t>(j)]});
  }
  Real worst(0), scale(0);
  for (const auto& [n, v] : samples) {
    worst = max(worst, abs(m(Real(n)) - v));
    scale = max(scale, abs(v));
  }
  m.residual = scale.is_zero() ? worst : worst / scale;
  if (scale.is_zero() || m.residual > Real("1e-8"))
    throw IllConditionedFit("fit_tail: samples are not described by the tail basis (relative residual " +
                            m.residual.to_string(6) + ")");
  return m;
}

Real decay_exponent(const std::vector<std::pair<long, Real>>& samples) {
  if (samples.size() < 2) throw InvalidParameters("decay_exponent: need two samples");
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> a(static_cast<Eigen::Index>(samples.size()), 2);
  Eigen::Matrix<Real, Eigen::Dynamic, 1> y(static_cast<Eigen::Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].second.is_zero()) throw InvalidParameters("decay_exponent: zero sample");
    a(static_cast<Eigen::Index>(i), 0) = Real(1);
    a(static_cast<Eigen::Index>(i), 1) = log(Real(samples[i].first));
    y(static_cast<Eigen::Index>(i)) = log(abs(samples[i].second));
  }
  return -numerics::least_squares<Real>(a, y)(1);
}

// ---------------------------------------------------------------------------
// summands

namespace {

Real two_pi() { return 2 * constants::pi(); }

Real factorial(int n) {
  Real f(1);
  for (int i = 2; i <= n; ++i) f *= Real(i);
  return f;
}

// (-1)^m m! / (3 2^(m+2)), the hypergeometric weight in u_m
Real hyp_weight(int m) {
  const Real s = (m % 2 == 0) ? Real(1) : Real(-1);
  return s * factorial(m) / (Real(3) * pow(Real(2), m + 2));
}

Real cached_zeta(int s) {
  thread_local std::map<std::pair<long, int>, Real> cache;
  const auto key = std::make_pair(working_precision(), s);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, numerics::zeta(Real(s))).first->second;
}

SeriesResult u_at(int m, const Real& b) {
  if (m == 0) {
    const Real v = sin(b) / b - trig::ci(b);
    return {v, abs(v) * epsilon_for(working_precision() - 8), 1, Method::closed_form};
  }
  return scaled(trig::logsine_tail_compact(b, m), Real(1) / b);
}

SeriesResult finish(SeriesResult r, long bits) {
  r.value = r.value.rounded(bits);
  r.error_estimate += abs(r.value) * epsilon_for(bits);
  return r;
}

Real family_target(const Real& scale, long bits) { return ldexp(Real(1), -bits - 8) / (abs(scale) + 1); }

}  // namespace

std::vector<std::pair<int, Real>> summand_expansion(const UCombination& w, int max_power) {
  std::map<int, Real> acc;
  const Real tp = two_pi();
  for (const auto& [m, wm] : w) {
    if (m == 0) {
      // -Ci(b) at b = 2 pi n: sum_k (-1)^k (2k+1)! / b^(2k+2)
      for (int k = 0; 2 * k + 2 <= max_power; ++k) {
        const Real c = ((k % 2 == 0) ? Real(1) : Real(-1)) * factorial(2 * k + 1);
        acc[2 * k + 2] += wm * c / pow(tp, 2 * k + 2);
      }
      continue;
    }
    // u_m(b) = hyp_weight(m) b^2 O(b), O(b) = sum Re(d_i) b^-i at b = 2 pi n
    const auto& os = hypergeom::oscillatory_series(Family{m + 2, 5});
    const Real hw = hyp_weight(m);
    for (std::size_t i = 0; i < os.d.size(); ++i) {
      const int p = os.min_index + static_cast<int>(i) - 2;
      if (p > max_power) break;
      if (os.d[i].re == 0) continue;
      acc[p] += wm * hw * numerics::to_real(mpq_class(os.d[i].re)) / pow(tp, p);
    }
  }
  std::vector<std::pair<int, Real>> out;
  for (auto& [p, c] : acc)
    if (!c.is_zero()) out.emplace_back(p, c);
  return out;
}

SeriesResult bracket_gamma1(long n) {
  const long bits = working_precision();
  SeriesResult r;
  {
    PrecisionGuard guard(bits + 32);
    const Real ga = constants::euler(), pi = constants::pi();
    const Real z = pi * pi * Real(n) * Real(n);
    const Real l = log(two_pi() * Real(n));
    const auto f = hypergeom::eval_auto(Family{3, 5}.spec(z), family_target(z / 6, bits));
    r.value = 1 + (ga - 2) * ga / 2 - pi * pi / 24 - z / 6 * f.value + l * (ga - 1 + l / 2);
    r.error_estimate = z / 6 * f.error_estimate + (z / 6 * abs(f.value) + l * l) * epsilon_for(bits + 24);
    r.terms_used = f.terms_used;
    r.method = f.method;
  }
  return finish(r, bits);
}

SeriesResult bracket_gamma2(long n) {
  const long bits = working_precision();
  SeriesResult r;
  {
    PrecisionGuard guard(bits + 32);
    const Real ga = constants::euler(), pi = constants::pi();
    const Real pi2 = pi * pi;
    const Real z = pi2 * Real(n) * Real(n);
    const Real l = log(two_pi() * Real(n));
    const auto f = hypergeom::eval_auto(Family{4, 5}.spec(z), family_target(z / 6, bits));
    const Real head = 2 * (1 - ga) + ga * ga - ga * ga * ga / 3 - pi2 / 12 + ga * pi2 / 12 - Real(2) / 3 * cached_zeta(3);
    const Real poly = 1 - ga + ga * ga / 2 - pi2 / 24 + l / 2 * (ga - 1) + l * l / 6;
    r.value = head + z / 6 * f.value - 2 * l * poly;
    r.error_estimate = z / 6 * f.error_estimate + (z / 6 * abs(f.value) + l * l * l) * epsilon_for(bits + 24);
    r.terms_used = f.terms_used;
    r.method = f.method;
  }
  return finish(r, bits);
}

SeriesResult summand(int j, long n) {
  if (j < 1 || j > trig::kJMax) throw InvalidParameters("summand: j out of range");
  const long bits = working_precision();
  SeriesResult r;
  {
    PrecisionGuard guard(bits + 32);
    const Real b = two_pi() * Real(n);
    r = scaled(u_at(j, b), Real(2));
    if (j >= 2) r = r - scaled(u_at(j - 1, b), Real(2 * j));
  }
  return finish(r, bits);
}

// ---------------------------------------------------------------------------
// generic n-sum with the three closures

namespace {

struct Engine {
  std::function<SeriesResult(long)> term;
  Real constant;
  Real constant_error;
  UCombination weights;
};

Real expansion_tail(const std::vector<std::pair<int, Real>>& e, long n, int skip_power, Real* err) {
  Real s(0);
  int used = 0;
  *err = Real(0);
  for (const auto& [p, c] : e) {
    if (p == skip_power) continue;
    const Real t = c * numerics::log_power_tail(Real(p), 0, n);
    if (used < 2) s += t;
    if (used == 1) *err = abs(t);
    if (++used == 2) break;
  }
  return s;
}

SeriesResult run(const Engine& e, const StieltjesRequest& req) {
  const long bits = working_precision();
  const long n_terms = req.n_terms;
  const auto expansion = summand_expansion(e.weights, 24);
  Real c4(0);
  for (const auto& [p, c] : expansion)
    if (p == 4) c4 = c;
  const bool subtract = req.acceleration == Acceleration::paper_1_4;

  const auto terms = numerics::parallel_map<SeriesResult>(static_cast<std::size_t>(n_terms), req.threads,
                                                          [&](std::size_t i) {
                                                            const long n = static_cast<long>(i) + 1;
                                                            auto t = e.term(n);
                                                            if (subtract) {
                                                              PrecisionGuard g(working_precision() + 32);
                                                              t.value = (t.value - c4 / pow(Real(n), 4)).rounded(bits);
                                                            }
                                                            return t;
                                                          });
  std::vector<Real> values;
  values.reserve(terms.size());
  Real term_err(0);
  for (const auto& t : terms) {
    values.push_back(t.value);
    term_err += t.error_estimate;
  }
  SeriesResult out;
  out.terms_used = static_cast<std::size_t>(n_terms);
  out.method = Method::hybrid;
  {
    PrecisionGuard guard(bits + 16);
    const Real partial = numerics::pairwise_sum(values);
    Real constant = e.constant;
    if (subtract) constant += c4 * cached_zeta(4);
    Real tail(0), tail_err(0);
    if (req.acceleration == Acceleration::asymptotic_tail) {
      const int order = req.tail_order;
      const long count = std::max<long>(3L * order, order + 4);
      if (n_terms < 4 * count)
        throw InvalidParameters("asymptotic_tail needs n_terms >= " + std::to_string(4 * count));
      std::vector<std::pair<long, Real>> samples;
      for (long i = 0; i < count; ++i) {
        const long n = n_terms - i * (n_terms / 2) / (count - 1);
        samples.emplace_back(n, values[static_cast<std::size_t>(n - 1)]);
      }
      const auto model = fit_tail(samples, order);
      const auto coarse = fit_tail(samples, order - 1);
      tail = model.tail_sum(n_terms);
      tail_err = abs(tail - coarse.tail_sum(n_terms)) + model.residual * abs(tail);
    } else {
      // truncation left as error; estimated from the exact expansion
      const Real est = expansion_tail(expansion, n_terms, subtract ? 4 : -1, &tail_err);
      tail_err += abs(est);
    }
    out.value = constant + partial + tail;
    out.error_estimate = e.constant_error + term_err + tail_err;
  }
  return finish(out, bits);
}

}  // namespace

SeriesResult gamma1(const StieltjesRequest& req) {
  if (req.k != 1 || req.a != Real(1)) throw InvalidParameters("gamma1: requires k = 1, a = 1");
  req.validate();
  Engine e;
  e.term = [](long n) { return scaled(bracket_gamma1(n), Real(2)); };
  e.constant = Real(1) / 2 - constants::euler();
  e.constant_error = Real(0);
  e.weights = {{1, Real(2)}};
  return run(e, req);
}

SeriesResult gamma2(const StieltjesRequest& req) {
  if (req.k != 2 || req.a != Real(1)) throw InvalidParameters("gamma2: requires k = 2, a = 1");
  req.validate();
  StieltjesRequest r1 = req;
  r1.k = 1;
  // recomputed at the caller's precision every time
  const auto g1 = gamma1(r1);
  Engine e;
  e.term = [](long n) { return scaled(bracket_gamma2(n), Real(2)); };
  e.constant = 1 - 2 * (constants::euler() + g1.value);
  e.constant_error = 2 * g1.error_estimate;
  e.weights = {{2, Real(2)}};
  return run(e, req);
}

SeriesResult gamma_j(const StieltjesRequest& req) {
  req.validate();
  const int j = req.k;
  if (j < 1 || req.a != Real(1)) throw InvalidParameters("gamma_j: requires k >= 1, a = 1");
  Engine e;
  e.term = [j](long n) { return summand(j, n); };
  e.constant = j == 1 ? Real(1) / 2 - constants::euler() : Real(0);
  e.constant_error = Real(0);
  if (j == 1)
    e.weights = {{1, Real(2)}};
  else
    e.weights = {{j, Real(2)}, {j - 1, Real(-2 * j)}};
  return run(e, req);
}

// ---------------------------------------------------------------------------

Real euler_summand(long j) {
  const long bits = working_precision();
  Real v;
  {
    PrecisionGuard guard(bits + 64);
    const Real x = Real(1) / Real(j);
    v = log1p(x) - (Real(1) / Real(j + 1) + x) / 2;
  }
  return v.rounded(bits);
}

SeriesResult euler_gamma(long n_terms, bool with_tail) {
  if (n_terms < 1) throw InvalidParameters("euler_gamma: n_terms must be positive");
  const long bits = working_precision();
  SeriesResult out;
  out.terms_used = static_cast<std::size_t>(n_terms);
  out.method = with_tail ? Method::hybrid : Method::taylor;
  {
    PrecisionGuard guard(bits + 16);
    std::vector<Real> v;
    v.reserve(static_cast<std::size_t>(n_terms));
    for (long j = 1; j <= n_terms; ++j) v.push_back(euler_summand(j));
    const Real partial = numerics::pairwise_sum(v);
    // summand = sum_{p>=3} (-1)^(p+1) (1/p - 1/2) j^-p, convergent for j >= 2
    Real tail(0), last(0);
    const Real tol = ldexp(Real(1), -bits - 8);
    for (int p = 3; p < 4 * bits; ++p) {
      const Real c = ((p % 2 == 1) ? Real(1) : Real(-1)) * (Real(1) / Real(p) - Real(1) / 2);
      const Real t = c * numerics::log_power_tail(Real(p), 0, n_terms);
      tail += t;
      last = abs(t);
      if (last < tol) break;
    }
    if (with_tail) {
      out.value = Real(1) / 2 - partial - tail;
      out.error_estimate = 2 * last + Real(n_terms) * epsilon_for(bits + 8);
    } else {
      out.value = Real(1) / 2 - partial;
      out.error_estimate = abs(tail);
    }
  }
  return finish(out, bits);
}

SeriesResult digamma_series(const Real& a, long n_terms) {
  if (!(a > Real(0))) throw DomainError("digamma_series: a must be positive");
  if (n_terms < 1) throw InvalidParameters("digamma_series: n_terms must be positive");
  const long bits = working_precision();
  SeriesResult out;
  out.terms_used = static_cast<std::size_t>(n_terms);
  out.method = Method::hybrid;
  {
    PrecisionGuard guard(bits + 32);
    const Real pi = constants::pi();
    const Real step = two_pi() * a;
    std::vector<Real> v;
    v.reserve(static_cast<std::size_t>(n_terms));
    for (long j = 1; j <= n_terms; ++j) {
      const Real x = step * Real(j);
      Real s, c;
      sin_cos(x, s, c);
      v.push_back(2 * c * trig::ci(x) - s * (pi - 2 * trig::si(x)));
    }
    const Real partial = numerics::pairwise_sum(v);
    // summand = -2 g(2 pi j a), g(x) ~ sum_k (-1)^k (2k+1)! / x^(2k+2)
    Real tail(0), prev(-1), err(0);
    const Real tol = ldexp(Real(1), -bits - 8);
    for (int k = 0; k < 200; ++k) {
      const int p = 2 * k + 2;
      const Real c = ((k % 2 == 0) ? Real(-2) : Real(2)) * factorial(2 * k + 1) / pow(step, p);
      const Real t = c * numerics::log_power_tail(Real(p), 0, n_terms);
      if (prev >= Real(0) && abs(t) > prev) break;
      tail += t;
      err = abs(t);
      if (err < tol) break;
      prev = err;
    }
    out.value = log(a) - 1 / (2 * a) + partial + tail;
    out.error_estimate = err + Real(n_terms) * epsilon_for(bits + 4);
  }
  return finish(out, bits);
}

SeriesResult gamma1_half_summand(long n) {
  const long bits = working_precision();
  SeriesResult r;
  {
    PrecisionGuard guard(bits + 32);
    const Real kappa = two_pi() * Real(n);
    const Real half = Real(1) / 2;
    // int_{1/2}^inf sin(kappa x)/x^2 dx = -kappa Ci(kappa/2) + 2 sin(kappa/2)
    const Real plain = -kappa * trig::ci(kappa / 2) + 2 * sin(kappa / 2);
    const auto finite = trig::logsine_finite(kappa, half, Real(1));
    const auto tail = trig::logsine_tail(kappa, 1);
    const Real integral = plain - finite.value - tail.value;
    const Real sign = (n % 2 == 0) ? Real(1) : Real(-1);
    r.value = sign * integral / (constants::pi() * Real(n));
    r.error_estimate = (finite.error_estimate + tail.error_estimate + abs(plain) * epsilon_for(bits + 24)) /
                       (constants::pi() * Real(n));
    r.terms_used = finite.terms_used + tail.terms_used;
    r.method = Method::hybrid;
  }
  return finish(r, bits);
}

SeriesResult gamma1_half(long n_terms) {
  if (n_terms < 1) throw InvalidParameters("gamma1_half: n_terms must be positive");
  const long bits = working_precision();
  std::vector<Real> v;
  Real term_err(0);
  for (long n = 1; n <= n_terms; ++n) {
    const auto t = gamma1_half_summand(n);
    v.push_back(t.value);
    term_err += t.error_estimate;
  }
  SeriesResult out;
  out.terms_used = static_cast<std::size_t>(n_terms);
  out.method = Method::hybrid;
  {
    PrecisionGuard guard(bits + 16);
    const Real partial = numerics::pairwise_sum(v);
    // summand ~ sum_m 2 (-1)^m h^(2m)(1/2) / (2 pi)^(2m+2) n^-(2m+2), h = (1 - ln x)/x^2
    auto h = numerics::LogPower<Real>({{Real(1), Real(2), 0}, {Real(-1), Real(2), 1}});
    const Real half = Real(1) / 2;
    const Real tp = two_pi();
    Real tail(0), prev(-1), err(0);
    const Real tol = ldexp(Real(1), -bits - 8);
    for (int m = 0; m < 200; ++m) {
      const int p = 2 * m + 2;
      const Real c = ((m % 2 == 0) ? Real(2) : Real(-2)) * h(half) / pow(tp, p);
      const Real t = c * numerics::log_power_tail(Real(p), 0, n_terms);
      if (prev >= Real(0) && abs(t) > prev) break;
      tail += t;
      err = abs(t);
      if (err < tol) break;
      prev = err;
      h = h.derivative().derivative();
    }
    const Real l2 = constants::ln2();
    out.value = -(l2 + l2 * l2 / 2 + partial + tail);
    out.error_estimate = err + term_err;
  }
  return finish(out, bits);
}

SeriesResult compute(const StieltjesRequest& req) {
  req.validate();
  PrecisionGuard guard(req.precision_bits);
  const bool half = req.a != Real(1);
  switch (req.k) {
    case 0:
      if (half) {
        auto r = digamma_series(req.a, req.n_terms);
        r.value = -r.value;
        return r;
      }
      return euler_gamma(req.n_terms, req.acceleration != Acceleration::none);
    case 1:
      return half ? gamma1_half(req.n_terms) : gamma1(req);
    case 2:
      return gamma2(req);
    default:
      return gamma_j(req);
  }
}

}  // namespace stieltjes::series
