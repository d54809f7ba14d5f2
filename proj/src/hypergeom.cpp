#include "stieltjes/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

#include <Eigen/Dense>

#include "stieltjes/numerics/bernoulli.hpp"
#include "stieltjes/numerics/summation.hpp"
#include "stieltjes/numerics/zeta.hpp"

namespace stieltjes::hypergeom {

namespace {

bool is_nonpositive_integer(const Real& x) { return x <= Real(0) && floor(x) == x; }

long taylor_precision(const Real& absz, const Real& target, long bits) {
  long p = bits;
  if (!target.is_zero()) p = std::max(p, -target.exponent2() + 16);
  p += 32;
  if (absz > Real(1)) p += static_cast<long>(std::ceil(2.0 * std::sqrt(absz.to_double()) * M_LOG2E)) + 64;
  return p;
}

Real rounding_floor(const Real& v, long bits) { return abs(v) * epsilon_for(bits); }

}  // namespace

void HypSpec::validate() const {
  for (const auto& b : denominator)
    if (is_nonpositive_integer(b)) throw InvalidSpec("denominator parameter is a nonpositive integer");
  if (denominator.size() != numerator.size() + 1) throw InvalidSpec("only pF(p+1) specs are supported");
}

SeriesResult eval_taylor(const HypSpec& spec, const Real& target_abs_err, std::size_t max_terms) {
  spec.validate();
  if (!(target_abs_err > Real(0))) throw InvalidParameters("eval_taylor: target must be positive");
  const long bits = working_precision();
  if (spec.argument.is_zero()) return {Real(1), Real(0), 1, Method::taylor};

  const Real absz = abs(spec.argument);
  Real value;
  Real err;
  std::size_t terms = 1;
  {
    PrecisionGuard guard(taylor_precision(absz, target_abs_err, bits));
    const Real& z = spec.argument;
    double max_param = 0.0;
    for (const auto& a : spec.numerator) max_param = std::max(max_param, std::abs(a.to_double()));
    for (const auto& b : spec.denominator) max_param = std::max(max_param, std::abs(b.to_double()));
    const double settle = 2.0 * std::sqrt(absz.to_double()) + max_param + 2.0;

    auto ratio = [&](std::size_t l) {
      Real r = z / Real(static_cast<long>(l + 1));
      const Real lr(static_cast<long>(l));
      for (const auto& a : spec.numerator) r *= a + lr;
      for (const auto& b : spec.denominator) r /= b + lr;
      return r;
    };

    Real term(1);
    Real sum(1);
    Real max_term(1);
    std::size_t l = 0;
    while (true) {
      if (l >= max_terms)
        throw NonConvergence("eval_taylor: term cap reached before the series settled");
      term *= ratio(l);
      ++l;
      sum += term;
      ++terms;
      const Real at = abs(term);
      if (at > max_term) max_term = at;
      if (term.is_zero()) {
        err = Real(0);
        break;
      }
      if (static_cast<double>(l) < settle) continue;
      const Real r = abs(ratio(l));
      if (r >= Real(1) / 2) continue;
      const Real tail = at * r / (Real(1) - r);
      if (tail <= target_abs_err / 2) {
        err = tail;
        break;
      }
    }
    err += max_term * epsilon_for(working_precision()) * Real(static_cast<long>(terms));
    value = sum;
  }
  Real out = value.rounded(bits);
  err += rounding_floor(out, bits);
  return {out, err, terms, Method::taylor};
}

Antiderivative integrate_spec(const HypSpec& spec, const Real& p, const Real& q) {
  if (p.is_zero()) throw InvalidParameters("integrate_spec: p must be nonzero");
  if (q == Real(-1)) throw InvalidParameters("integrate_spec: q must differ from -1");
  const Real c = (q + Real(1)) / p;
  if (c == Real(-1)) throw InvalidParameters("integrate_spec: (q+1)/p must differ from -1");
  if (spec.argument > Real(0)) throw InvalidParameters("integrate_spec: argument must have the form -kappa^p/4");
  spec.validate();
  Antiderivative out{spec, q + Real(1), Real(1) / (q + Real(1))};
  auto it = std::find(out.spec.denominator.begin(), out.spec.denominator.end(), c);
  if (it != out.spec.denominator.end()) {
    *it = c + Real(1);
  } else {
    out.spec.numerator.push_back(c);
    out.spec.denominator.push_back(c + Real(1));
  }
  return out;
}

HypSpec Family::spec(const Real& z) const {
  HypSpec s;
  s.numerator.assign(static_cast<std::size_t>(units), Real(1));
  s.denominator.assign(static_cast<std::size_t>(units), Real(2));
  s.denominator.push_back(alpha());
  s.argument = -z;
  return s;
}

std::string Family::name() const {
  return "F" + std::to_string(units) + std::to_string(units + 1) + "_" + std::to_string(alpha_twice) + "2";
}

Family family(NamedFamily f) {
  switch (f) {
    case NamedFamily::F23_32: return {2, 3};
    case NamedFamily::F34_52: return {3, 5};
    case NamedFamily::F45_52: return {4, 5};
  }
  throw UnsupportedFamily("unknown named family");
}

std::optional<Family> match_family(const HypSpec& spec) {
  const int p = static_cast<int>(spec.numerator.size());
  if (p < 2 || p > kMaxFamilyUnits || spec.denominator.size() != spec.numerator.size() + 1) return std::nullopt;
  for (const auto& a : spec.numerator)
    if (a != Real(1)) return std::nullopt;
  int twos = 0;
  int alpha_twice = 0;
  for (const auto& b : spec.denominator) {
    if (b == Real(2)) {
      ++twos;
    } else if (alpha_twice == 0 && (b == Real(3) / 2 || b == Real(5) / 2)) {
      alpha_twice = (b * 2).to_long();
    } else {
      return std::nullopt;
    }
  }
  if (alpha_twice == 0) {
    if (twos != p + 1) return std::nullopt;
    return std::nullopt;
  }
  return Family{p, alpha_twice};
}

// ---------------------------------------------------------------------------
// Exact oscillatory coefficients.
//
// Ci(x) - (ln x + gamma) oscillates as Re[e^{ix} sum_k k! i^{-k-1} x^{-k-1}],
// so the 2F3(...;3/2) member has O = -4 Ci_osc / kappa^2. The other members
// follow from G_{p+1,a}(k) = (2/k^2) int_0^k t G_{p,a} and
// G_{p,5/2}(k) = (3/k^3) int_0^k t^2 G_{p,3/2}.

namespace {

GaussianRational times_minus_i(const GaussianRational& z) { return {z.im, -z.re}; }

OscillatorySeries base_series() {
  OscillatorySeries s;
  s.min_index = 3;
  mpz_class fact(1);
  for (int k = 0; k < kExponentialDepth; ++k) {
    if (k > 0) fact *= k;
    // -4 k! i^{-k-1}
    const int e = ((-(k + 1)) % 4 + 4) % 4;
    mpq_class v(-4 * fact);
    GaussianRational g{mpq_class(0), mpq_class(0)};
    switch (e) {
      case 0: g.re = v; break;
      case 1: g.im = v; break;
      case 2: g.re = -v; break;
      case 3: g.im = -v; break;
    }
    s.d.push_back(std::move(g));
  }
  return s;
}

// Oscillatory antiderivative of t^q O(t), then scaled by c kappa^-r.
OscillatorySeries integrate_step(const OscillatorySeries& src, int q, int r, long c) {
  OscillatorySeries out;
  const int lo = src.min_index - q;
  GaussianRational prev{mpq_class(0), mpq_class(0)};
  for (std::size_t k = 0; k < src.d.size(); ++k) {
    const int m = lo + static_cast<int>(k);
    GaussianRational acc{src.d[k].re + prev.re * (m - 1), src.d[k].im + prev.im * (m - 1)};
    prev = times_minus_i(acc);
    out.d.push_back(prev);
  }
  for (auto& g : out.d) {
    g.re *= c;
    g.im *= c;
  }
  out.min_index = lo + r;
  return out;
}

std::mutex g_series_mutex;
std::map<std::pair<int, int>, std::unique_ptr<OscillatorySeries>> g_series;

const OscillatorySeries& series_locked(int units, int alpha_twice) {
  const auto key = std::make_pair(units, alpha_twice);
  auto it = g_series.find(key);
  if (it != g_series.end()) return *it->second;
  OscillatorySeries s;
  if (units == 2 && alpha_twice == 3) {
    s = base_series();
  } else if (alpha_twice == 3) {
    s = integrate_step(series_locked(units - 1, 3), 1, 2, 2);
  } else {
    s = integrate_step(series_locked(units, 3), 2, 3, 3);
  }
  auto [pos, inserted] = g_series.emplace(key, std::make_unique<OscillatorySeries>(std::move(s)));
  return *pos->second;
}

void check_family(const Family& f) {
  if (f.units < 2 || f.units > kMaxFamilyUnits || (f.alpha_twice != 3 && f.alpha_twice != 5))
    throw UnsupportedFamily("family " + f.name() + " is not supported");
}

Real gamma_half_integer(int twice) {
  // Gamma(twice/2) for odd twice >= 1
  Real g = sqrt(constants::pi());
  for (int t = 1; t < twice; t += 2) g *= Real(t) / Real(2);
  return g;
}

Real psi_half_integer(int twice) {
  // psi(twice/2) for odd twice >= 1
  Real v = -constants::euler() - 2 * constants::ln2();
  for (int t = 1; t < twice; t += 2) v += Real(2) / Real(t);
  return v;
}

// h_m with H(-z) = (1/z) sum_m h_m ln^m z
std::vector<Real> algebraic_coefficients(const Family& f) {
  const int p = f.units;
  const int shifted = f.alpha_twice - 2;  // 2(alpha-1)
  std::vector<Real> c(static_cast<std::size_t>(p), Real(0));
  if (p > 1) c[1] = constants::euler() - psi_half_integer(shifted);
  for (int k = 2; k < p; ++k) {
    // zeta(k)/k - psi^{(k-1)}(alpha-1)/k!
    Real psi_k = Real((k % 2 == 0) ? 1 : -1) * (pow(Real(2), k) - Real(1)) * numerics::zeta(Real(k)) / Real(k);
    Real corr(0);
    for (int t = 1; t < shifted; t += 2) {
      // psi^{(k-1)}(x+1) = psi^{(k-1)}(x) + (-1)^{k-1}(k-1)!/x^k, x = t/2
      corr += Real((k % 2 == 1) ? 1 : -1) * pow(Real(2) / Real(t), k) / Real(k);
    }
    c[static_cast<std::size_t>(k)] = numerics::zeta(Real(k)) / Real(k) - (psi_k + corr);
  }
  const std::vector<Real> a = numerics::series_exp(c, static_cast<std::size_t>(p));
  const Real am1 = f.alpha() - Real(1);
  std::vector<Real> h(static_cast<std::size_t>(p));
  Real fact(1);
  for (int m = 0; m < p; ++m) {
    if (m > 0) fact *= Real(m);
    h[static_cast<std::size_t>(m)] = am1 * a[static_cast<std::size_t>(p - 1 - m)] / fact;
  }
  return h;
}

// Per-precision numeric images of the exact data, built once.
struct NumericSeries {
  std::vector<Real> re, im, bound;
};

using NumericKey = std::tuple<int, int, long>;
std::mutex g_numeric_mutex;
std::map<NumericKey, std::shared_ptr<const NumericSeries>> g_numeric;
std::map<NumericKey, std::shared_ptr<const std::vector<Real>>> g_algebraic;

std::shared_ptr<const NumericSeries> numeric_series(const Family& f) {
  const NumericKey key{f.units, f.alpha_twice, working_precision()};
  {
    std::lock_guard lock(g_numeric_mutex);
    auto it = g_numeric.find(key);
    if (it != g_numeric.end()) return it->second;
  }
  const auto& s = oscillatory_series(f);
  auto n = std::make_shared<NumericSeries>();
  for (const auto& d : s.d) {
    n->re.push_back(numerics::to_real(d.re));
    n->im.push_back(numerics::to_real(d.im));
    n->bound.push_back(abs(n->re.back()) + abs(n->im.back()));
  }
  std::lock_guard lock(g_numeric_mutex);
  return g_numeric.emplace(key, std::move(n)).first->second;
}

std::shared_ptr<const std::vector<Real>> cached_algebraic(const Family& f) {
  const NumericKey key{f.units, f.alpha_twice, working_precision()};
  {
    std::lock_guard lock(g_numeric_mutex);
    auto it = g_algebraic.find(key);
    if (it != g_algebraic.end()) return it->second;
  }
  auto h = std::make_shared<const std::vector<Real>>(algebraic_coefficients(f));
  std::lock_guard lock(g_numeric_mutex);
  return g_algebraic.emplace(key, std::move(h)).first->second;
}

}  // namespace

const OscillatorySeries& oscillatory_series(const Family& f) {
  check_family(f);
  std::lock_guard lock(g_series_mutex);
  return series_locked(f.units, f.alpha_twice);
}

AsymExpansion asym_expansion(const Family& f, int order) {
  check_family(f);
  if (order < 0 || order > kExponentialDepth)
    throw OrderUnavailable("asym_expansion: order exceeds the coefficient depth");
  AsymExpansion e;
  const auto h = algebraic_coefficients(f);
  for (std::size_t m = 0; m < h.size(); ++m) e.algebraic_terms.push_back({h[m], static_cast<int>(m), -1});
  e.theta = f.theta();
  e.alpha = f.alpha();
  const auto& s = oscillatory_series(f);
  const Real two_gamma = 2 * gamma_half_integer(f.alpha_twice);
  for (int k = 0; k < order; ++k) {
    // A_k = d_m i^m / (2 Gamma(alpha)), m = k - theta
    const int m = s.min_index + k;
    const auto& d = s.d[static_cast<std::size_t>(k)];
    Real re;
    switch (((m % 4) + 4) % 4) {
      case 0: re = numerics::to_real(d.re); break;
      case 1: re = -numerics::to_real(d.im); break;
      case 2: re = -numerics::to_real(d.re); break;
      default: re = numerics::to_real(d.im); break;
    }
    e.exp_coeffs.push_back(re / two_gamma);
  }
  return e;
}

SeriesResult asym_algebraic(const Family& f, const Real& z) {
  check_family(f);
  if (!(z > Real(0))) throw DomainError("asym_algebraic: z must be positive");
  const long bits = working_precision();
  Real v;
  Real mag;
  {
    PrecisionGuard guard(bits + 32);
    const auto h = cached_algebraic(f);
    const Real lz = log(z);
    Real lp(1);
    v = Real(0);
    mag = Real(0);
    for (const auto& c : *h) {
      v += c * lp;
      mag += abs(c * lp);
      lp *= lz;
    }
    v /= z;
    mag /= z;
  }
  return {v.rounded(bits), mag * epsilon_for(bits) * 4, static_cast<std::size_t>(f.units), Method::closed_form};
}

SeriesResult asym_algebraic(NamedFamily f, const Real& z) { return asym_algebraic(family(f), z); }

SeriesResult asym_algebraic(const HypSpec& spec) {
  spec.validate();
  auto f = match_family(spec);
  if (!f) throw UnsupportedFamily("asym_algebraic: spec is not a repeated-parameter family member");
  return asym_algebraic(*f, -spec.argument);
}

SeriesResult asym_exponential(const Family& f, const Real& z, int order) {
  check_family(f);
  if (order < 1) throw InvalidParameters("asym_exponential: order must be at least 1");
  if (order >= kExponentialDepth) throw OrderUnavailable("asym_exponential: order exceeds the coefficient depth");
  if (!(z > Real(0))) throw DomainError("asym_exponential: z must be positive");
  const long bits = working_precision();
  const auto& s = oscillatory_series(f);
  Real value;
  Real next;
  {
    PrecisionGuard guard(bits + 32);
    const auto ns = numeric_series(f);
    const Real kappa = 2 * sqrt(z);
    const Real inv = Real(1) / kappa;
    Real pw = pow(inv, s.min_index);
    Real sre(0), sim(0);
    for (int k = 0; k < order; ++k) {
      const auto& d = s.d[static_cast<std::size_t>(k)];
      if (sgn(d.re) != 0) sre += ns->re[static_cast<std::size_t>(k)] * pw;
      if (sgn(d.im) != 0) sim += ns->im[static_cast<std::size_t>(k)] * pw;
      pw *= inv;
    }
    Real sn, cs;
    sin_cos(kappa, sn, cs);
    value = cs * sre - sn * sim;
    next = ns->bound[static_cast<std::size_t>(order)] * pw;
  }
  return {value.rounded(bits), next + rounding_floor(value, bits), static_cast<std::size_t>(order), Method::asymptotic};
}

SeriesResult asym_exponential(NamedFamily f, const Real& z, int order) {
  return asym_exponential(family(f), z, order);
}

Real exponential_term_bound(const Family& f, const Real& z, int k) {
  check_family(f);
  if (k < 0 || k >= kExponentialDepth) throw OrderUnavailable("exponential_term_bound: k out of range");
  if (!(z > Real(0))) throw DomainError("exponential_term_bound: z must be positive");
  const auto& s = oscillatory_series(f);
  const auto ns = numeric_series(f);
  return ns->bound[static_cast<std::size_t>(k)] * pow(2 * sqrt(z), -(s.min_index + k));
}

OptimalOrder optimal_exponential_order(const Family& f, const Real& z, const Real& target) {
  const auto& s = oscillatory_series(f);
  PrecisionGuard guard(std::max<long>(64, working_precision() / 4));
  const auto ns = numeric_series(f);
  const Real kappa = 2 * sqrt(z);
  const Real inv = Real(1) / kappa;
  Real pw = pow(inv, s.min_index);
  Real best(-1);
  int best_k = 1;
  for (int k = 0; k + 1 < kExponentialDepth; ++k) {
    const Real mag = ns->bound[static_cast<std::size_t>(k)] * pw;
    pw *= inv;
    if (k == 0) {
      best = mag;
      continue;
    }
    if (mag.is_zero()) continue;
    if (mag > best) return {best_k, best};
    best = mag;
    best_k = k;
    if (mag <= target) return {k, mag};
  }
  return {best_k, best};
}

SeriesResult eval_auto(const HypSpec& spec, const Real& target_abs_err) {
  spec.validate();
  const auto fam = match_family(spec);
  const Real z = -spec.argument;
  if (!fam || !(z > Real(kZSwitch))) return eval_taylor(spec, target_abs_err);
  const auto opt = optimal_exponential_order(*fam, z, target_abs_err / 4);
  if (opt.error > target_abs_err / 4) return eval_taylor(spec, target_abs_err);
  const SeriesResult h = asym_algebraic(*fam, z);
  const SeriesResult e = asym_exponential(*fam, z, opt.order);
  SeriesResult r = h + e;
  r.method = Method::asymptotic;
  r.terms_used = static_cast<std::size_t>(opt.order);
  return r;
}

CoefficientFit fit_exponential_coefficients(const Family& f, const std::vector<Real>& z_grid, int order) {
  check_family(f);
  if (order < 1 || static_cast<int>(z_grid.size()) < order + 2)
    throw IllConditionedFit("fit_exponential_coefficients: need at least order+2 grid points");
  const long bits = working_precision();
  const Real theta = f.theta();
  const Real two_gamma = 2 * gamma_half_integer(f.alpha_twice);
  const auto rows = static_cast<Eigen::Index>(z_grid.size());
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> a(rows, order);
  Eigen::Matrix<Real, Eigen::Dynamic, 1> y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Real& z = z_grid[static_cast<std::size_t>(i)];
    const Real kappa = 2 * sqrt(z);
    const Real scale = pow(kappa, -theta);
    const Real taylor = eval_taylor(f.spec(z), ldexp(Real(1), -bits)).value;
    y(i) = (taylor - asym_algebraic(f, z).value) * scale;
    for (int k = 0; k < order; ++k) {
      const Real ph = theta - Real(k);
      a(i, k) = two_gamma * pow(kappa, -Real(k)) * cos(kappa + constants::pi() * ph / 2);
    }
  }
  const Eigen::Matrix<Real, Eigen::Dynamic, 1> x = numerics::least_squares<Real>(a, y);
  const Eigen::Matrix<Real, Eigen::Dynamic, 1> res = a * x - y;
  Real worst(0);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Real kappa = 2 * sqrt(z_grid[static_cast<std::size_t>(i)]);
    worst = max(worst, abs(res(i)) * pow(kappa, theta));
  }
  CoefficientFit fit{f, {}, worst};
  for (int k = 0; k < order; ++k) fit.coefficients.push_back(x(k));
  return fit;
}

void write_coefficient_table(std::ostream& os, const std::vector<CoefficientFit>& fits) {
  os << "# exponential expansion coefficients A_k\n";
  os << "version 1\n";
  for (const auto& fit : fits) {
    for (std::size_t k = 0; k < fit.coefficients.size(); ++k) {
      os << fit.family.name() << ' ' << k << ' ' << fit.coefficients[k].to_string(40) << ' '
         << fit.residual.to_string(6) << '\n';
    }
  }
}

std::vector<CoefficientRecord> read_coefficient_table(std::istream& is) {
  std::vector<CoefficientRecord> out;
  std::string line;
  bool versioned = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!versioned) {
      std::string tag;
      int v = 0;
      ls >> tag >> v;
      if (tag != "version" || v != 1) throw InvalidParameters("coefficient table: unsupported version");
      versioned = true;
      continue;
    }
    CoefficientRecord r;
    if (!(ls >> r.family >> r.k >> r.value >> r.residual))
      throw InvalidParameters("coefficient table: malformed record: " + line);
    out.push_back(std::move(r));
  }
  if (!versioned) throw InvalidParameters("coefficient table: missing version line");
  return out;
}

}  // namespace stieltjes::hypergeom
