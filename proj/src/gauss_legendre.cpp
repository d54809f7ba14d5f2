#include "stieltjes/numerics/quadrature.hpp"

#include <map>
#include <mutex>

namespace stieltjes::numerics {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
template <typename Scalar>
std::pair<Scalar, Scalar> legendre(int n, const Scalar& x) {
  Scalar p0(1);
  Scalar p1 = x;
  for (int k = 2; k <= n; ++k) {
    Scalar p2 = (Scalar(2 * k - 1) * x * p1 - Scalar(k - 1) * p0) / Scalar(k);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  Scalar dp = Scalar(n) * (x * p1 - p0) / (x * x - Scalar(1));
  return {p1, dp};
}

std::mutex g_mutex;
std::map<std::pair<int, long>, std::shared_ptr<const GaussRule<Real>>> g_cache;

}  // namespace

GaussRule<double> gauss_legendre_double(int n) {
  GaussRule<double> r;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    auto [p, dp] = legendre(n, x);
    r.nodes[static_cast<std::size_t>(i)] = x;
    r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

int default_gauss_order() { return static_cast<int>(std::max<long>(20, working_precision() / 6)); }

std::shared_ptr<const GaussRule<Real>> gauss_legendre(int n) {
  const long bits = working_precision();
  const auto key = std::make_pair(n, bits);
  {
    std::lock_guard lock(g_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  auto rule = std::make_shared<GaussRule<Real>>();
  {
    PrecisionGuard guard(bits + 32);
    const GaussRule<double> seed = gauss_legendre_double(n);
    const Real tol = epsilon_for(bits + 16);
    for (int i = 0; i < n; ++i) {
      Real x(seed.nodes[static_cast<std::size_t>(i)]);
      for (int it = 0; it < 60; ++it) {
        auto [p, dp] = legendre(n, x);
        const Real dx = p / dp;
        x -= dx;
        if (abs(dx) < tol) break;
      }
      auto [p, dp] = legendre(n, x);
      Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
      rule->nodes.push_back(x.rounded(bits));
      rule->weights.push_back(w.rounded(bits));
    }
  }
  std::lock_guard lock(g_mutex);
  auto [it, inserted] = g_cache.emplace(key, std::move(rule));
  return it->second;
}

}  // namespace stieltjes::numerics
