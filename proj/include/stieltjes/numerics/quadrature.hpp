#ifndef STIELTJES_NUMERICS_QUADRATURE_HPP
#define STIELTJES_NUMERICS_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "stieltjes/numerics/scalar.hpp"
#include "stieltjes/numerics/summation.hpp"
#include "stieltjes/real.hpp"

namespace stieltjes::numerics {

/// Gauss-Legendre rule on [-1, 1].
template <typename Scalar>
struct GaussRule {
  std::vector<Scalar> nodes;
  std::vector<Scalar> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

GaussRule<double> gauss_legendre_double(int n);

/// Rule at the working precision; cached per (n, precision), shared across threads.
std::shared_ptr<const GaussRule<Real>> gauss_legendre(int n);

/// Default node count for panels at the working precision.
int default_gauss_order();

template <typename Scalar>
struct RuleFor;

template <>
struct RuleFor<double> {
  static std::shared_ptr<const GaussRule<double>> get(int n) {
    return std::make_shared<const GaussRule<double>>(gauss_legendre_double(n));
  }
  static int order() { return 20; }
};

template <>
struct RuleFor<Real> {
  static std::shared_ptr<const GaussRule<Real>> get(int n) { return gauss_legendre(n); }
  static int order() { return default_gauss_order(); }
};

template <typename Scalar, typename F>
Scalar gauss_panel(const GaussRule<Scalar>& rule, F& f, const Scalar& a, const Scalar& b) {
  const Scalar half = (b - a) / Scalar(2);
  const Scalar mid = (a + b) / Scalar(2);
  Scalar s(0);
  for (int i = 0; i < rule.size(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    s += rule.weights[k] * f(mid + half * rule.nodes[k]);
  }
  return s * half;
}

template <typename Scalar>
struct QuadResult {
  Scalar value;
  Scalar error;
  int panels = 0;
  bool converged = true;
};

/// Adaptive bisection with fixed-order Gauss-Legendre panels. A panel is
/// accepted when the parent estimate and the sum of its halves agree to within
/// the panel's share of tol. Panels are processed left to right so the result
/// is reproducible.
template <typename Scalar, typename F>
QuadResult<Scalar> adaptive_gauss(F&& f, const Scalar& a, const Scalar& b, const Scalar& tol, int max_panels = 20000,
                                  int order = 0) {
  using std::abs;
  if (order <= 0) order = RuleFor<Scalar>::order();
  const auto rule = RuleFor<Scalar>::get(order);
  const Scalar width = b - a;
  struct Panel {
    Scalar lo, hi, q;
    int depth;
  };
  std::vector<Panel> stack;
  stack.push_back({a, b, gauss_panel(*rule, f, a, b), 0});
  std::vector<Scalar> accepted;
  Scalar err(0);
  int evaluated = 1;
  bool converged = true;
  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const Scalar mid = (p.lo + p.hi) / Scalar(2);
    Scalar ql = gauss_panel(*rule, f, p.lo, mid);
    Scalar qr = gauss_panel(*rule, f, mid, p.hi);
    evaluated += 2;
    const Scalar diff = abs(p.q - (ql + qr));
    const Scalar share = tol * abs((p.hi - p.lo) / width);
    if (diff <= share || p.depth >= 60 || evaluated >= max_panels) {
      if (diff > share) converged = false;
      accepted.push_back(ql + qr);
      err += diff;
      continue;
    }
    stack.push_back({mid, p.hi, std::move(qr), p.depth + 1});
    stack.push_back({p.lo, mid, std::move(ql), p.depth + 1});
  }
  return {pairwise_sum(accepted), err, evaluated, converged};
}

}  // namespace stieltjes::numerics

#endif  // STIELTJES_NUMERICS_QUADRATURE_HPP
