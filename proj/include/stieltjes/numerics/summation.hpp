#ifndef STIELTJES_NUMERICS_SUMMATION_HPP
#define STIELTJES_NUMERICS_SUMMATION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "stieltjes/errors.hpp"
#include "stieltjes/real.hpp"

namespace stieltjes::numerics {

/// Fixed-shape pairwise reduction: the tree depends only on the length.
template <typename Scalar>
Scalar pairwise_sum(std::span<const Scalar> v) {
  if (v.empty()) return Scalar(0);
  if (v.size() == 1) return v[0];
  if (v.size() <= 8) {
    Scalar s = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) s += v[i];
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

template <typename Scalar>
Scalar pairwise_sum(const std::vector<Scalar>& v) {
  return pairwise_sum(std::span<const Scalar>(v.data(), v.size()));
}

/// Evaluates fn(i) for i in [0, n) on up to `threads` workers. Each slot is
/// written by exactly one call so the output does not depend on scheduling.
/// Workers inherit the caller's working precision.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn&& fn) {
  std::vector<T> out(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  const long bits = working_precision();
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        set_working_precision(bits);
        for (std::size_t i = t; i < n; i += threads) out[i] = fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Cohen-Rodriguez Villegas-Zagier acceleration of sum_k (-1)^k a_k using all
/// supplied a_k.
template <typename Scalar>
Scalar cvz_alternating(std::span<const Scalar> a) {
  using std::sqrt;
  const long n = static_cast<long>(a.size());
  Scalar d = Scalar(3) + sqrt(Scalar(8));
  Scalar dn(1);
  for (long i = 0; i < n; ++i) dn *= d;
  d = (dn + Scalar(1) / dn) / Scalar(2);
  Scalar b(-1);
  Scalar c = -d;
  Scalar s(0);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a[static_cast<std::size_t>(k)];
    b = b * Scalar((k + n) * (k - n)) / (Scalar(2 * k + 1) * Scalar(k + 1) / Scalar(2));
  }
  return s / d;
}

template <typename Scalar>
Scalar cvz_alternating(const std::vector<Scalar>& a) {
  return cvz_alternating(std::span<const Scalar>(a.data(), a.size()));
}

/// Coefficients of exp(a(t)) for a power series with a_0 = 0.
template <typename Scalar>
std::vector<Scalar> series_exp(const std::vector<Scalar>& a, std::size_t n) {
  std::vector<Scalar> b(n, Scalar(0));
  if (n == 0) return b;
  b[0] = Scalar(1);
  for (std::size_t m = 1; m < n; ++m) {
    Scalar s(0);
    for (std::size_t k = 1; k <= m && k < a.size(); ++k) s += Scalar(static_cast<long>(k)) * a[k] * b[m - k];
    b[m] = s / Scalar(static_cast<long>(m));
  }
  return b;
}

/// Least-squares solve of A x = y; throws IllConditionedFit when the
/// numerical rank is deficient.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> least_squares(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                                                       const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) {
  Eigen::ColPivHouseholderQR<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> qr(a);
  if (qr.rank() < a.cols()) throw IllConditionedFit("least_squares: rank deficient design matrix");
  return qr.solve(y);
}

/// Generalized Richardson extrapolation: fits samples y_i = L + sum_j c_j
/// phi_j(x_i) and returns L. With as many samples as unknowns this is the
/// interpolating extrapolant.
template <typename Scalar>
Scalar generalized_richardson(const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                              const std::vector<std::function<Scalar(const Scalar&)>>& basis) {
  const Eigen::Index rows = static_cast<Eigen::Index>(x.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(basis.size()) + 1;
  if (rows < cols) throw InvalidParameters("generalized_richardson: fewer samples than unknowns");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(rows, cols);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    a(i, 0) = Scalar(1);
    for (Eigen::Index j = 1; j < cols; ++j) a(i, j) = basis[static_cast<std::size_t>(j - 1)](x[static_cast<std::size_t>(i)]);
    rhs(i) = y[static_cast<std::size_t>(i)];
  }
  return least_squares<Scalar>(a, rhs)(0);
}

}  // namespace stieltjes::numerics

#endif  // STIELTJES_NUMERICS_SUMMATION_HPP
