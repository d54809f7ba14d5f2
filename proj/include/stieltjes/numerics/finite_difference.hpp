#ifndef STIELTJES_NUMERICS_FINITE_DIFFERENCE_HPP
#define STIELTJES_NUMERICS_FINITE_DIFFERENCE_HPP

#include <gmpxx.h>

#include <vector>

namespace stieltjes::numerics {

/// Exact weights w_i with f^(k)(0) ~ h^-k sum_i w_i f(x_i h) (Fornberg).
inline std::vector<mpq_class> fornberg_weights(int k, const std::vector<int>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<std::vector<mpq_class>>> c(
      static_cast<std::size_t>(n),
      std::vector<std::vector<mpq_class>>(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(k + 1), 0)));
  auto at = [&](int a, int b, int m) -> mpq_class& {
    return c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(m)];
  };
  at(0, 0, 0) = 1;
  mpq_class c1 = 1;
  for (int i = 1; i < n; ++i) {
    mpq_class c2 = 1;
    for (int j = 0; j < i; ++j) {
      const mpq_class c3 = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
      c2 *= c3;
      for (int m = 0; m <= std::min(i, k); ++m) {
        at(i, j, m) = (x[static_cast<std::size_t>(i)] * at(i - 1, j, m) - (m > 0 ? m * at(i - 1, j, m - 1) : mpq_class(0))) / c3;
      }
    }
    for (int m = 0; m <= std::min(i, k); ++m) {
      at(i, i, m) = c1 / c2 *
                    ((m > 0 ? m * at(i - 1, i - 1, m - 1) : mpq_class(0)) - x[static_cast<std::size_t>(i - 1)] * at(i - 1, i - 1, m));
    }
    c1 = c2;
  }
  std::vector<mpq_class> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = at(n - 1, j, k);
  return w;
}

}  // namespace stieltjes::numerics

#endif  // STIELTJES_NUMERICS_FINITE_DIFFERENCE_HPP
