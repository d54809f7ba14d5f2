#include "stieltjes/numerics/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace stieltjes::numerics {

namespace {

std::mutex g_mutex;
std::vector<mpq_class> g_table{mpq_class(1)};

}  // namespace

mpq_class bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  std::lock_guard lock(g_mutex);
  while (static_cast<int>(g_table.size()) <= n) {
    const int m = static_cast<int>(g_table.size());
    // B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
    mpq_class acc(0);
    mpz_class binom(1);
    for (int k = 0; k < m; ++k) {
      acc += mpq_class(binom) * g_table[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    mpq_class b = -acc / (m + 1);
    b.canonicalize();
    g_table.push_back(std::move(b));
  }
  return g_table[static_cast<std::size_t>(n)];
}

Real to_real(const mpq_class& q) {
  Real r = Real::uninitialized();
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real bernoulli_real(int n) { return to_real(bernoulli(n)); }

}  // namespace stieltjes::numerics
