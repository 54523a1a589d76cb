#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#if defined(LIEPER_HAVE_OPENMP)
#include <omp.h>
#endif

namespace lieper {

// Deterministic blocked reduction. Terms are grouped into fixed blocks, each
// block is summed left to right, and the block partials are combined in index
// order. The OpenMP path only distributes whole blocks, so serial and parallel
// runs produce bit-identical sums.
template <class F>
double blocked_sum(std::size_t n, const F& term, bool parallel) {
  constexpr std::size_t block = 4096;
  const std::size_t nb = (n + block - 1) / block;
  std::vector<double> partial(nb, 0.0);

  auto sum_block = [&](std::size_t b) {
    const std::size_t begin = b * block;
    const std::size_t end = std::min(begin + block, n);
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += term(i);
    partial[b] = s;
  };

#if defined(LIEPER_HAVE_OPENMP)
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < static_cast<long long>(nb); ++b)
      sum_block(static_cast<std::size_t>(b));
  } else {
    for (std::size_t b = 0; b < nb; ++b) sum_block(b);
  }
#else
  (void)parallel;
  for (std::size_t b = 0; b < nb; ++b) sum_block(b);
#endif

  double total = 0.0;
  for (std::size_t b = 0; b < nb; ++b) total += partial[b];
  return total;
}

inline bool openmp_enabled() {
#if defined(LIEPER_HAVE_OPENMP)
  return true;
#else
  return false;
#endif
}

// honor a LIEPER_THREADS cap when OpenMP is active
inline void apply_thread_env() {
#if defined(LIEPER_HAVE_OPENMP)
  if (const char* env = std::getenv("LIEPER_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

} // namespace lieper
