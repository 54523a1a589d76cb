#include "lieper/hnf.hpp"

#include <cassert>
#include <cstdlib>

namespace lieper {

MatZ MatZ::identity(std::size_t n) {
  MatZ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void MatZ::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void MatZ::addmul_row(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void MatZ::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

HnfResult hnf(MatZ a) {
  const std::size_t m = a.rows(), n = a.cols();
  MatZ u = MatZ::identity(m);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;

  auto addmul = [&](std::size_t dst, std::size_t src, const Int& c) {
    a.addmul_row(dst, src, c);
    u.addmul_row(dst, src, c);
  };

  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclidean cascade: shrink entries in column c (rows >= r) until one remains.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (a.at(i, c) != 0 && (best == m || abs(a.at(i, c)) < abs(a.at(best, c)))) best = i;
      if (best == m) break; // column clear
      a.swap_rows(best, r);
      u.swap_rows(best, r);
      bool again = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a.at(i, c) == 0) continue;
        Int q = a.at(i, c) / a.at(r, c); // C++ truncation keeps |remainder| < |pivot|
        addmul(i, r, -q);
        if (a.at(i, c) != 0) again = true;
      }
      if (!again) break;
    }
    if (a.at(r, c) == 0) continue;
    if (a.at(r, c) < 0) {
      a.negate_row(r);
      u.negate_row(r);
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = a.at(i, c) / a.at(r, c);
      if (a.at(i, c) - q * a.at(r, c) < 0) q -= 1;
      addmul(i, r, -q);
    }
    pivots.push_back(c);
    ++r;
  }

  return HnfResult{std::move(a), std::move(u), pivots.size(), std::move(pivots)};
}

MatZ left_kernel_z(const MatZ& a) {
  HnfResult res = hnf(a);
  const std::size_t m = a.rows();
  MatZ ker(m - res.rank, m);
  for (std::size_t i = res.rank; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ker.at(i - res.rank, j) = res.u.at(i, j);
  return ker;
}

std::optional<std::vector<Int>> solve_in_hnf(const HnfResult& h, const std::vector<Int>& v) {
  assert(v.size() == h.h.cols());
  std::vector<Int> x(h.rank, Int(0));
  std::vector<Int> rem = v;
  for (std::size_t i = 0; i < h.rank; ++i) {
    std::size_t p = h.pivot_cols[i];
    if (rem[p] % h.h.at(i, p) != 0) return std::nullopt;
    Int c = rem[p] / h.h.at(i, p);
    x[i] = c;
    for (std::size_t j = 0; j < v.size(); ++j) rem[j] -= c * h.h.at(i, j);
  }
  for (const auto& e : rem)
    if (e != 0) return std::nullopt;
  return x;
}

} // namespace lieper
