#pragma once

#include "lieper/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lieper {

// Dense integer matrix, row-major. Arbitrary precision entries so unimodular
// row reduction over Z cannot overflow.
class MatZ {
public:
  MatZ() : rows_(0), cols_(0) {}
  MatZ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static MatZ identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j);
  void addmul_row(std::size_t dst, std::size_t src, const Int& c); // row[dst] += c*row[src]
  void negate_row(std::size_t i);

private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Row-style Hermite normal form: returns H with U*A = H for some unimodular U
// (tracked internally). Nonzero rows of H form a basis of the row lattice.
// Pivots positive, entries above each pivot reduced into [0, pivot).
struct HnfResult {
  MatZ h;             // full size, zero rows at the bottom
  MatZ u;             // unimodular transform, u*a = h
  std::size_t rank;   // number of nonzero rows of h
  std::vector<std::size_t> pivot_cols;
};

HnfResult hnf(MatZ a);

// Basis (rows) of the left kernel lattice { x in Z^m : x^T A = 0 }. The result
// is saturated: every integer solution is an integer combination of the rows.
MatZ left_kernel_z(const MatZ& a);

// Solve x^T H = v over the integers for H in HNF (nonzero rows, staircase
// pivots). Returns nullopt when v is not in the row lattice.
std::optional<std::vector<Int>> solve_in_hnf(const HnfResult& h, const std::vector<Int>& v);

} // namespace lieper
