#pragma once

#include "lieper/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lieper {

// Dense matrix over exact rationals. Row-major. Linear maps are stored as
// (target_dim x source_dim) matrices acting on column vectors.
class MatQ {
public:
  MatQ() : rows_(0), cols_(0) {}
  MatQ(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static MatQ identity(std::size_t n);
  static MatQ from_rows(const std::vector<RatVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  void set_row(std::size_t i, const RatVec& v);

  MatQ transpose() const;
  bool is_zero() const;
  bool operator==(const MatQ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  RatVec apply(const RatVec& v) const;         // this * v
  MatQ operator*(const MatQ& o) const;
  MatQ operator+(const MatQ& o) const;
  MatQ operator-(const MatQ& o) const;
  MatQ scaled(const Rat& c) const;

  std::vector<std::vector<double>> to_double() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Reduced row echelon form. Exact rational Gauss-Jordan with leading-entry
// pivoting; pivot columns come out with a unit entry and zeros elsewhere.
struct Rref {
  MatQ r;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

Rref rref(MatQ m);

std::size_t rank(const MatQ& m);

// Basis of { x : m x = 0 }, one vector per row of the result.
MatQ nullspace(const MatQ& m);

// Any exact solution X of A X = B, or nullopt when inconsistent.
std::optional<MatQ> solve(const MatQ& a, const MatQ& b);

// Basis (rows) of the cokernel of A^T,  i.e. { u : u^T A = 0 }.
MatQ left_nullspace(const MatQ& a);

// Quotient of Q^ambient by the row span of a set of relation vectors, with an
// exact projection and a section. Free coordinates are the non-pivot columns
// of the reduced relation basis, so projection . section = identity and
// kernel(projection) = span(relations). This one type backs both the
// universal-form quotient and cokernels of twists.
class QuotientSpace {
public:
  QuotientSpace() = default;

  // relations: spanning vectors (rows) of the subspace to kill.
  QuotientSpace(std::size_t ambient_dim, const std::vector<RatVec>& relations);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return proj_.rows(); }
  std::size_t relation_rank() const { return rel_.rows(); }

  const MatQ& projection() const { return proj_; }  // dim x ambient
  const MatQ& section() const { return sect_; }     // ambient x dim
  const MatQ& relation_basis() const { return rel_; } // RREF rows

  RatVec project(const RatVec& v) const { return proj_.apply(v); }
  RatVec lift(const RatVec& q) const { return sect_.apply(q); }

private:
  std::size_t ambient_ = 0;
  MatQ rel_, proj_, sect_;
};

} // namespace lieper
