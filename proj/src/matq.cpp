#include "lieper/matq.hpp"

#include "lieper/errors.hpp"

#include <cassert>

namespace lieper {

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ MatQ::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  MatQ m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatVec MatQ::row(std::size_t i) const {
  RatVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void MatQ::set_row(std::size_t i, const RatVec& v) {
  assert(v.size() == cols_);
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool MatQ::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

RatVec MatQ::apply(const RatVec& v) const {
  assert(v.size() == cols_);
  RatVec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat s(0);
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

MatQ MatQ::operator*(const MatQ& o) const {
  assert(cols_ == o.rows_);
  MatQ m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

MatQ MatQ::operator+(const MatQ& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  MatQ m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

MatQ MatQ::operator-(const MatQ& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  MatQ m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

MatQ MatQ::scaled(const Rat& c) const {
  MatQ m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = c * a_[i];
  return m;
}

std::vector<std::vector<double>> MatQ::to_double() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = rat_double(at(i, j));
  return out;
}

Rref rref(MatQ m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // pick the first nonzero entry at or below row r
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  // keep only the nonzero rows
  MatQ red(out.pivot_cols.size(), m.cols());
  for (std::size_t i = 0; i < red.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) red.at(i, j) = m.at(i, j);
  out.r = std::move(red);
  return out;
}

std::size_t rank(const MatQ& m) { return rref(m).rank(); }

MatQ nullspace(const MatQ& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  MatQ basis(free_cols.size(), m.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis.at(k, f) = 1;
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
      basis.at(k, rr.pivot_cols[i]) = -rr.r.at(i, f);
  }
  return basis;
}

std::optional<MatQ> solve(const MatQ& a, const MatQ& b) {
  assert(a.rows() == b.rows());
  MatQ aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  Rref rr = rref(std::move(aug));
  // a pivot in the augmented block means the system is inconsistent
  for (auto c : rr.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  MatQ x(a.cols(), b.cols());
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(rr.pivot_cols[i], j) = rr.r.at(i, a.cols() + j);
  return x;
}

MatQ left_nullspace(const MatQ& a) { return nullspace(a.transpose()); }

QuotientSpace::QuotientSpace(std::size_t ambient_dim, const std::vector<RatVec>& relations)
    : ambient_(ambient_dim) {
  Rref rr = rref(MatQ::from_rows(relations, ambient_dim));
  rel_ = rr.r;

  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  // project: reduce v by the relation rows, then read off free coordinates
  proj_ = MatQ(free_cols.size(), ambient_dim);
  for (std::size_t k = 0; k < free_cols.size(); ++k) proj_.at(k, free_cols[k]) = 1;
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      proj_.at(k, rr.pivot_cols[i]) = -rel_.at(i, free_cols[k]);

  sect_ = MatQ(ambient_dim, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) sect_.at(free_cols[k], k) = 1;
}

} // namespace lieper
