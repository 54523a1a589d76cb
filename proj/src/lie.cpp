#include "lieper/lie.hpp"

#include "lieper/errors.hpp"

#include <cassert>

namespace lieper {

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names,
                       std::vector<Rat> structure)
    : n_(dim), names_(std::move(basis_names)), c_(std::move(structure)) {
  if (names_.empty()) {
    names_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) names_[i] = "e" + std::to_string(i);
  }
  if (names_.size() != n_ || c_.size() != n_ * n_ * n_)
    throw DomainError("bad_input", "structure tensor size mismatch");

  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (c(i, j, k) != -c(j, i, k))
          throw DomainError("bad_input", "structure constants not antisymmetric");

  // Jacobi: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k)
        for (std::size_t m = 0; m < n_; ++m) {
          Rat s(0);
          for (std::size_t a = 0; a < n_; ++a)
            s += c(j, k, a) * c(i, a, m) + c(k, i, a) * c(j, a, m) + c(i, j, a) * c(k, a, m);
          if (s != 0) throw DomainError("bad_input", "Jacobi identity fails");
        }
}

MatQ LieAlgebra::ad_basis(std::size_t i) const {
  MatQ m(n_, n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t k = 0; k < n_; ++k) m.at(k, a) = c(i, a, k);
  return m;
}

MatQ LieAlgebra::ad(const RatVec& x) const {
  assert(x.size() == n_);
  MatQ m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t k = 0; k < n_; ++k) m.at(k, a) += x[i] * c(i, a, k);
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

RatVec bracket(const LieAlgebra& g, const RatVec& x, const RatVec& y) {
  assert(x.size() == g.dim() && y.size() == g.dim());
  RatVec out(g.dim(), Rat(0));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (y[j] == 0) continue;
      Rat f = x[i] * y[j];
      for (std::size_t k = 0; k < g.dim(); ++k) out[k] += f * g.c(i, j, k);
    }
  }
  return out;
}

SymBilinearForm::SymBilinearForm(std::size_t n, std::size_t value_dim)
    : n_(n), d_(value_dim), v_(n * n, rv_zero(value_dim)) {}

void SymBilinearForm::set(std::size_t i, std::size_t j, const RatVec& val) {
  assert(val.size() == d_);
  v_[i * n_ + j] = val;
  v_[j * n_ + i] = val;
}

RatVec SymBilinearForm::eval(const RatVec& x, const RatVec& y) const {
  assert(x.size() == n_ && y.size() == n_);
  RatVec out = rv_zero(d_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      rv_axpy(out, x[i] * y[j], at(i, j));
    }
  }
  return out;
}

SymBilinearForm SymBilinearForm::scaled(const Rat& c) const {
  SymBilinearForm out(n_, d_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      RatVec v = at(i, j);
      for (auto& e : v) e *= c;
      out.v_[i * n_ + j] = v;
    }
  return out;
}

SymBilinearForm killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  SymBilinearForm beta(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      // tr(ad e_i ad e_j) without forming the product matrices
      Rat s(0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a) s += g.c(i, a, k) * g.c(j, k, a);
      beta.set(i, j, RatVec{s});
    }
  return beta;
}

bool is_invariant(const LieAlgebra& g, const SymBilinearForm& kappa) {
  const std::size_t n = g.dim();
  assert(kappa.n() == n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        RatVec lhs = rv_zero(kappa.value_dim());
        RatVec rhs = rv_zero(kappa.value_dim());
        for (std::size_t a = 0; a < n; ++a) {
          rv_axpy(lhs, g.c(i, j, a), kappa.at(a, k));
          rv_axpy(rhs, g.c(j, k, a), kappa.at(i, a));
        }
        for (std::size_t t = 0; t < kappa.value_dim(); ++t)
          if (lhs[t] != rhs[t]) return false;
      }
  return true;
}

bool is_derivation(const LieAlgebra& g, const LinearMap& d) {
  const std::size_t n = g.dim();
  assert(d.rows() == n && d.cols() == n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVec bij(n);
      for (std::size_t k = 0; k < n; ++k) bij[k] = g.c(i, j, k);
      RatVec l = d.apply(bij);
      RatVec di(n), dj(n);
      for (std::size_t k = 0; k < n; ++k) {
        di[k] = d.at(k, i);
        dj[k] = d.at(k, j);
      }
      RatVec ei(n, Rat(0)), ej(n, Rat(0));
      ei[i] = 1;
      ej[j] = 1;
      RatVec r1 = bracket(g, di, ej);
      RatVec r2 = bracket(g, ei, dj);
      for (std::size_t k = 0; k < n; ++k)
        if (l[k] != r1[k] + r2[k]) return false;
    }
  return true;
}

bool is_kappa_skew(const LieAlgebra& g, const SymBilinearForm& kappa, const LinearMap& d) {
  const std::size_t n = g.dim();
  assert(kappa.n() == n && d.rows() == n && d.cols() == n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RatVec s = rv_zero(kappa.value_dim());
      for (std::size_t a = 0; a < n; ++a) {
        rv_axpy(s, d.at(a, i), kappa.at(a, j)); // kappa(D e_i, e_j)
        rv_axpy(s, d.at(a, j), kappa.at(i, a)); // kappa(e_i, D e_j)
      }
      if (!rv_is_zero(s)) return false;
    }
  return true;
}

MatQ derived_subalgebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = g.c(i, j, k);
      if (!rv_is_zero(v)) gens.push_back(v);
    }
  if (gens.empty()) return MatQ(0, n);
  return rref(MatQ::from_rows(gens, n)).r;
}

MatQ radical(const LieAlgebra& g) {
  MatQ der = derived_subalgebra(g);
  SymBilinearForm beta = killing_form(g);
  const std::size_t n = g.dim();
  // rows: beta(d_r, .) for each derived-subalgebra basis vector d_r
  MatQ sys(der.rows(), n);
  for (std::size_t r = 0; r < der.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      Rat s(0);
      for (std::size_t i = 0; i < n; ++i)
        if (der.at(r, i) != 0) s += der.at(r, i) * beta.at(i, j)[0];
      sys.at(r, j) = s;
    }
  return nullspace(sys);
}

bool is_automorphism(const LieAlgebra& g, const LinearMap& phi) {
  const std::size_t n = g.dim();
  if (phi.rows() != n || phi.cols() != n) return false;
  if (rank(phi) != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVec bij(n);
      for (std::size_t k = 0; k < n; ++k) bij[k] = g.c(i, j, k);
      RatVec lhs = phi.apply(bij);
      RatVec pi(n), pj(n);
      for (std::size_t k = 0; k < n; ++k) {
        pi[k] = phi.at(k, i);
        pj[k] = phi.at(k, j);
      }
      RatVec rhs = bracket(g, pi, pj);
      if (lhs != rhs) return false;
    }
  return true;
}

namespace algebras {

namespace {

std::vector<Rat> zero_tensor(std::size_t n) { return std::vector<Rat>(n * n * n, Rat(0)); }

void set_c(std::vector<Rat>& c, std::size_t n, std::size_t i, std::size_t j, std::size_t k,
           const Rat& v) {
  c[(i * n + j) * n + k] = v;
  c[(j * n + i) * n + k] = -v;
}

} // namespace

LieAlgebra su2() {
  auto c = zero_tensor(3);
  set_c(c, 3, 0, 1, 2, Rat(2));  // [I,J] = 2K
  set_c(c, 3, 1, 2, 0, Rat(2));  // [J,K] = 2I
  set_c(c, 3, 2, 0, 1, Rat(2));  // [K,I] = 2J
  return LieAlgebra(3, {"I", "J", "K"}, std::move(c));
}

LieAlgebra gl2() {
  // matrix units as 2x2 rational matrices, brackets by commutator
  std::vector<MatQ> basis;
  std::vector<std::string> names = {"E11", "E12", "E21", "E22"};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      MatQ e(2, 2);
      e.at(a, b) = 1;
      basis.push_back(e);
    }
  return from_matrices(basis, names);
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra(n, {}, zero_tensor(n)); }

LieAlgebra sl2c_real() {
  // complexification of su(2): indices 0..2 are I,J,K; 3..5 are iI,iJ,iK.
  // [x, y] as in su2, [x, iy] = i[x,y], [ix, iy] = -[x,y].
  LieAlgebra s = su2();
  const std::size_t n = 6;
  auto c = zero_tensor(n);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        const Rat& v = s.c(i, j, k);
        if (v == 0) continue;
        c[(i * n + j) * n + k] = v;
        c[((i + 3) * n + j) * n + (k + 3)] = v;
        c[(i * n + (j + 3)) * n + (k + 3)] = v;
        c[((i + 3) * n + (j + 3)) * n + k] = -v;
      }
  return LieAlgebra(n, {"I", "J", "K", "iI", "iJ", "iK"}, std::move(c));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  auto c = zero_tensor(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) c[(i * n + j) * n + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        c[((i + a.dim()) * n + (j + a.dim())) * n + (k + a.dim())] = b.c(i, j, k);
  std::vector<std::string> names;
  for (const auto& s : a.basis_names()) names.push_back(s + ".l");
  for (const auto& s : b.basis_names()) names.push_back(s + ".r");
  return LieAlgebra(n, std::move(names), std::move(c));
}

LieAlgebra from_matrices(const std::vector<MatQ>& basis, std::vector<std::string> names) {
  const std::size_t n = basis.size();
  if (n == 0) throw DomainError("bad_input", "empty matrix basis");
  const std::size_t rows = basis[0].rows(), cols = basis[0].cols();
  // flatten to solve [b_i, b_j] = sum_k c_ijk b_k exactly
  MatQ span(rows * cols, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t s = 0; s < cols; ++s) span.at(r * cols + s, k) = basis[k].at(r, s);
  if (rank(span) != n) throw DomainError("bad_input", "matrix basis not independent");

  auto c = zero_tensor(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MatQ comm = basis[i] * basis[j] - basis[j] * basis[i];
      MatQ rhs(rows * cols, 1);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t s = 0; s < cols; ++s) rhs.at(r * cols + s, 0) = comm.at(r, s);
      auto sol = solve(span, rhs);
      if (!sol) throw DomainError("bad_input", "commutator leaves the span");
      for (std::size_t k = 0; k < n; ++k) set_c(c, n, i, j, k, sol->at(k, 0));
    }
  return LieAlgebra(n, std::move(names), std::move(c));
}

} // namespace algebras

} // namespace lieper
