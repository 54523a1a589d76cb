#pragma once

#include "lieper/matq.hpp"
#include "lieper/rational.hpp"

#include <string>
#include <vector>

namespace lieper {

// Linear maps between coordinate spaces are plain rational matrices,
// (target_dim x source_dim), acting on column vectors.
using LinearMap = MatQ;

// Finite-dimensional Lie algebra over Q given by structure constants:
// [e_i, e_j] = sum_k c(i,j,k) e_k. Antisymmetry and the Jacobi identity are
// validated eagerly on construction.
class LieAlgebra {
public:
  LieAlgebra(std::size_t dim, std::vector<std::string> basis_names,
             std::vector<Rat> structure /* flat n*n*n, (i*n+j)*n+k */);

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }

  // ad(e_i) as a matrix: column a holds [e_i, e_a].
  MatQ ad_basis(std::size_t i) const;
  MatQ ad(const RatVec& x) const;

  bool is_abelian() const;

private:
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<Rat> c_;
};

// [x, y] in coordinates.
RatVec bracket(const LieAlgebra& g, const RatVec& x, const RatVec& y);

// Symmetric bilinear form with values in Q^value_dim, stored on basis pairs.
class SymBilinearForm {
public:
  SymBilinearForm(std::size_t n, std::size_t value_dim);

  std::size_t n() const { return n_; }
  std::size_t value_dim() const { return d_; }

  const RatVec& at(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const RatVec& val); // sets (i,j) and (j,i)

  RatVec eval(const RatVec& x, const RatVec& y) const;

  SymBilinearForm scaled(const Rat& c) const;

private:
  std::size_t n_, d_;
  std::vector<RatVec> v_;
};

// Killing form beta(x,y) = tr(ad x ad y), value_dim 1.
SymBilinearForm killing_form(const LieAlgebra& g);

// kappa([x,y],z) == kappa(x,[y,z]) over all basis triples, exactly.
bool is_invariant(const LieAlgebra& g, const SymBilinearForm& kappa);

// Leibniz rule D[x,y] == [Dx,y] + [x,Dy] over all basis pairs, exactly.
bool is_derivation(const LieAlgebra& g, const LinearMap& d);

// kappa(Dx,y) + kappa(x,Dy) == 0 over all basis pairs, exactly.
bool is_kappa_skew(const LieAlgebra& g, const SymBilinearForm& kappa, const LinearMap& d);

// Basis (rows) of the solvable radical, computed as the Killing-orthogonal
// complement of the derived subalgebra (Cartan's criterion).
MatQ radical(const LieAlgebra& g);

// Basis (rows) of the derived subalgebra [g, g].
MatQ derived_subalgebra(const LieAlgebra& g);

// phi[x,y] == [phi x, phi y] on basis pairs and phi invertible.
bool is_automorphism(const LieAlgebra& g, const LinearMap& phi);

namespace algebras {

// su(2) with quaternion basis I, J, K: [I,J]=2K, [J,K]=2I, [K,I]=2J.
LieAlgebra su2();

// gl(2,R) with the matrix-unit basis E11, E12, E21, E22.
LieAlgebra gl2();

// Abelian R^n.
LieAlgebra abelian(std::size_t n);

// sl(2,C) viewed as a real 6-dimensional algebra: basis I,J,K,iI,iJ,iK
// (the complexification of su(2), which is sl(2,C) as a real algebra).
LieAlgebra sl2c_real();

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// Structure constants of a Lie algebra of matrices spanned by the given
// (linearly independent) square matrices, brackets via matrix commutators.
LieAlgebra from_matrices(const std::vector<MatQ>& basis, std::vector<std::string> names);

} // namespace algebras

} // namespace lieper
