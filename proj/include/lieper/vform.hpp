#pragma once

#include "lieper/lie.hpp"
#include "lieper/matq.hpp"

#include <vector>

namespace lieper {

// Coordinates on the symmetric square S^2(g): basis { e_i v e_j : i <= j },
// lexicographic. sym_index(i,j) expects i <= j.
std::size_t sym_dim(std::size_t n);
std::size_t sym_index(std::size_t n, std::size_t i, std::size_t j);

// Coordinates of x v y in the S^2 basis.
RatVec sym_coords(std::size_t n, const RatVec& x, const RatVec& y);

// The universal invariant symmetric bilinear form: V = S^2(g) / g.S^2(g),
// kappa_u(x,y) = class of x v y. Every invariant symmetric form with values
// in a vector space factors through kappa_u uniquely.
class UniversalForm {
public:
  explicit UniversalForm(const LieAlgebra& g);

  const LieAlgebra& algebra() const { return g_; }
  const QuotientSpace& quotient() const { return q_; }
  std::size_t dim() const { return q_.dim(); } // dim V

  // kappa_u as a SymBilinearForm with value_dim = dim V.
  const SymBilinearForm& kappa_u() const { return ku_; }

  RatVec pair(const RatVec& x, const RatVec& y) const; // kappa_u(x,y)

  // Action of e_k on S^2 coordinates: x.(y v z) = [x,y] v z + y v [x,z].
  MatQ action_matrix(std::size_t k) const;

private:
  LieAlgebra g_;
  QuotientSpace q_;
  SymBilinearForm ku_;
};

// Unique linear phi : V -> Q^d with phi . kappa_u = beta, for invariant beta.
// Throws DomainError(not_invariant) when beta is not invariant.
LinearMap factor_through(const UniversalForm& u, const SymBilinearForm& beta);

// Basis of the centroid { phi : [phi, ad x] = 0 for all x }, one matrix per
// entry.
std::vector<MatQ> centroid(const LieAlgebra& g);

enum class MorphismKind { automorphism, derivation };

// Induced map V(phi) on the universal-form quotient. For an automorphism this
// is the functorial map; for a derivation it is the infinitesimal action
// (zero for inner derivations). Throws DomainError(not_morphism) when phi is
// not of the stated kind, and asserts the quotient is genuinely preserved.
MatQ induced_map_on_v(const UniversalForm& u, const LinearMap& phi, MorphismKind kind);

struct DecompositionReport {
  std::vector<std::size_t> dims; // dim V_0 (radical part), then one per isotypic block
  bool direct = false;           // sum inside V is direct
  bool exhaustive = false;       // pieces span all of V
};

// Checks the direct-sum decomposition of V induced by a radical complement
// split: V_0 = kappa_u(radical, g), V_i = kappa_u(s_i, s_i). Inputs are bases
// (rows); they must be complementary subspaces that together span g.
DecompositionReport verify_decomposition(const UniversalForm& u, const MatQ& radical_basis,
                                         const std::vector<MatQ>& isotypic_bases);

} // namespace lieper
