#pragma once

#include "lieper/lie.hpp"

#include <variant>
#include <vector>

namespace lieper {

// Alternating p-cochain on g with values in Q^d and trivial action on values.
// Stored on strictly increasing index tuples; access with general indices
// resolves the permutation sign. Degrees 1..4 (degree 4 only arises as the
// differential of a 3-cochain).
class Cochain {
public:
  Cochain(std::size_t degree, std::size_t n, std::size_t value_dim);

  std::size_t degree() const { return p_; }
  std::size_t n() const { return n_; }
  std::size_t value_dim() const { return d_; }
  std::size_t slots() const { return store_.size(); }

  // idx strictly increasing
  RatVec& at_sorted(const std::vector<std::size_t>& idx);
  const RatVec& at_sorted(const std::vector<std::size_t>& idx) const;

  // general indices; zero on repeated indices
  RatVec get(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;

  // enumerate strictly increasing tuples in lexicographic order
  static std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t p);

private:
  std::size_t index_of(const std::vector<std::size_t>& idx) const;

  std::size_t p_, n_, d_;
  std::vector<RatVec> store_;
  std::vector<std::size_t> strides_; // combinatorial number system helpers
};

// Chevalley-Eilenberg differential for trivial coefficients:
// (dc)(x_0..x_p) = sum_{i<j} (-1)^{i+j} c([x_i,x_j], x_0..^i..^j..x_p).
// Input degree <= 3; throws DomainError(degree_overflow) otherwise.
Cochain ce_differential(const LieAlgebra& g, const Cochain& c);

// Cartan 3-cocycle C(kappa)(x,y,z) = kappa([x,y],z) for invariant kappa.
// Checks invariance, alternation and closedness exactly.
Cochain cartan_map(const LieAlgebra& g, const SymBilinearForm& kappa);

// Certificate that a closed cochain is NOT a differential: a functional u on
// the target slot space with u^T d = 0 but u^T c != 0 (value column `column`).
struct NotExactWitness {
  RatVec functional;
  std::size_t column = 0;
};

// Solve d(eta) = c for a 2-cochain eta, exactly. Either a witness 2-cochain
// or a certified NotExact verdict.
std::variant<Cochain, NotExactWitness> solve_exactness(const LieAlgebra& g, const Cochain& c3);

// Solve d(lambda) = omega for a 1-cochain lambda. Precondition: omega closed
// (checked; DomainError(not_closed) otherwise).
std::variant<Cochain, NotExactWitness> is_coboundary2(const LieAlgebra& g, const Cochain& omega);

// eta_D(x,y) = kappa(x, D y) for a kappa-skew derivation D. Checks the
// derivation and skewness preconditions and asserts closedness exactly.
Cochain eta_d(const LieAlgebra& g, const SymBilinearForm& kappa, const LinearMap& d);

// 1-cochain x |-> kappa(x0, x); d of it equals eta_{ad(x0)} with the sign
// convention (d lambda)(x,y) = -lambda([x,y]).
Cochain kappa_slice_1cochain(const LieAlgebra& g, const SymBilinearForm& kappa, const RatVec& x0);

} // namespace lieper
