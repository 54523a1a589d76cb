#pragma once

#include "lieper/hnf.hpp"
#include "lieper/matq.hpp"
#include "lieper/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieper {

// Vector in R^n written over a finite list of real constants that are assumed
// algebraically independent (the list always contains "1" in slot 0):
//   v[i] = sum_j coeffs(i,j) * constant_j,  coeffs rational.
struct SymbolicVector {
  MatQ coeffs; // ambient_dim x n_constants
};

// Finitely generated subgroup of R^n presented by symbolic generators.
class GeneratedSubgroup {
public:
  GeneratedSubgroup(std::vector<std::string> constants, std::vector<SymbolicVector> generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t n_constants() const { return constants_.size(); }
  const std::vector<std::string>& constants() const { return constants_; }
  const std::vector<SymbolicVector>& generators() const { return generators_; }

  // numeric values for the constants (slot 0 must be 1); enables numeric mode
  void set_values(std::vector<double> values);
  const std::optional<std::vector<double>>& values() const { return values_; }

  std::vector<double> numeric_generator(std::size_t i) const;

private:
  std::size_t ambient_;
  std::vector<std::string> constants_;
  std::vector<SymbolicVector> generators_;
  std::optional<std::vector<double>> values_;
};

struct ZRankResult {
  std::size_t rank;
  MatZ relation_basis; // rows: integer relations among the generators (saturated)
};

// Rank of the subgroup as an abstract group (= dim of the Q-span of the
// generators over the constant coordinates). Exact.
ZRankResult z_rank(const GeneratedSubgroup& g);

// Dimension of the real span of the generators, assuming the constants are
// algebraically independent. Exact via polynomial-rank elimination.
std::size_t span_rank(const GeneratedSubgroup& g);

enum class Verdict { discrete, not_discrete, likely_discrete, likely_not_discrete };

std::string verdict_str(Verdict v);

struct DiscretenessResult {
  Verdict verdict;
  std::size_t z_rank = 0;
  std::size_t span_rank = 0;
  // discrete: lattice basis rows (same symbolic encoding as the generators)
  std::vector<SymbolicVector> lattice_basis;
  // discrete: each generator as an exact Z-combination of the basis rows
  std::vector<std::vector<Int>> generator_coords;
  // not discrete: indices of a Z-independent generator subset whose real span
  // is too small, plus (numeric mode) group elements accumulating at 0
  std::vector<std::size_t> witness_indices;
  std::vector<std::vector<double>> accumulation_points;
};

// Discreteness of the subgroup: discrete iff z_rank == span_rank. Exact mode
// proves the verdict; numeric mode (values set) uses LLL relation detection
// and returns a "likely_*" verdict.
DiscretenessResult is_discrete(const GeneratedSubgroup& g, bool numeric = false);

// Push the group through an exact linear map (quotient projections etc.).
GeneratedSubgroup image_under_projection(const GeneratedSubgroup& g, const MatQ& p);

// The circle-bundle example over the 2-torus: period group Z + Z*c inside R.
// Rational c: exact verdict. Symbolic c: constants {"1", name}.
GeneratedSubgroup torus_period_group(const Rat& c);
GeneratedSubgroup torus_period_group_symbolic(const std::string& name);

// Composite-Simpson mean of h over [0,1] from uniform samples (N+1 values,
// N even), for the sampled variant of the torus example.
double simpson_mean(const std::vector<double>& samples);

// LLL-reduce an integer lattice basis (rows). Lovasz parameter 0.99, exact
// rational Gram-Schmidt. Used by the numeric relation search; exposed for
// tests.
MatZ lll_reduce(MatZ basis, const Rat& delta = Rat(99, 100));

} // namespace lieper
