#pragma once

#include "lieper/matq.hpp"

#include <random>
#include <string>
#include <vector>

namespace lieper {

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

struct ReproduceOptions {
  std::vector<std::string> only; // ids or names; empty runs everything
  bool parallel = true;
};

// the full acceptance battery, one result per criterion
std::vector<CriterionResult> run_acceptance(const ReproduceOptions& opt);

// deterministic rational matrix generators for the randomized criteria
MatQ random_unimodular(std::mt19937_64& rng, std::size_t dim, int ops = 12);
// conjugated block-diagonal of reflections, quarter turns, swaps and
// permutation cycles: finite multiplicative order by construction
MatQ random_finite_order_matrix(std::mt19937_64& rng, std::size_t dim);

} // namespace lieper
