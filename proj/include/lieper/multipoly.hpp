#pragma once

#include "lieper/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace lieper {

// Sparse multivariate polynomial over Q. Just enough arithmetic to run
// fraction-free elimination on matrices whose entries are linear forms in a
// handful of algebraically independent constants: +, -, *, exact division and
// a zero test. Monomials are exponent vectors under lexicographic order.
class MultiPoly {
public:
  using Mono = std::vector<unsigned>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(std::size_t nvars, const Rat& c);
  static MultiPoly variable(std::size_t nvars, std::size_t idx);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;

  // Exact division: requires o | *this (guaranteed at Bareiss call sites).
  // Throws DomainError(bad_input) if the division leaves a remainder.
  MultiPoly divide_exact(const MultiPoly& o) const;

  void add_term(const Mono& m, const Rat& c);

  const std::map<Mono, Rat>& terms() const { return terms_; }

private:
  std::size_t nvars_;
  std::map<Mono, Rat> terms_; // monomial -> nonzero coefficient
};

// Rank of a matrix of polynomials over the fraction field Q(x_1..x_k),
// computed by fraction-free Bareiss elimination with full pivoting. For
// entries linear in algebraically independent real constants this equals the
// rank of the real matrix obtained by substituting the constants.
std::size_t poly_rank(std::vector<std::vector<MultiPoly>> m);

} // namespace lieper
