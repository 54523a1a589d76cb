#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieper/errors.hpp"
#include "lieper/lattice.hpp"

#include <cmath>

using namespace lieper;

namespace {

SymbolicVector rational_vec(const std::vector<std::string>& entries, std::size_t n_constants) {
  SymbolicVector v;
  v.coeffs = MatQ(entries.size(), n_constants);
  for (std::size_t i = 0; i < entries.size(); ++i) v.coeffs.at(i, 0) = parse_rat(entries[i]);
  return v;
}

// generator c_j * e_a for a named constant slot
SymbolicVector constant_slot_vec(std::size_t dim, std::size_t coord, std::size_t slot,
                                 std::size_t n_constants) {
  SymbolicVector v;
  v.coeffs = MatQ(dim, n_constants);
  v.coeffs.at(coord, slot) = 1;
  return v;
}

} // namespace

TEST_CASE("integer relations among rational generators") {
  // generators 1 and 1/2 of a subgroup of R: relation (1,-2), rank 1
  GeneratedSubgroup g({"1"}, {rational_vec({"1"}, 1), rational_vec({"1/2"}, 1)});
  ZRankResult z = z_rank(g);
  CHECK(z.rank == 1);
  REQUIRE(z.relation_basis.rows() == 1);
  Int a = z.relation_basis.at(0, 0), b = z.relation_basis.at(0, 1);
  // the relation row is +-(1,-2): one of g0 equals two of g1
  CHECK(2 * a + b == 0);
  CHECK(a != 0);
  CHECK(span_rank(g) == 1);
}

TEST_CASE("the rational torus slope gives a discrete period group") {
  GeneratedSubgroup g = torus_period_group(Rat(3, 7));
  DiscretenessResult r = is_discrete(g);
  CHECK(r.verdict == Verdict::discrete);
  CHECK(r.z_rank == 1);
  CHECK(r.span_rank == 1);
  REQUIRE(r.lattice_basis.size() == 1);
  CHECK(r.lattice_basis[0].coeffs.at(0, 0) == Rat(1, 7));
  REQUIRE(r.generator_coords.size() == 2);
  // 1 = 7 * (1/7), 3/7 = 3 * (1/7)
  CHECK(r.generator_coords[0][0] == 7);
  CHECK(r.generator_coords[1][0] == 3);
}

TEST_CASE("a symbolic irrational slope is certified non-discrete") {
  GeneratedSubgroup g = torus_period_group_symbolic("alpha");
  DiscretenessResult r = is_discrete(g);
  CHECK(r.verdict == Verdict::not_discrete);
  CHECK(r.z_rank == 2);
  CHECK(r.span_rank == 1);
  REQUIRE(r.witness_indices.size() == 2);
  CHECK(r.lattice_basis.empty());
}

TEST_CASE("discreteness in the plane with symbolic constants") {
  // generators (1,0), (alpha,0), (0,1): dense line times discrete line
  std::vector<SymbolicVector> gens = {constant_slot_vec(2, 0, 0, 2), constant_slot_vec(2, 0, 1, 2),
                                      constant_slot_vec(2, 1, 0, 2)};
  GeneratedSubgroup g({"1", "alpha"}, gens);
  DiscretenessResult r = is_discrete(g);
  CHECK(r.verdict == Verdict::not_discrete);
  CHECK(r.z_rank == 3);
  CHECK(r.span_rank == 2);

  // without the alpha generator everything is discrete
  GeneratedSubgroup g2({"1", "alpha"}, {constant_slot_vec(2, 0, 0, 2), constant_slot_vec(2, 1, 0, 2)});
  DiscretenessResult r2 = is_discrete(g2);
  CHECK(r2.verdict == Verdict::discrete);
  CHECK(r2.lattice_basis.size() == 2);
}

TEST_CASE("numeric mode recognizes exact rational data as likely discrete") {
  GeneratedSubgroup g({"1"}, {rational_vec({"1"}, 1), rational_vec({"1/2"}, 1)});
  g.set_values({1.0});
  DiscretenessResult r = is_discrete(g, true);
  CHECK(r.verdict == Verdict::likely_discrete);
  CHECK(r.z_rank == 1);
  CHECK(r.span_rank == 1);
}

TEST_CASE("numeric mode flags badly approximable irrationals") {
  // 1 and the golden ratio: relation coefficients would need to exceed the
  // acceptance bound, so the estimated group rank stays 2 on a 1-dim span
  GeneratedSubgroup g({"1", "phi"},
                      {constant_slot_vec(1, 0, 0, 2), constant_slot_vec(1, 0, 1, 2)});
  g.set_values({1.0, 1.6180339887498949});
  DiscretenessResult r = is_discrete(g, true);
  CHECK(r.verdict == Verdict::likely_not_discrete);
  CHECK(r.z_rank == 2);
  CHECK(r.span_rank == 1);
  // the demonstration elements are nonzero and tiny
  REQUIRE_FALSE(r.accumulation_points.empty());
  for (const auto& p : r.accumulation_points) {
    REQUIRE(p.size() == 1);
    CHECK(std::fabs(p[0]) > 0.0);
    CHECK(std::fabs(p[0]) <= 1e-6);
  }
}

TEST_CASE("numeric mode flags sqrt2 against 1") {
  GeneratedSubgroup g({"1", "r2"},
                      {constant_slot_vec(1, 0, 0, 2), constant_slot_vec(1, 0, 1, 2)});
  g.set_values({1.0, std::sqrt(2.0)});
  DiscretenessResult r = is_discrete(g, true);
  CHECK(r.verdict == Verdict::likely_not_discrete);
}

TEST_CASE("numeric mode without values is a usage error") {
  GeneratedSubgroup g({"1"}, {rational_vec({"1"}, 1)});
  try {
    is_discrete(g, true);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.code() == "bad_input");
  }
}

TEST_CASE("projection images stay analyzable") {
  // project the plane group (1,0),(0,1),(1/3,1/3) onto the first coordinate
  std::vector<SymbolicVector> gens = {rational_vec({"1", "0"}, 1), rational_vec({"0", "1"}, 1),
                                      rational_vec({"1/3", "1/3"}, 1)};
  GeneratedSubgroup g({"1"}, gens);
  MatQ p(1, 2);
  p.at(0, 0) = 1;
  GeneratedSubgroup img = image_under_projection(g, p);
  CHECK(img.ambient_dim() == 1);
  DiscretenessResult r = is_discrete(img);
  CHECK(r.verdict == Verdict::discrete);
  REQUIRE(r.lattice_basis.size() == 1);
  CHECK(r.lattice_basis[0].coeffs.at(0, 0) == Rat(1, 3));
}

TEST_CASE("averaging a cyclic permutation yields a discrete diagonal image") {
  // the 3-cycle fixes the diagonal; averaging projects e1 to (1/3,1/3,1/3)
  MatQ avg(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) avg.at(i, j) = Rat(1, 3);
  GeneratedSubgroup g({"1"},
                      {rational_vec({"1", "0", "0"}, 1), rational_vec({"0", "1", "0"}, 1)});
  GeneratedSubgroup img = image_under_projection(g, avg);
  DiscretenessResult r = is_discrete(img);
  CHECK(r.verdict == Verdict::discrete);
  CHECK(r.z_rank == 1);
  REQUIRE(r.lattice_basis.size() == 1);
  for (std::size_t a = 0; a < 3; ++a) CHECK(r.lattice_basis[0].coeffs.at(a, 0) == Rat(1, 3));
}

TEST_CASE("simpson mean integrates low degree polynomials exactly") {
  // constant
  std::vector<double> c(65, 0.42);
  CHECK(simpson_mean(c) == doctest::Approx(0.42).epsilon(1e-15));
  // quadratic 1/5 + 3/5 t(1-t): mean 3/10, simpson exact on quadratics
  std::vector<double> q(65);
  for (int i = 0; i <= 64; ++i) {
    double t = i / 64.0;
    q[i] = 0.2 + 0.6 * t * (1.0 - t);
  }
  CHECK(simpson_mean(q) == doctest::Approx(0.3).epsilon(1e-14));
  // an even sample count (odd length) is required
  std::vector<double> bad(4, 1.0);
  CHECK_THROWS_AS(simpson_mean(bad), DomainError);
}

TEST_CASE("torus verdicts for sampled slopes follow the computed mean") {
  std::vector<double> q(65);
  for (int i = 0; i <= 64; ++i) {
    double t = i / 64.0;
    q[i] = 0.2 + 0.6 * t * (1.0 - t);
  }
  double mean = simpson_mean(q);
  GeneratedSubgroup g = torus_period_group_symbolic("h");
  g.set_values({1.0, mean});
  DiscretenessResult r = is_discrete(g, true);
  CHECK(r.verdict == Verdict::likely_discrete);
}
