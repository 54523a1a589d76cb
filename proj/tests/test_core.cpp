#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieper/errors.hpp"
#include "lieper/hnf.hpp"
#include "lieper/lattice.hpp"
#include "lieper/matq.hpp"
#include "lieper/multipoly.hpp"
#include "lieper/rational.hpp"

using namespace lieper;

TEST_CASE("rational parsing round trips") {
  CHECK(parse_rat("3/7") == Rat(3, 7));
  CHECK(parse_rat("-5") == Rat(-5));
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK(rat_str(Rat(3, 7)) == "3/7");
  CHECK(rat_str(Rat(-8, 2)) == "-4");
  CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rat("a/b"), DomainError);
  CHECK_THROWS_AS(parse_rat(""), DomainError);
}

TEST_CASE("rref ranks and nullspaces") {
  MatQ m(3, 4);
  // rows: (1,2,3,4), (2,4,6,8), (0,0,1,1) -> rank 2
  int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = vals[i][j];
  CHECK(rank(m) == 2);

  MatQ ns = nullspace(m);
  CHECK(ns.rows() == 2);
  for (std::size_t r = 0; r < ns.rows(); ++r) {
    RatVec x = ns.row(r);
    RatVec y = m.apply(x);
    CHECK(rv_is_zero(y));
  }

  MatQ ln = left_nullspace(m);
  CHECK(ln.rows() == 1);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += ln.at(0, i) * m.at(i, j);
    CHECK(s == 0);
  }
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
  MatQ a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = 1;
  MatQ b(2, 1);
  b.at(0, 0) = 5;
  b.at(1, 0) = 3;
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(x->at(0, 0) == 2);
  CHECK(x->at(1, 0) == 1);

  MatQ sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 1;
  sing.at(1, 0) = 1;
  sing.at(1, 1) = 1;
  MatQ rhs(2, 1);
  rhs.at(0, 0) = 0;
  rhs.at(1, 0) = 1;
  CHECK_FALSE(solve(sing, rhs).has_value());
}

TEST_CASE("quotient space projection and section are mutually inverse") {
  // kill span{(1,1,0), (0,0,2)} inside Q^3: quotient dim 1
  std::vector<RatVec> rel = {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(2)}};
  QuotientSpace q(3, rel);
  CHECK(q.dim() == 1);
  CHECK(q.relation_rank() == 2);

  // projection kills the relations
  for (const auto& r : rel) CHECK(rv_is_zero(q.project(r)));

  // projection . section = identity on the quotient
  RatVec unit{Rat(1)};
  CHECK(q.project(q.lift(unit)) == unit);

  // representatives differing by a relation agree
  RatVec v1{Rat(5), Rat(2), Rat(7)};
  RatVec v2{Rat(6), Rat(3), Rat(9)}; // v1 + (1,1,0) + (0,0,2)
  CHECK(q.project(v1) == q.project(v2));
}

TEST_CASE("hermite form solves membership in the row lattice") {
  MatZ a(3, 2);
  // rows (2,0), (0,3), (2,3): the lattice 2Z x 3Z with a dependent third row
  a.at(0, 0) = 2;
  a.at(1, 1) = 3;
  a.at(2, 0) = 2;
  a.at(2, 1) = 3;
  HnfResult h = hnf(a);
  CHECK(h.rank == 2);
  auto in = [&](long x, long y) {
    return solve_in_hnf(h, std::vector<Int>{Int(x), Int(y)}).has_value();
  };
  CHECK(in(2, 0));
  CHECK(in(0, 3));
  CHECK(in(2, 3));
  CHECK(in(-4, 9));
  CHECK_FALSE(in(1, 1));
  CHECK_FALSE(in(2, 1));
  // u*a = h holds
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += h.u.at(i, k) * a.at(k, j);
      CHECK(s == h.h.at(i, j));
    }
}

TEST_CASE("left kernel over Z is saturated") {
  MatZ a(3, 1);
  a.at(0, 0) = 2;
  a.at(1, 0) = 4;
  a.at(2, 0) = 6;
  MatZ k = left_kernel_z(a);
  CHECK(k.rows() == 2);
  // (2,-1,0) and (3,0,-1) style relations must be reachable over Z: probe
  // saturation through HNF membership of the known primitive relations
  HnfResult h = hnf(k);
  CHECK(solve_in_hnf(h, {Int(2), Int(-1), Int(0)}).has_value());
  CHECK(solve_in_hnf(h, {Int(3), Int(0), Int(-1)}).has_value());
  CHECK(solve_in_hnf(h, {Int(0), Int(3), Int(-2)}).has_value());
  CHECK_FALSE(solve_in_hnf(h, {Int(1), Int(0), Int(0)}).has_value());
}

TEST_CASE("polynomial rank sees algebraic independence") {
  // [[1, x], [x, x^2]] has rank 1 over Q(x)
  MultiPoly one = MultiPoly::constant(1, Rat(1));
  MultiPoly x = MultiPoly::variable(1, 0);
  std::vector<std::vector<MultiPoly>> m{{one, x}, {x, x * x}};
  CHECK(poly_rank(m) == 1);

  // [[1, x], [x, 1]] has rank 2 (determinant 1 - x^2 != 0)
  std::vector<std::vector<MultiPoly>> m2{{one, x}, {x, one}};
  CHECK(poly_rank(m2) == 2);

  // over two variables: rows (1, x, y), (x, x^2, xy) dependent
  MultiPoly one2 = MultiPoly::constant(2, Rat(1));
  MultiPoly x2 = MultiPoly::variable(2, 0);
  MultiPoly y2 = MultiPoly::variable(2, 1);
  std::vector<std::vector<MultiPoly>> m3{{one2, x2, y2}, {x2, x2 * x2, x2 * y2}};
  CHECK(poly_rank(m3) == 1);
}

TEST_CASE("multipoly exact division flags non-divisors") {
  MultiPoly x = MultiPoly::variable(1, 0);
  MultiPoly p = x * x - MultiPoly::constant(1, Rat(1));
  MultiPoly q = x - MultiPoly::constant(1, Rat(1));
  MultiPoly d = p.divide_exact(q);
  CHECK((d - (x + MultiPoly::constant(1, Rat(1)))).is_zero());
  CHECK_THROWS_AS(x.divide_exact(x * x), DomainError);
}

TEST_CASE("lll reduction preserves the lattice and shortens the basis") {
  MatZ b(2, 2);
  b.at(0, 0) = 4;
  b.at(0, 1) = 1;
  b.at(1, 0) = 3;
  b.at(1, 1) = 1;
  MatZ r = lll_reduce(b);
  // same lattice: HNF of input and output agree
  MatZ b2(2, 2);
  b2.at(0, 0) = 4;
  b2.at(0, 1) = 1;
  b2.at(1, 0) = 3;
  b2.at(1, 1) = 1;
  HnfResult h1 = hnf(b2), h2 = hnf(r);
  REQUIRE(h1.rank == h2.rank);
  for (std::size_t i = 0; i < h1.rank; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(h1.h.at(i, j) == h2.h.at(i, j));
  // the reduced basis of this lattice is orthonormal up to sign
  for (std::size_t i = 0; i < 2; ++i) {
    Int norm2 = r.at(i, 0) * r.at(i, 0) + r.at(i, 1) * r.at(i, 1);
    CHECK(norm2 == 1);
  }
}
