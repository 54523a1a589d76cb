#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieper/errors.hpp"
#include "lieper/lie.hpp"

using namespace lieper;
using namespace lieper::algebras;

namespace {

RatVec e(std::size_t n, std::size_t i) {
  RatVec v(n, Rat(0));
  v[i] = 1;
  return v;
}

} // namespace

TEST_CASE("su2 structure constants follow the quaternion relations") {
  LieAlgebra g = su2();
  REQUIRE(g.dim() == 3);
  // [I,J] = 2K and cyclic
  CHECK(bracket(g, e(3, 0), e(3, 1)) == RatVec{Rat(0), Rat(0), Rat(2)});
  CHECK(bracket(g, e(3, 1), e(3, 2)) == RatVec{Rat(2), Rat(0), Rat(0)});
  CHECK(bracket(g, e(3, 2), e(3, 0)) == RatVec{Rat(0), Rat(2), Rat(0)});
  CHECK(bracket(g, e(3, 1), e(3, 0)) == RatVec{Rat(0), Rat(0), Rat(-2)});
  CHECK_FALSE(g.is_abelian());
}

TEST_CASE("gl2 brackets match literal matrix commutators") {
  // independent route: build gl2 from explicit matrix units and compare all
  // structure constants against the named construction
  std::vector<MatQ> units;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      MatQ m(2, 2);
      m.at(a, b) = 1;
      units.push_back(m);
    }
  LieAlgebra from_units = from_matrices(units, {"E11", "E12", "E21", "E22"});
  LieAlgebra named = gl2();
  REQUIRE(named.dim() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) CHECK(named.c(i, j, k) == from_units.c(i, j, k));
}

TEST_CASE("jacobi violations are rejected at construction") {
  // [e0,e1] = e2, [e0,e2] = e0 fails Jacobi
  std::vector<Rat> c(27, Rat(0));
  auto set = [&](int i, int j, int k, int v) {
    c[(i * 3 + j) * 3 + k] = v;
    c[(j * 3 + i) * 3 + k] = -v;
  };
  set(0, 1, 2, 1);
  set(0, 2, 0, 1);
  set(1, 2, 1, 1);
  CHECK_THROWS_AS(LieAlgebra(3, {"a", "b", "c"}, c), DomainError);
}

TEST_CASE("killing form of su2 is -8 on the quaternion basis") {
  LieAlgebra g = su2();
  SymBilinearForm k = killing_form(g);
  // ad(I)^2 = diag(0,-4,-4), so tr = -8; same for J and K
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k.at(i, j)[0] == (i == j ? Rat(-8) : Rat(0)));
  CHECK(is_invariant(g, k));
  // the normalization used everywhere downstream: kappa(x,x) = 2|x|^2
  SymBilinearForm kn = k.scaled(Rat(-1, 4));
  CHECK(kn.at(0, 0)[0] == 2);
}

TEST_CASE("gl2 killing form matches the 2n tr(xy) - 2 tr(x)tr(y) formula") {
  LieAlgebra g = gl2();
  SymBilinearForm k = killing_form(g);
  // basis E11, E12, E21, E22
  // killing(E11,E11) = 4*1 - 2*1 = 2, killing(E11,E22) = -2,
  // killing(E12,E21) = 4, killing(E12,E12) = 0
  CHECK(k.at(0, 0)[0] == 2);
  CHECK(k.at(0, 3)[0] == -2);
  CHECK(k.at(1, 2)[0] == 4);
  CHECK(k.at(1, 1)[0] == 0);
  CHECK(k.at(0, 1)[0] == 0);
  CHECK(is_invariant(g, k));
}

TEST_CASE("invariance check rejects a generic diagonal form on su2") {
  LieAlgebra g = su2();
  SymBilinearForm bad(3, 1);
  bad.set(0, 0, {Rat(1)});
  bad.set(1, 1, {Rat(2)});
  bad.set(2, 2, {Rat(3)});
  CHECK_FALSE(is_invariant(g, bad));
}

TEST_CASE("derivation and automorphism predicates") {
  LieAlgebra g = su2();
  // inner derivations pass
  CHECK(is_derivation(g, g.ad_basis(0)));
  CHECK(is_derivation(g, g.ad_basis(2)));
  // swapping two basis vectors is not a derivation of su2
  MatQ swap(3, 3);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  swap.at(2, 2) = 1;
  CHECK_FALSE(is_derivation(g, swap));
  // rotation by 90 degrees about the K axis is an automorphism
  MatQ rot(3, 3);
  rot.at(0, 1) = -1;
  rot.at(1, 0) = 1;
  rot.at(2, 2) = 1;
  CHECK(is_automorphism(g, rot));
  CHECK_FALSE(is_automorphism(g, swap));
  // ad x is kappa-skew for the killing form
  CHECK(is_kappa_skew(g, killing_form(g), g.ad_basis(1)));
}

TEST_CASE("radical and derived subalgebra of gl2") {
  LieAlgebra g = gl2();
  // derived = sl2 (dim 3), radical = center = scalar matrices (dim 1)
  CHECK(derived_subalgebra(g).rows() == 3);
  MatQ r = radical(g);
  REQUIRE(r.rows() == 1);
  // the radical row is proportional to E11 + E22 = (1,0,0,1)
  RatVec row = r.row(0);
  CHECK(row[1] == 0);
  CHECK(row[2] == 0);
  CHECK(row[0] == row[3]);
  CHECK(row[0] != 0);
}

TEST_CASE("semisimple algebras have zero radical") {
  CHECK(radical(su2()).rows() == 0);
  CHECK(radical(sl2c_real()).rows() == 0);
  CHECK(radical(direct_sum(su2(), su2())).rows() == 0);
}

TEST_CASE("direct sums and abelian algebras") {
  LieAlgebra s = direct_sum(su2(), su2());
  REQUIRE(s.dim() == 6);
  // cross brackets vanish, block brackets reproduce the factors
  CHECK(rv_is_zero(bracket(s, e(6, 0), e(6, 4))));
  RatVec b = bracket(s, e(6, 3), e(6, 4));
  CHECK(b[5] == 2);
  CHECK(abelian(4).is_abelian());
  CHECK(killing_form(abelian(4)).at(0, 0)[0] == 0);
}

TEST_CASE("sl2c as a real algebra brackets like the complexification") {
  LieAlgebra g = sl2c_real();
  REQUIRE(g.dim() == 6);
  // basis I,J,K,iI,iJ,iK: [iI, iJ] = -[I,J] = -2K
  RatVec b = bracket(g, e(6, 3), e(6, 4));
  CHECK(b == RatVec{Rat(0), Rat(0), Rat(-2), Rat(0), Rat(0), Rat(0)});
  // [I, iJ] = i[I,J] = 2 iK
  RatVec b2 = bracket(g, e(6, 0), e(6, 4));
  CHECK(b2 == RatVec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(2)});
}
