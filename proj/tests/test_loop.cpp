#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieper/errors.hpp"
#include "lieper/lie.hpp"
#include "lieper/loop.hpp"

#include <cmath>

using namespace lieper;
using namespace lieper::algebras;

namespace {

constexpr double kPi = 3.14159265358979323846;

// quarter rotation about the K axis, an automorphism of su2
MatQ rot90() {
  MatQ m(3, 3);
  m.at(0, 1) = -1;
  m.at(1, 0) = 1;
  m.at(2, 2) = 1;
  return m;
}

// f(t) = Rot_K(-pi t / 2) applied to a 1-periodic path u(t): satisfies the
// quarter-turn twist equation f(t+1) = phi^{-1} f(t) by construction
std::function<std::vector<double>(double)> twisted_path(double a, double b, double c) {
  return [a, b, c](double t) {
    double ang = -kPi * t / 2.0;
    double u0 = a + std::cos(2.0 * kPi * t), u1 = b + std::sin(2.0 * kPi * t) * 0.5,
           u2 = c * std::cos(2.0 * kPi * t);
    return std::vector<double>{std::cos(ang) * u0 - std::sin(ang) * u1,
                               std::sin(ang) * u0 + std::cos(ang) * u1, u2};
  };
}

MatQ rot120() {
  MatQ m(2, 2);
  m.at(0, 1) = -1;
  m.at(1, 0) = 1;
  m.at(1, 1) = -1;
  return m;
}

} // namespace

TEST_CASE("sampled sections respect or violate the twist equation") {
  MatQ phi = rot90();
  SampledTwistedSection f = sample_section(64, twisted_path(1.0, 0.2, -0.4));
  CHECK_NOTHROW(check_twist(f, phi));
  SampledTwistedSection broken = f;
  broken.samples[64][0] += 1e-3;
  try {
    check_twist(broken, phi);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.code() == "twist_mismatch");
  }
}

TEST_CASE("twist-aware derivatives reach stencil accuracy across the seam") {
  MatQ phi = rot90();
  auto path = twisted_path(0.5, -1.0, 0.8);
  SampledTwistedSection f = sample_section(128, path);
  // numerical derivative at the seam sample j=0 vs a fine central difference
  std::vector<double> d = derivative_sample(f, phi, 0);
  double h = 1e-6;
  auto fm = path(-h), fp = path(h);
  for (int c = 0; c < 3; ++c) {
    double want = (fp[c] - fm[c]) / (2.0 * h);
    CHECK(d[c] == doctest::Approx(want).epsilon(1e-5));
  }
  // interior sample too
  std::vector<double> d2 = derivative_sample(f, phi, 64);
  auto gm = path(0.5 - h), gp = path(0.5 + h);
  for (int c = 0; c < 3; ++c)
    CHECK(d2[c] == doctest::Approx((gp[c] - gm[c]) / (2.0 * h)).epsilon(1e-5));
}

TEST_CASE("simpson integration of sections is high order") {
  SampledTwistedSection f = sample_section(64, [](double t) {
    double c = std::cos(2.0 * kPi * t);
    return std::vector<double>{c * c};
  });
  std::vector<double> v = integral_simpson(f);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("matrix orders") {
  CHECK(matrix_order(MatQ::identity(3)) == 1);
  CHECK(matrix_order(rot90()) == 4);
  CHECK(matrix_order(rot120()) == 3);
  MatQ shear = MatQ::identity(2);
  shear.at(0, 1) = 1;
  try {
    matrix_order(shear, 64);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.code() == "order_bound_exceeded");
  }
}

TEST_CASE("cokernel equals fixed space through averaging, small cases") {
  // identity: everything fixed, cokernel is everything
  CokerFixedReport id3 = coker_equals_fixed(MatQ::identity(3));
  CHECK(id3.order == 1);
  CHECK(id3.dim_coker == 3);
  CHECK(id3.dim_fixed == 3);
  CHECK(id3.ok);

  // minus identity: nothing fixed
  CokerFixedReport neg = coker_equals_fixed(MatQ::identity(2).scaled(Rat(-1)));
  CHECK(neg.order == 2);
  CHECK(neg.dim_coker == 0);
  CHECK(neg.dim_fixed == 0);
  CHECK(neg.ok);

  // order 3 rotation of the plane: nothing fixed
  CokerFixedReport r3 = coker_equals_fixed(rot120());
  CHECK(r3.order == 3);
  CHECK(r3.dim_coker == 0);
  CHECK(r3.ok);

  // quarter turn in 3d: the axis survives
  CokerFixedReport r4 = coker_equals_fixed(rot90());
  CHECK(r4.order == 4);
  CHECK(r4.dim_coker == 1);
  CHECK(r4.dim_fixed == 1);
  CHECK(r4.ok);
}

TEST_CASE("infinite order maps are reported, not looped on") {
  MatQ shear = MatQ::identity(2);
  shear.at(0, 1) = 1;
  CHECK_THROWS_AS(coker_equals_fixed(shear, 32), DomainError);
}

TEST_CASE("the loop cocycle is antisymmetric up to quadrature error") {
  LieAlgebra g = su2();
  MatQ phi = rot90();
  TwistedLoopCocycle tlc(g, phi);
  CHECK(tlc.coker().dim() == 1);
  SampledTwistedSection f = sample_section(128, twisted_path(0.3, 1.1, 0.7));
  SampledTwistedSection h = sample_section(128, twisted_path(-0.8, 0.4, 1.2));
  auto fg = tlc.omega(f, h);
  auto gf = tlc.omega(h, f);
  REQUIRE(fg.size() == 1);
  CHECK(std::fabs(fg[0] + gf[0]) <= 1e-8);
  CHECK(std::fabs(fg[0]) > 1e-6); // the pairing is not trivially zero
}

TEST_CASE("cocycle residuals shrink under refinement") {
  LieAlgebra g = su2();
  MatQ phi = rot90();
  TwistedLoopCocycle tlc(g, phi);
  auto p1 = twisted_path(0.3, 1.1, 0.7);
  auto p2 = twisted_path(-0.8, 0.4, 1.2);
  auto p3 = twisted_path(0.05, -0.6, 0.9);
  double r32 = tlc.cocycle_residual(sample_section(32, p1), sample_section(32, p2),
                                    sample_section(32, p3));
  double r64 = tlc.cocycle_residual(sample_section(64, p1), sample_section(64, p2),
                                    sample_section(64, p3));
  CHECK(r64 < r32);
  CHECK(r64 <= 1e-4);
}

TEST_CASE("explicit coefficient forms must be twist compatible") {
  LieAlgebra g = su2();
  MatQ phi = rot90();
  SymBilinearForm kappa = killing_form(g).scaled(Rat(-1, 4));
  // the value action of a rotation on the 1-dim coefficient space is trivial
  MatQ good(1, 1);
  good.at(0, 0) = 1;
  CHECK_NOTHROW(TwistedLoopCocycle(g, phi, kappa, good));
  MatQ bad(1, 1);
  bad.at(0, 0) = 2;
  try {
    TwistedLoopCocycle(g, phi, kappa, bad);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.code() == "incompatible_kappa");
  }
}

TEST_CASE("integral classes round trip through the interpolating section") {
  // quarter turn on values: cokernel of (phi_v - id) in dim 3 is the axis
  MatQ phiv = rot90();
  QuotientSpace coker = [&] {
    MatQ delta = phiv - MatQ::identity(3);
    std::vector<RatVec> rel;
    for (std::size_t j = 0; j < 3; ++j) {
      RatVec col(3);
      for (std::size_t i = 0; i < 3; ++i) col[i] = delta.at(i, j);
      rel.push_back(col);
    }
    return QuotientSpace(3, rel);
  }();
  REQUIRE(coker.dim() == 1);
  std::vector<double> v{0.4, -1.3, 1.75};
  SampledTwistedSection s = a5_inverse(phiv, v, 256);
  CHECK_NOTHROW(check_twist(s, phiv));
  std::vector<double> back = a5_forward(coker, s);
  REQUIRE(back.size() == 1);
  // the class of the interpolating section equals the class of its endpoint
  double want = 0.0;
  for (std::size_t j = 0; j < 3; ++j) want += rat_double(coker.projection().at(0, j)) * v[j];
  CHECK(std::fabs(back[0] - want) <= 1e-8);
  CHECK(std::fabs(want) > 0.1); // the probe class is far from zero
}

TEST_CASE("sections that are derivatives have zero integral class") {
  MatQ phiv = rot90();
  QuotientSpace coker = [&] {
    MatQ delta = phiv - MatQ::identity(3);
    std::vector<RatVec> rel;
    for (std::size_t j = 0; j < 3; ++j) {
      RatVec col(3);
      for (std::size_t i = 0; i < 3; ++i) col[i] = delta.at(i, j);
      rel.push_back(col);
    }
    return QuotientSpace(3, rel);
  }();
  // u(t) interpolates v -> phi_v^{-1} v smoothly; u' is a twisted section of
  // the same kind whose class must vanish
  std::vector<double> v{0.3, -0.9, 0.4};
  MatQ inv = rot90().transpose(); // rotation inverse
  auto dsmooth = [](double t) { return 30.0 * t * t * (t - 1.0) * (t - 1.0); };
  auto du = [&](double t) {
    std::vector<double> out(3);
    for (int i = 0; i < 3; ++i) {
      double vi = v[i];
      double wi = rat_double(inv.at(i, 0)) * v[0] + rat_double(inv.at(i, 1)) * v[1] +
                  rat_double(inv.at(i, 2)) * v[2];
      out[i] = dsmooth(t) * (wi - vi);
    }
    return out;
  };
  SampledTwistedSection ds = sample_section(128, du);
  CHECK_NOTHROW(check_twist(ds, phiv));
  std::vector<double> cls = a5_forward(coker, ds);
  REQUIRE(cls.size() == 1);
  CHECK(std::fabs(cls[0]) <= 1e-8);
}

TEST_CASE("non-invertible value twists are refused by the interpolator") {
  MatQ sing(2, 2); // rank 1
  sing.at(0, 0) = 1;
  try {
    a5_inverse(sing, {0.5, 0.5}, 64);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.code() == "singular_twist");
  }
}
