#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieper/errors.hpp"
#include "lieper/parallel.hpp"
#include "lieper/periods.hpp"
#include "lieper/sphere.hpp"

#include <algorithm>
#include <cmath>

using namespace lieper;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("blocked sums are deterministic and order independent") {
  auto term = [](std::size_t i) { return 1.0 / ((i + 1.0) * (i + 1.0)); };
  double serial = blocked_sum(100000, term, false);
  double parallel = blocked_sum(100000, term, true);
  CHECK(serial == parallel); // bit identical by construction
  CHECK(serial == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-4));
}

TEST_CASE("log derivatives of one-parameter subgroups are exact to stencil order") {
  V3 x{0.3, -0.2, 0.7};
  GridSpec spec;
  spec.n = {16, 4, 4};
  MapFn f = [&](double t, double, double) { return qexp_pure(v3_scale(t, x)); };
  SampledMap3 m(spec, f);
  for (long i = 0; i < 16; ++i) {
    V3 d = m.log_derivative(i, 1, 2, 0);
    for (int c = 0; c < 3; ++c) CHECK(d[c] == doctest::Approx(x[c]).epsilon(1e-6));
  }
  // refining the grid by 2 cuts the stencil error by about 16
  GridSpec fine = spec;
  fine.n[0] = 32;
  SampledMap3 mf(fine, f);
  double coarse_err = 0, fine_err = 0;
  for (int c = 0; c < 3; ++c) {
    coarse_err = std::max(coarse_err, std::fabs(m.log_derivative(8, 1, 2, 0)[c] - x[c]));
    fine_err = std::max(fine_err, std::fabs(mf.log_derivative(16, 1, 2, 0)[c] - x[c]));
  }
  CHECK(fine_err * 8.0 <= coarse_err);
  // derivatives along the constant axes vanish
  V3 d1 = m.log_derivative(3, 1, 2, 1);
  CHECK(v3_norm(d1) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("log derivatives are invariant under left translation") {
  GridSpec spec;
  spec.n = {8, 8, 8};
  MapFn f = [](double a, double b, double c) {
    return qmul(qexp_pure(V3{a, 0.2 * b, 0}), qexp_pure(V3{0, 0.1, c}));
  };
  Quat g0 = qnormalize(Quat{0.5, -0.3, 0.8, 0.1});
  MapFn g = [&](double a, double b, double c) { return qmul(g0, f(a, b, c)); };
  SampledMap3 mf(spec, f), mg(spec, g);
  for (long i = 0; i < 8; i += 3)
    for (long j = 0; j < 8; j += 3)
      for (long k = 0; k < 8; k += 3)
        for (std::size_t ax = 0; ax < 3; ++ax) {
          V3 df = mf.log_derivative(i, j, k, ax);
          V3 dg = mg.log_derivative(i, j, k, ax);
          CHECK(v3_norm(v3_sub(df, dg)) <= 1e-12);
        }
}

TEST_CASE("parallel and serial quadrature agree bit for bit") {
  GridSpec spec = s3_grid(12);
  SampledMap3 m(spec, s3_identity());
  double serial = integrate_form(m, det_form(4.0), false);
  double parallel = integrate_form(m, det_form(4.0), true);
  CHECK(serial == parallel);
}

TEST_CASE("the identity of the 3-sphere integrates to 8 pi^2") {
  PeriodResult r = s3_period(s3_identity(), 24, std::nullopt, true);
  double want = 8.0 * kPi * kPi;
  CHECK(std::fabs(r.value - want) / want <= 1e-2);
  CHECK(r.resolution == 48);
  // the error estimate brackets the actual refinement gap realistically
  CHECK(std::fabs(r.value - want) <= 10.0 * r.estimated_error);
}

TEST_CASE("degree scales the integral") {
  PeriodResult one = s3_period(s3_identity(), 16, std::nullopt, true);
  PeriodResult two = s3_period(s3_power(2), 32, std::nullopt, true);
  CHECK(two.value / one.value == doctest::Approx(2.0).epsilon(1e-2));
  PeriodResult zero = s3_period(s3_constant(), 8, std::nullopt, true);
  CHECK(std::fabs(zero.value) <= 1e-12);
}

TEST_CASE("sampling demands a minimum halo and grid") {
  GridSpec spec;
  spec.n = {4, 4, 4};
  CHECK_THROWS_AS(SampledMap3(spec, s3_identity(), 1), DomainError);
  GridSpec tiny;
  tiny.n = {2, 4, 4};
  try {
    SampledMap3 m(tiny, s3_identity());
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.code() == "grid_too_coarse");
  }
}

TEST_CASE("fast maps on coarse grids are refused rather than mismeasured") {
  try {
    s3_period(s3_power(9), 6, std::nullopt, false);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.code() == "grid_too_coarse");
  }
}

TEST_CASE("unreachable tolerances are refused") {
  try {
    s3_period(s3_identity(), 8, 1e-12, false);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.code() == "grid_too_coarse");
  }
}

TEST_CASE("the loop pairing matches half the cylinder volume integral") {
  LoopPeriodResult r = loop_period(suspension_generator(), 32, 16, 16, true);
  double want = 4.0 * kPi * kPi;
  CHECK(std::fabs(r.loop_side - want) / want <= 0.02);
  CHECK(std::fabs(r.volume_side - want) / want <= 0.02);
  CHECK(std::fabs(r.loop_side - r.volume_side) / want <= 0.02);
}

TEST_CASE("the suspension family is based at the identity") {
  MapFn fam = suspension_generator();
  for (double theta : {0.0, 0.7, 2.0}) {
    for (double phi : {0.0, 1.0, 4.0}) {
      Quat q0 = fam(0.0, theta, phi);
      Quat q1 = fam(1.0, theta, phi);
      CHECK(std::fabs(q0.w - 1.0) <= 1e-12);
      CHECK(std::fabs(qnorm(qadd(q1, qscale(-1.0, q0)))) <= 1e-12);
    }
  }
}
