#include "lieper/sphere.hpp"

#include "lieper/errors.hpp"
#include "lieper/parallel.hpp"

#include <cmath>

namespace lieper {

SampledMap3::SampledMap3(GridSpec spec, const MapFn& f, long halo, bool parallel)
    : spec_(spec), halo_(halo) {
  if (halo_ < 2) throw DomainError("bad_input", "sampling needs a halo of at least 2");
  for (std::size_t a = 0; a < 3; ++a) {
    if (spec_.n[a] < 4) throw DomainError("grid_too_coarse", "need at least 4 cells per axis");
    dim_[a] = spec_.n[a] + 2 * static_cast<std::size_t>(halo_);
  }
  q_.resize(dim_[0] * dim_[1] * dim_[2]);

  const long n0 = static_cast<long>(spec_.n[0]);
  auto fill_slab = [&](long i) {
    const double u = spec_.center(0, i);
    for (long j = -halo_; j < static_cast<long>(spec_.n[1]) + halo_; ++j) {
      const double v = spec_.center(1, j);
      for (long k = -halo_; k < static_cast<long>(spec_.n[2]) + halo_; ++k)
        q_[idx(i, j, k)] = f(u, v, spec_.center(2, k));
    }
  };

#if defined(LIEPER_HAVE_OPENMP)
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = -halo_; i < n0 + halo_; ++i) fill_slab(i);
  } else {
    for (long i = -halo_; i < n0 + halo_; ++i) fill_slab(i);
  }
#else
  (void)parallel;
  for (long i = -halo_; i < n0 + halo_; ++i) fill_slab(i);
#endif
}

V3 SampledMap3::log_derivative(long i, long j, long k, std::size_t axis) const {
  const long di = axis == 0, dj = axis == 1, dk = axis == 2;
  const Quat& m2 = at(i - 2 * di, j - 2 * dj, k - 2 * dk);
  const Quat& m1 = at(i - di, j - dj, k - dk);
  const Quat& p1 = at(i + di, j + dj, k + dk);
  const Quat& p2 = at(i + 2 * di, j + 2 * dj, k + 2 * dk);
  const double ih = 1.0 / (12.0 * spec_.h(axis));
  Quat d = qscale(ih, qadd(qadd(m2, qscale(-8.0, m1)), qadd(qscale(8.0, p1), qscale(-1.0, p2))));
  return qlog_derivative(at(i, j, k), d);
}

double SampledMap3::max_neighbor_jump() const {
  double worst = 0.0;
  auto dist = [](const Quat& a, const Quat& b) {
    Quat d = qadd(a, qscale(-1.0, b));
    return qnorm(d);
  };
  const long n0 = static_cast<long>(spec_.n[0]);
  const long n1 = static_cast<long>(spec_.n[1]);
  const long n2 = static_cast<long>(spec_.n[2]);
  for (long i = 0; i < n0; ++i)
    for (long j = 0; j < n1; ++j)
      for (long k = 0; k < n2; ++k) {
        const Quat& c = at(i, j, k);
        worst = std::max(worst, dist(c, at(i + 1, j, k)));
        worst = std::max(worst, dist(c, at(i, j + 1, k)));
        worst = std::max(worst, dist(c, at(i, j, k + 1)));
      }
  return worst;
}

double integrate_form(const SampledMap3& m, const TriForm& form, bool parallel) {
  const GridSpec& g = m.spec();
  const std::size_t n1 = g.n[1], n2 = g.n[2];
  const double cellvol = g.h(0) * g.h(1) * g.h(2);
  auto term = [&](std::size_t flat) {
    const long i = static_cast<long>(flat / (n1 * n2));
    const long j = static_cast<long>((flat / n2) % n1);
    const long k = static_cast<long>(flat % n2);
    V3 d0 = m.log_derivative(i, j, k, 0);
    V3 d1 = m.log_derivative(i, j, k, 1);
    V3 d2 = m.log_derivative(i, j, k, 2);
    return form(d0, d1, d2);
  };
  return cellvol * blocked_sum(g.cells(), term, parallel);
}

TriForm det_form(double scale) {
  return [scale](const V3& a, const V3& b, const V3& c) {
    return scale * v3_dot(v3_cross(a, b), c);
  };
}

Quat s3_chart(double psi, double theta, double phi) {
  const double sp = std::sin(psi), st = std::sin(theta);
  return {std::cos(psi), sp * std::cos(theta), sp * st * std::cos(phi), sp * st * std::sin(phi)};
}

GridSpec s3_grid(std::size_t n) {
  const double pi = std::acos(-1.0);
  GridSpec g;
  g.lo = {0, 0, 0};
  g.hi = {pi, pi, 2 * pi};
  g.n = {n, n, n};
  return g;
}

GridSpec cylinder_grid(std::size_t nt, std::size_t ntheta, std::size_t nphi) {
  const double pi = std::acos(-1.0);
  GridSpec g;
  g.lo = {0, 0, 0};
  g.hi = {1, pi, 2 * pi};
  g.n = {nt, ntheta, nphi};
  return g;
}

} // namespace lieper
