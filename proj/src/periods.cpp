#include "lieper/periods.hpp"

#include "lieper/errors.hpp"
#include "lieper/parallel.hpp"

#include <cmath>

namespace lieper {

PeriodResult period_3form(const MapFn& map, const GridSpec& base, const TriForm& form,
                          std::optional<double> tol, bool parallel) {
  GridSpec fine = base;
  for (auto& n : fine.n) n *= 2;

  SampledMap3 coarse_samples(base, map, 2, parallel);
  if (coarse_samples.max_neighbor_jump() > 0.5)
    throw DomainError("grid_too_coarse", "map varies too fast for the base grid");
  double coarse = integrate_form(coarse_samples, form, parallel);
  double refined = integrate_form(SampledMap3(fine, map, 2, parallel), form, parallel);

  PeriodResult r;
  r.value = refined;
  r.coarse_value = coarse;
  // the midpoint rule's second-order term dominates the stencil error, so the
  // two-resolution gap over 3 is the Richardson estimate for the fine value
  r.estimated_error = std::fabs(refined - coarse) / 3.0;
  r.resolution = fine.n[0];
  if (tol && r.estimated_error > *tol)
    throw DomainError("grid_too_coarse", "estimated quadrature error above the requested tolerance");
  return r;
}

PeriodResult s3_period(const MapFn& map, std::size_t n, std::optional<double> tol, bool parallel) {
  return period_3form(map, s3_grid(n), det_form(4.0), tol, parallel);
}

Quat s3_point(double psi, double theta, double phi) { return s3_chart(psi, theta, phi); }

MapFn s3_identity() {
  return [](double a, double b, double c) { return s3_chart(a, b, c); };
}

MapFn s3_power(int k) {
  return [k](double a, double b, double c) {
    Quat q = s3_chart(a, b, c);
    Quat base = k >= 0 ? q : qconj(q);
    int e = k >= 0 ? k : -k;
    Quat acc{1, 0, 0, 0};
    for (int i = 0; i < e; ++i) acc = qmul(acc, base);
    return acc;
  };
}

MapFn s3_constant() {
  return [](double, double, double) { return Quat{1, 0, 0, 0}; };
}

MapFn suspension_generator() {
  return [](double t, double theta, double phi) {
    const double pi = std::acos(-1.0);
    const double c = std::cos(pi * t), s = std::sin(pi * t);
    Quat left{c, s * std::cos(theta), s * std::sin(theta) * std::cos(phi),
              s * std::sin(theta) * std::sin(phi)};
    Quat right{c, -s, 0, 0}; // central unwinding factor, keeps the family based
    return qmul(left, right);
  };
}

LoopPeriodResult loop_period(const MapFn& family, std::size_t nt, std::size_t ntheta,
                             std::size_t nphi, bool parallel) {
  GridSpec g = cylinder_grid(nt, ntheta, nphi);
  // halo 4: the loop side differentiates the log-derivatives once more in t
  SampledMap3 m(g, family, 4, parallel);

  const long lt = static_cast<long>(nt);
  const double ht = g.h(0);

  // kappa(a,b) = 2 dot(a,b); pairing of the loop-space 2-form with the
  // (theta,phi) tangent pair, antisymmetrized in the two slots
  auto cell_term = [&](std::size_t flat) {
    const long j = static_cast<long>(flat / nphi);
    const long k = static_cast<long>(flat % nphi);
    std::vector<V3> f(nt + 4), gphi(nt + 4); // index i+2 for i in -2..nt+1
    for (long i = -2; i < lt + 2; ++i) {
      f[static_cast<std::size_t>(i + 2)] = m.log_derivative(i, j, k, 1);
      gphi[static_cast<std::size_t>(i + 2)] = m.log_derivative(i, j, k, 2);
    }
    auto ddt = [&](const std::vector<V3>& a, long i) {
      const std::size_t c = static_cast<std::size_t>(i + 2);
      V3 d = v3_add(v3_sub(a[c - 2], v3_scale(8.0, a[c - 1])),
                    v3_sub(v3_scale(8.0, a[c + 1]), a[c + 2]));
      return v3_scale(1.0 / (12.0 * ht), d);
    };
    double tsum = 0.0;
    for (long i = 0; i < lt; ++i) {
      const std::size_t c = static_cast<std::size_t>(i + 2);
      tsum += v3_dot(f[c], ddt(gphi, i)) - v3_dot(gphi[c], ddt(f, i));
    }
    return tsum * ht;
  };

  LoopPeriodResult r;
  r.loop_side = g.h(1) * g.h(2) * blocked_sum(ntheta * nphi, cell_term, parallel);
  r.volume_side = 0.5 * integrate_form(m, det_form(4.0), parallel);
  return r;
}

} // namespace lieper
