#pragma once

#include "lieper/errors.hpp"
#include "lieper/quaternion.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace lieper {

// Principal-connection toy models over a planar chart. A model bundles the
// structure group (kept as ambient linear data, renormalized after each step)
// with its algebra, exp/log, and the ambient operations the integrators need.

struct U1Model {
  static constexpr std::size_t dim = 1;
  using Alg = std::array<double, 1>; // coefficient of the imaginary unit
  using Grp = std::complex<double>;

  static Grp identity() { return {1.0, 0.0}; }
  static Grp mul(const Grp& a, const Grp& b) { return a * b; }
  static Grp add(const Grp& a, const Grp& b) { return a + b; }
  static Grp scale(double s, const Grp& a) { return s * a; }
  static Grp act_alg(const Grp& rho, const Alg& a) { return rho * Grp{0.0, a[0]}; }
  static Grp exp_alg(const Alg& a) { return std::polar(1.0, a[0]); }
  static Alg log_grp(const Grp& g) { return {std::arg(g)}; }
  static Grp renorm(const Grp& g) { return g / std::abs(g); }
  static Alg bracket(const Alg&, const Alg&) { return {0.0}; }
  static Alg conj_by_inverse(const Grp&, const Alg& a) { return a; }
  // embedded as diag(g, conj g)
  static double trace_abs(const Grp& g) { return std::fabs(2.0 * g.real()); }
};

struct SU2Model {
  static constexpr std::size_t dim = 3;
  using Alg = V3; // pure-quaternion coordinates
  using Grp = Quat;

  static Grp identity() { return {1, 0, 0, 0}; }
  static Grp mul(const Grp& a, const Grp& b) { return qmul(a, b); }
  static Grp add(const Grp& a, const Grp& b) { return qadd(a, b); }
  static Grp scale(double s, const Grp& a) { return qscale(s, a); }
  static Grp act_alg(const Grp& rho, const Alg& a) { return qmul(rho, qpure(a)); }
  static Grp exp_alg(const Alg& a) { return qexp_pure(a); }
  static Alg log_grp(const Grp& g) { return qlog_unit(g); }
  static Grp renorm(const Grp& g) { return qnormalize(g); }
  static Alg bracket(const Alg& a, const Alg& b) { return v3_scale(2.0, v3_cross(a, b)); }
  static Alg conj_by_inverse(const Grp& g, const Alg& a) {
    return qim(qmul(qmul(qconj(g), qpure(a)), g));
  }
  static double trace_abs(const Grp& g) { return std::fabs(2.0 * g.w); }
};

template <std::size_t K>
std::array<double, K> av_add(const std::array<double, K>& a, const std::array<double, K>& b) {
  std::array<double, K> r{};
  for (std::size_t i = 0; i < K; ++i) r[i] = a[i] + b[i];
  return r;
}
template <std::size_t K>
std::array<double, K> av_sub(const std::array<double, K>& a, const std::array<double, K>& b) {
  std::array<double, K> r{};
  for (std::size_t i = 0; i < K; ++i) r[i] = a[i] - b[i];
  return r;
}
template <std::size_t K>
std::array<double, K> av_scale(double s, const std::array<double, K>& a) {
  std::array<double, K> r{};
  for (std::size_t i = 0; i < K; ++i) r[i] = s * a[i];
  return r;
}
template <std::size_t K>
double av_norm(const std::array<double, K>& a) {
  double s = 0;
  for (std::size_t i = 0; i < K; ++i) s += a[i] * a[i];
  return std::sqrt(s);
}

using Vec2 = std::array<double, 2>;
using VectorField = std::function<Vec2(double, double)>;

// local connection form on a rectangle, given by its values on the coordinate
// frame; the base point must carry A = 0 so that holonomy derivatives at 0
// isolate the curvature
template <class Model>
struct ConnectionPatch {
  using Alg = typename Model::Alg;

  Vec2 lo{-1.0, -1.0};
  Vec2 hi{1.0, 1.0};
  Vec2 m0{0.0, 0.0};
  std::function<std::array<Alg, 2>(double, double)> a;
};

template <class Model>
void validate_patch(const ConnectionPatch<Model>& p) {
  if (!(p.lo[0] < p.hi[0] && p.lo[1] < p.hi[1]))
    throw DomainError("bad_input", "patch rectangle is empty");
  for (std::size_t c = 0; c < 2; ++c)
    if (p.m0[c] < p.lo[c] || p.m0[c] > p.hi[c])
      throw DomainError("bad_input", "base point outside the patch");
  auto frame = p.a(p.m0[0], p.m0[1]);
  if (av_norm<Model::dim>(frame[0]) > 1e-12 || av_norm<Model::dim>(frame[1]) > 1e-12)
    throw DomainError("bad_input", "connection form must vanish at the base point");
}

template <class Model>
std::array<typename Model::Alg, 2> frame_at(const ConnectionPatch<Model>& p, double x, double y) {
  if (x < p.lo[0] || x > p.hi[0] || y < p.lo[1] || y > p.hi[1])
    throw DomainError("step_out_of_patch", "curve left the connection patch");
  return p.a(x, y);
}

template <class Model>
typename Model::Alg a_dir(const ConnectionPatch<Model>& p, const Vec2& pos, const Vec2& dir) {
  auto frame = frame_at(p, pos[0], pos[1]);
  return av_add<Model::dim>(av_scale<Model::dim>(dir[0], frame[0]),
                            av_scale<Model::dim>(dir[1], frame[1]));
}

// curvature F(v,w) = d/dv A(w) - d/dw A(v) + [A(v), A(w)] at the base point,
// by central differences
template <class Model>
typename Model::Alg curvature(const ConnectionPatch<Model>& p, const Vec2& v, const Vec2& w,
                              double h = 1e-5) {
  constexpr std::size_t K = Model::dim;
  auto shift = [&](const Vec2& d, double s) {
    return Vec2{p.m0[0] + s * d[0], p.m0[1] + s * d[1]};
  };
  auto dv_aw = av_scale<K>(1.0 / (2.0 * h), av_sub<K>(a_dir(p, shift(v, h), w),
                                                      a_dir(p, shift(v, -h), w)));
  auto dw_av = av_scale<K>(1.0 / (2.0 * h), av_sub<K>(a_dir(p, shift(w, h), v),
                                                      a_dir(p, shift(w, -h), v)));
  auto lie = Model::bracket(a_dir(p, p.m0, v), a_dir(p, p.m0, w));
  return av_add<K>(av_sub<K>(dv_aw, dw_av), lie);
}

// joint 4th-order step of (position, transport): pos' = v(pos),
// rho' = -rho . A_pos(v(pos)); renormalized afterwards
template <class Model>
void flow_segment(const ConnectionPatch<Model>& p, const VectorField& v, double time,
                  std::size_t steps, Vec2& pos, typename Model::Grp& rho, bool transport) {
  using Grp = typename Model::Grp;
  struct State {
    Vec2 x;
    Grp r;
  };
  auto deriv = [&](const State& s) {
    Vec2 vel = v(s.x[0], s.x[1]);
    State d;
    d.x = vel;
    if (transport)
      d.r = Model::scale(-1.0, Model::act_alg(s.r, a_dir(p, s.x, vel)));
    else
      d.r = Model::scale(0.0, s.r);
    return d;
  };
  auto advance = [&](const State& s, double dt, const State& d) {
    State out;
    out.x = {s.x[0] + dt * d.x[0], s.x[1] + dt * d.x[1]};
    out.r = Model::add(s.r, Model::scale(dt, d.r));
    return out;
  };
  const double dt = time / static_cast<double>(steps);
  State s{pos, rho};
  for (std::size_t i = 0; i < steps; ++i) {
    State k1 = deriv(s);
    State k2 = deriv(advance(s, dt / 2, k1));
    State k3 = deriv(advance(s, dt / 2, k2));
    State k4 = deriv(advance(s, dt, k3));
    State sum = k1;
    sum.x = {k1.x[0] + 2 * k2.x[0] + 2 * k3.x[0] + k4.x[0],
             k1.x[1] + 2 * k2.x[1] + 2 * k3.x[1] + k4.x[1]};
    sum.r = Model::add(Model::add(k1.r, Model::scale(2.0, k2.r)),
                       Model::add(Model::scale(2.0, k3.r), k4.r));
    s = advance(s, dt / 6, sum);
    s.r = Model::renorm(s.r);
  }
  pos = s.x;
  rho = s.r;
}

// endpoint of Fl^Y_tau Fl^X_tau applied after Fl^Y_-tau Fl^X_-tau... i.e. the
// commutator curve gamma(tau) = Fl^Y_{-tau} Fl^X_{-tau} Fl^Y_tau Fl^X_tau (m0)
template <class Model>
Vec2 commutator_point(const ConnectionPatch<Model>& p, const VectorField& x, const VectorField& y,
                      double tau, std::size_t steps) {
  Vec2 pos = p.m0;
  typename Model::Grp dummy = Model::identity();
  auto neg = [](const VectorField& f) {
    return VectorField([f](double a, double b) {
      Vec2 v = f(a, b);
      return Vec2{-v[0], -v[1]};
    });
  };
  flow_segment<Model>(p, x, tau, steps, pos, dummy, false);
  flow_segment<Model>(p, y, tau, steps, pos, dummy, false);
  flow_segment<Model>(p, neg(x), tau, steps, pos, dummy, false);
  flow_segment<Model>(p, neg(y), tau, steps, pos, dummy, false);
  return pos;
}

// Holonomy of the five-segment loop: the four flow edges of the commutator
// rectangle, then back to the base point along the reversed commutator curve,
// transported with a midpoint-exponential product integral.
template <class Model>
typename Model::Grp commutator_holonomy(const ConnectionPatch<Model>& p, const VectorField& x,
                                        const VectorField& y, double t,
                                        std::size_t steps = 128,
                                        std::size_t return_samples = 256) {
  using Grp = typename Model::Grp;
  validate_patch(p);
  Vec2 pos = p.m0;
  Grp rho = Model::identity();
  auto neg = [](const VectorField& f) {
    return VectorField([f](double a, double b) {
      Vec2 v = f(a, b);
      return Vec2{-v[0], -v[1]};
    });
  };
  flow_segment<Model>(p, x, t, steps, pos, rho, true);
  flow_segment<Model>(p, y, t, steps, pos, rho, true);
  flow_segment<Model>(p, neg(x), t, steps, pos, rho, true);
  flow_segment<Model>(p, neg(y), t, steps, pos, rho, true);

  // return curve tau: t -> 0, each sample from a fresh four-flow integration
  std::vector<Vec2> pts(return_samples + 1);
  for (std::size_t j = 0; j <= return_samples; ++j) {
    double tau = t * static_cast<double>(return_samples - j) / static_cast<double>(return_samples);
    pts[j] = (j == 0) ? pos : commutator_point<Model>(p, x, y, tau, steps);
  }
  for (std::size_t j = 0; j + 1 <= return_samples; ++j) {
    Vec2 mid{(pts[j][0] + pts[j + 1][0]) / 2, (pts[j][1] + pts[j + 1][1]) / 2};
    Vec2 dpos{pts[j + 1][0] - pts[j][0], pts[j + 1][1] - pts[j][1]};
    auto am = a_dir(p, mid, dpos);
    rho = Model::renorm(Model::mul(rho, Model::exp_alg(av_scale<Model::dim>(-1.0, am))));
  }
  return rho;
}

// least-squares fit of y(t) ~ e t + a t^2 + b t^3 through the origin;
// returns {e, a, b}
std::array<double, 3> fit_cubic_origin(const std::vector<double>& ts,
                                       const std::vector<double>& ys);

struct HolonomyCurvatureReport {
  double beta_d_abs = 0;          // |first derivative| of log holonomy at 0
  double beta_dd_abs = 0;         // |second derivative|, Richardson-extrapolated
  double two_f_abs = 0;           // |2 F(x,y)| at the base point
  double rel_gap = 0;             // magnitude mismatch, relative
  int sign = 0;                   // +1: matches +2F(x,y); -1: matches -2F(x,y)
  std::vector<double> beta_dd;    // fitted second-derivative coordinates
  std::vector<double> two_f;      // 2 F(x,y) coordinates
};

template <class Model>
HolonomyCurvatureReport holonomy_curvature(const ConnectionPatch<Model>& p, const VectorField& x,
                                           const VectorField& y, double t_max = 0.1,
                                           std::size_t steps = 128,
                                           std::size_t return_samples = 256) {
  constexpr std::size_t K = Model::dim;
  auto fit_alg = [&](double s) {
    std::vector<double> ts;
    std::vector<std::array<double, K>> logs;
    for (std::size_t i = 1; i <= 8; ++i) {
      double t = s * static_cast<double>(i) / 8.0;
      ts.push_back(t);
      logs.push_back(Model::log_grp(commutator_holonomy<Model>(p, x, y, t, steps, return_samples)));
    }
    std::array<std::array<double, 3>, K> fits{};
    for (std::size_t c = 0; c < K; ++c) {
      std::vector<double> ys;
      for (const auto& l : logs) ys.push_back(l[c]);
      fits[c] = fit_cubic_origin(ts, ys);
    }
    return fits;
  };

  auto full = fit_alg(t_max);
  auto half = fit_alg(t_max / 2);

  std::array<double, K> first{}, second{};
  for (std::size_t c = 0; c < K; ++c) {
    // leading fit bias is O(s^3) in the linear and O(s^2) in the quadratic
    // coefficient; Richardson across the two ranges removes both
    first[c] = (8.0 * half[c][0] - full[c][0]) / 7.0;
    second[c] = 2.0 * (4.0 * half[c][1] - full[c][1]) / 3.0;
  }

  auto f = curvature(p, Vec2{x(p.m0[0], p.m0[1])[0], x(p.m0[0], p.m0[1])[1]},
                     Vec2{y(p.m0[0], p.m0[1])[0], y(p.m0[0], p.m0[1])[1]});
  auto two_f = av_scale<K>(2.0, f);

  HolonomyCurvatureReport r;
  r.beta_d_abs = av_norm<K>(first);
  r.beta_dd_abs = av_norm<K>(second);
  r.two_f_abs = av_norm<K>(two_f);
  r.rel_gap = std::fabs(r.beta_dd_abs - r.two_f_abs) / r.two_f_abs;
  r.beta_dd.assign(second.begin(), second.end());
  r.two_f.assign(two_f.begin(), two_f.end());
  double plus = av_norm<K>(av_sub<K>(second, two_f));
  double minus = av_norm<K>(av_add<K>(second, two_f));
  if (plus <= 0.2 * r.two_f_abs && plus < minus)
    r.sign = 1;
  else if (minus <= 0.2 * r.two_f_abs && minus < plus)
    r.sign = -1;
  return r;
}

// preset patches
ConnectionPatch<U1Model> u1_xdy_patch();
ConnectionPatch<SU2Model> su2_xy_patch();

} // namespace lieper
