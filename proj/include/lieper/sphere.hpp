#pragma once

#include "lieper/quaternion.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace lieper {

// map from a 3-parameter chart into the unit quaternions
using MapFn = std::function<Quat(double, double, double)>;

// alternating 3-form on algebra coordinates
using TriForm = std::function<double(const V3&, const V3&, const V3&)>;

struct GridSpec {
  std::array<double, 3> lo{0, 0, 0};
  std::array<double, 3> hi{1, 1, 1};
  std::array<std::size_t, 3> n{32, 32, 32};

  double h(std::size_t axis) const {
    return (hi[axis] - lo[axis]) / static_cast<double>(n[axis]);
  }
  // cell centers; i may range into the halo
  double center(std::size_t axis, long i) const {
    return lo[axis] + (static_cast<double>(i) + 0.5) * h(axis);
  }
  std::size_t cells() const { return n[0] * n[1] * n[2]; }
};

// Map samples on a cell-centered grid with a halo on every side. Halo values
// come from evaluating the callable outside the box; the charts used here all
// extend analytically.
class SampledMap3 {
 public:
  SampledMap3(GridSpec spec, const MapFn& f, long halo = 2, bool parallel = false);

  const GridSpec& spec() const { return spec_; }
  long halo() const { return halo_; }

  // i,j,k in [-halo, n+halo)
  const Quat& at(long i, long j, long k) const { return q_[idx(i, j, k)]; }

  // left logarithmic derivative along an axis by the 5-point 4th order
  // stencil; valid where the two-wide neighborhood stays inside the halo
  V3 log_derivative(long i, long j, long k, std::size_t axis) const;

  // largest distance between samples adjacent along any axis; a coarse grid
  // on a fast-varying map shows up here
  double max_neighbor_jump() const;

 private:
  std::size_t idx(long i, long j, long k) const {
    return ((static_cast<std::size_t>(i + halo_) * dim_[1]) + static_cast<std::size_t>(j + halo_)) *
               dim_[2] +
           static_cast<std::size_t>(k + halo_);
  }

  GridSpec spec_;
  long halo_;
  std::array<std::size_t, 3> dim_;
  std::vector<Quat> q_;
};

// midpoint-rule integral of form(d1, d2, d3) over the grid box, with the
// log-derivatives taken along the three axes; deterministic in parallel
double integrate_form(const SampledMap3& m, const TriForm& form, bool parallel);

// Cartan 3-form for the quaternion algebra normalized so that the value on
// the standard basis triple is `scale` (form = scale * det of coordinates)
TriForm det_form(double scale);

// chart of the unit 3-sphere on [0,pi] x [0,pi] x [0,2pi]
Quat s3_chart(double psi, double theta, double phi);
GridSpec s3_grid(std::size_t n);

// cylinder chart [0,1] x [0,pi] x [0,2pi] for families of loops
GridSpec cylinder_grid(std::size_t nt, std::size_t ntheta, std::size_t nphi);

} // namespace lieper
