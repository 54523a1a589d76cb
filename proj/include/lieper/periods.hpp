#pragma once

#include "lieper/sphere.hpp"

#include <cstddef>
#include <optional>

namespace lieper {

struct PeriodResult {
  double value;           // refined-grid integral
  double estimated_error; // two-resolution estimate for the refined value
  double coarse_value;
  std::size_t resolution; // refined cell count per axis
};

// integral of form(d along axis0, axis1, axis2) over the chart box, run at the
// base resolution and at double resolution; the gap between the two values
// gives a Richardson error estimate for the refined result
PeriodResult period_3form(const MapFn& map, const GridSpec& base, const TriForm& form,
                          std::optional<double> tol, bool parallel);

// convenience wrapper on the unit-sphere chart with the standard normalized
// invariant form (value 4 on the basis triple)
PeriodResult s3_period(const MapFn& map, std::size_t n, std::optional<double> tol, bool parallel);

Quat s3_point(double psi, double theta, double phi);
MapFn s3_identity();
MapFn s3_power(int k);
MapFn s3_constant();

// family of based loops parameterized by the 2-sphere whose total space
// generates the third homotopy; t is the loop parameter
MapFn suspension_generator();

struct LoopPeriodResult {
  double loop_side;   // loop-space 2-form paired with the sphere of loops
  double volume_side; // Cartan 3-form over the cylinder, halved
};

LoopPeriodResult loop_period(const MapFn& family, std::size_t nt, std::size_t ntheta,
                             std::size_t nphi, bool parallel);

} // namespace lieper
