#pragma once

#include "lieper/lie.hpp"
#include "lieper/matq.hpp"
#include "lieper/vform.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace lieper {

// Section of a flat algebra bundle over the circle, twisted by an algebra
// automorphism phi: f(t+1) = phi^{-1} f(t). Stored as n+1 equally spaced
// samples on [0,1] with f[n] = phi^{-1} f[0].
struct SampledTwistedSection {
  std::size_t n = 0;                        // intervals; even for Simpson
  std::vector<std::vector<double>> samples; // n+1 rows
};

SampledTwistedSection sample_section(std::size_t n,
                                     const std::function<std::vector<double>(double)>& f);

// closing-sample consistency with the twist; throws twist_mismatch
void check_twist(const SampledTwistedSection& f, const MatQ& phi, double tol = 1e-10);

// twist-aware sample access outside 0..n: f[j<0] = phi f[j+n], f[j>n] = phi^{-1} f[j-n]
std::vector<double> extended_sample(const SampledTwistedSection& f, const MatQ& phi, long j);

// 4th-order five-point derivative at sample j in 0..n, wrapping through the twist
std::vector<double> derivative_sample(const SampledTwistedSection& f, const MatQ& phi, long j);

// per-coordinate composite Simpson integral over [0,1]
std::vector<double> integral_simpson(const SampledTwistedSection& f);

// multiplicative order of a rational matrix, or order_bound_exceeded
std::size_t matrix_order(const MatQ& m, std::size_t bound = 512);

struct CokerFixedReport {
  std::size_t order = 0;
  std::size_t dim_coker = 0;
  std::size_t dim_fixed = 0;
  MatQ fixed_basis; // rows
  MatQ averaging;   // (1/order) sum of powers
  MatQ iso;         // cokernel coords -> fixed-basis coords
  bool ok = false;  // dims agree and iso is invertible
};

// For a finite-order map the cokernel and the fixed space of (map - id) have
// the same dimension, and averaging over the powers realizes the isomorphism
// [v] -> P v.
CokerFixedReport coker_equals_fixed(const MatQ& phi_v, std::size_t order_bound = 512);

// The 2-cocycle on a twisted loop algebra: omega(f,g) is the class of
// int_0^1 kappa(f, g') dt in the cokernel of (phi_v - id) acting on values.
class TwistedLoopCocycle {
 public:
  // coefficients in the universal invariant form
  TwistedLoopCocycle(const LieAlgebra& g, const LinearMap& phi);
  // explicit invariant form with a given action on its values; enforces
  // phi_v kappa(x,y) = kappa(phi x, phi y) (incompatible_kappa)
  TwistedLoopCocycle(const LieAlgebra& g, const LinearMap& phi, const SymBilinearForm& kappa,
                     const MatQ& phi_v);

  const LieAlgebra& algebra() const { return g_; }
  const LinearMap& phi() const { return phi_; }
  const MatQ& phi_v() const { return phiv_; }
  const QuotientSpace& coker() const { return coker_; }

  // raw pairing integral in ambient value coordinates
  std::vector<double> pairing_integral(const SampledTwistedSection& f,
                                       const SampledTwistedSection& g) const;
  // its cokernel class, i.e. the cocycle value
  std::vector<double> omega(const SampledTwistedSection& f,
                            const SampledTwistedSection& g) const;

  SampledTwistedSection bracket_sections(const SampledTwistedSection& f,
                                         const SampledTwistedSection& g) const;

  // max-norm of the cokernel class of omega([f,g],h) + omega([g,h],f) +
  // omega([h,f],g); decays at the quadrature rate in n
  double cocycle_residual(const SampledTwistedSection& f, const SampledTwistedSection& g,
                          const SampledTwistedSection& h) const;

  std::vector<double> project_value(const std::vector<double>& ambient) const;

 private:
  void finish_setup();

  LieAlgebra g_;
  LinearMap phi_;
  SymBilinearForm kappa_;
  MatQ phiv_;
  QuotientSpace coker_;
  std::vector<double> ktensor_;  // [i][j][d] flattened, kappa coefficients
  std::vector<double> proj_;     // cokernel projection, flattened doubles
};

// Integral class map on value-space sections (twist phi_v) and its one-sided
// inverse built from the smoothstep interpolation between v and phi_v^{-1} v;
// the round trip is the identity on cokernel classes.
std::vector<double> a5_forward(const QuotientSpace& coker, const SampledTwistedSection& f);
SampledTwistedSection a5_inverse(const MatQ& phi_v, const std::vector<double>& v, std::size_t n);

} // namespace lieper
