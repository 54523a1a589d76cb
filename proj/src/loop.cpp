#include "lieper/loop.hpp"

#include "lieper/errors.hpp"

#include <cassert>
#include <cmath>

namespace lieper {

namespace {

std::vector<std::vector<double>> mat_to_double(const MatQ& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = rat_double(m.at(i, j));
  return out;
}

std::vector<double> apply_double(const std::vector<std::vector<double>>& m,
                                 const std::vector<double>& v) {
  std::vector<double> out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

MatQ invert(const MatQ& m, const char* code) {
  auto inv = solve(m, MatQ::identity(m.rows()));
  if (!inv) throw DomainError(code, "matrix is singular");
  return *inv;
}

} // namespace

SampledTwistedSection sample_section(std::size_t n,
                                     const std::function<std::vector<double>(double)>& f) {
  SampledTwistedSection s;
  s.n = n;
  s.samples.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    s.samples.push_back(f(static_cast<double>(j) / static_cast<double>(n)));
  return s;
}

void check_twist(const SampledTwistedSection& f, const MatQ& phi, double tol) {
  if (f.samples.size() != f.n + 1) throw DomainError("bad_input", "sample count must be n+1");
  MatQ phi_inv = invert(phi, "singular_twist");
  auto pim = mat_to_double(phi_inv);
  std::vector<double> expect = apply_double(pim, f.samples.front());
  double scale = 1.0, worst = 0.0;
  for (double x : f.samples.front()) scale = std::max(scale, std::fabs(x));
  for (std::size_t i = 0; i < expect.size(); ++i)
    worst = std::max(worst, std::fabs(expect[i] - f.samples.back()[i]));
  if (worst > tol * scale)
    throw DomainError("twist_mismatch", "closing sample does not match the twist of the start");
}

std::vector<double> extended_sample(const SampledTwistedSection& f, const MatQ& phi, long j) {
  const long n = static_cast<long>(f.n);
  if (j >= 0 && j <= n) return f.samples[static_cast<std::size_t>(j)];
  if (j < 0) {
    auto v = extended_sample(f, phi, j + n);
    return apply_double(mat_to_double(phi), v);
  }
  auto v = extended_sample(f, phi, j - n);
  return apply_double(mat_to_double(invert(phi, "singular_twist")), v);
}

std::vector<double> derivative_sample(const SampledTwistedSection& f, const MatQ& phi, long j) {
  const double n = static_cast<double>(f.n);
  auto m2 = extended_sample(f, phi, j - 2);
  auto m1 = extended_sample(f, phi, j - 1);
  auto p1 = extended_sample(f, phi, j + 1);
  auto p2 = extended_sample(f, phi, j + 2);
  std::vector<double> d(m2.size());
  for (std::size_t c = 0; c < d.size(); ++c)
    d[c] = (m2[c] - 8.0 * m1[c] + 8.0 * p1[c] - p2[c]) * n / 12.0;
  return d;
}

std::vector<double> integral_simpson(const SampledTwistedSection& f) {
  if (f.n < 2 || f.n % 2 != 0)
    throw DomainError("bad_input", "Simpson integration needs an even interval count");
  const std::size_t dim = f.samples.front().size();
  std::vector<double> acc(dim, 0.0);
  for (std::size_t j = 0; j <= f.n; ++j) {
    double w = (j == 0 || j == f.n) ? 1.0 : ((j % 2) ? 4.0 : 2.0);
    for (std::size_t c = 0; c < dim; ++c) acc[c] += w * f.samples[j][c];
  }
  for (double& x : acc) x /= 3.0 * static_cast<double>(f.n);
  return acc;
}

std::size_t matrix_order(const MatQ& m, std::size_t bound) {
  MatQ id = MatQ::identity(m.rows());
  MatQ p = m;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  throw DomainError("order_bound_exceeded", "matrix order exceeds the search bound");
}

CokerFixedReport coker_equals_fixed(const MatQ& phi_v, std::size_t order_bound) {
  CokerFixedReport r;
  r.order = matrix_order(phi_v, order_bound);
  const std::size_t q = phi_v.rows();
  MatQ delta = phi_v - MatQ::identity(q);

  std::vector<RatVec> relations;
  for (std::size_t j = 0; j < q; ++j) {
    RatVec col(q);
    for (std::size_t i = 0; i < q; ++i) col[i] = delta.at(i, j);
    relations.push_back(col);
  }
  QuotientSpace coker(q, relations);
  r.dim_coker = coker.dim();

  MatQ fixed = nullspace(delta); // rows
  r.fixed_basis = fixed;
  r.dim_fixed = fixed.rows();

  MatQ p(q, q);
  MatQ power = MatQ::identity(q);
  for (std::size_t k = 0; k < r.order; ++k) {
    p = p + power;
    power = power * phi_v;
  }
  r.averaging = p.scaled(Rat(1, static_cast<long>(r.order)));

  // express P . section(e_i) in the fixed basis
  MatQ cols = r.averaging * coker.section(); // q x dim_coker
  if (r.dim_fixed == r.dim_coker && r.dim_coker > 0) {
    auto sol = solve(fixed.transpose(), cols);
    if (sol) {
      r.iso = *sol;
      r.ok = rank(r.iso) == r.dim_coker;
    }
  } else if (r.dim_fixed == r.dim_coker) {
    r.ok = true; // both trivial
  }
  return r;
}

TwistedLoopCocycle::TwistedLoopCocycle(const LieAlgebra& g, const LinearMap& phi)
    : g_(g), phi_(phi), kappa_(UniversalForm(g).kappa_u()) {
  if (!is_automorphism(g_, phi_))
    throw DomainError("not_morphism", "twist must be an algebra automorphism");
  UniversalForm u(g_);
  kappa_ = u.kappa_u();
  phiv_ = induced_map_on_v(u, phi_, MorphismKind::automorphism);
  finish_setup();
}

TwistedLoopCocycle::TwistedLoopCocycle(const LieAlgebra& g, const LinearMap& phi,
                                       const SymBilinearForm& kappa, const MatQ& phi_v)
    : g_(g), phi_(phi), kappa_(kappa), phiv_(phi_v) {
  if (!is_automorphism(g_, phi_))
    throw DomainError("not_morphism", "twist must be an algebra automorphism");
  if (!is_invariant(g_, kappa_))
    throw DomainError("not_invariant", "coefficient form must be invariant");
  // phi_v kappa(x,y) = kappa(phi x, phi y) on all basis pairs
  const std::size_t n = g_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    RatVec pi(n), pj(n);
    for (std::size_t a = 0; a < n; ++a) pi[a] = phi_.at(a, i);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < n; ++a) pj[a] = phi_.at(a, j);
      RatVec lhs = phiv_.apply(kappa_.at(i, j));
      RatVec rhs = kappa_.eval(pi, pj);
      for (std::size_t d = 0; d < lhs.size(); ++d)
        if (lhs[d] != rhs[d])
          throw DomainError("incompatible_kappa",
                            "value twist does not intertwine the coefficient form");
    }
  }
  finish_setup();
}

void TwistedLoopCocycle::finish_setup() {
  const std::size_t q = phiv_.rows();
  MatQ delta = phiv_ - MatQ::identity(q);
  std::vector<RatVec> relations;
  for (std::size_t j = 0; j < q; ++j) {
    RatVec col(q);
    for (std::size_t i = 0; i < q; ++i) col[i] = delta.at(i, j);
    relations.push_back(col);
  }
  coker_ = QuotientSpace(q, relations);

  const std::size_t n = g_.dim(), d = kappa_.value_dim();
  ktensor_.assign(n * n * d, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t v = 0; v < d; ++v)
        ktensor_[(i * n + j) * d + v] = rat_double(kappa_.at(i, j)[v]);

  proj_.assign(coker_.dim() * q, 0.0);
  for (std::size_t i = 0; i < coker_.dim(); ++i)
    for (std::size_t j = 0; j < q; ++j) proj_[i * q + j] = rat_double(coker_.projection().at(i, j));
}

std::vector<double> TwistedLoopCocycle::project_value(const std::vector<double>& ambient) const {
  const std::size_t q = phiv_.rows();
  std::vector<double> out(coker_.dim(), 0.0);
  for (std::size_t i = 0; i < coker_.dim(); ++i)
    for (std::size_t j = 0; j < q; ++j) out[i] += proj_[i * q + j] * ambient[j];
  return out;
}

std::vector<double> TwistedLoopCocycle::pairing_integral(const SampledTwistedSection& f,
                                                         const SampledTwistedSection& g) const {
  if (f.n != g.n) throw DomainError("bad_input", "sections must share a sample grid");
  check_twist(f, phi_);
  check_twist(g, phi_);
  const std::size_t n = g_.dim(), d = kappa_.value_dim();

  SampledTwistedSection integrand;
  integrand.n = f.n;
  integrand.samples.resize(f.n + 1, std::vector<double>(d, 0.0));
  for (std::size_t j = 0; j <= f.n; ++j) {
    auto gp = derivative_sample(g, phi_, static_cast<long>(j));
    auto& out = integrand.samples[j];
    const auto& fv = f.samples[j];
    for (std::size_t a = 0; a < n; ++a) {
      if (fv[a] == 0.0) continue;
      for (std::size_t b = 0; b < n; ++b) {
        const double w = fv[a] * gp[b];
        if (w == 0.0) continue;
        const double* kv = &ktensor_[(a * n + b) * d];
        for (std::size_t v = 0; v < d; ++v) out[v] += w * kv[v];
      }
    }
  }
  return integral_simpson(integrand);
}

std::vector<double> TwistedLoopCocycle::omega(const SampledTwistedSection& f,
                                              const SampledTwistedSection& g) const {
  return project_value(pairing_integral(f, g));
}

SampledTwistedSection TwistedLoopCocycle::bracket_sections(const SampledTwistedSection& f,
                                                           const SampledTwistedSection& g) const {
  if (f.n != g.n) throw DomainError("bad_input", "sections must share a sample grid");
  const std::size_t n = g_.dim();
  SampledTwistedSection out;
  out.n = f.n;
  out.samples.resize(f.n + 1, std::vector<double>(n, 0.0));
  for (std::size_t s = 0; s <= f.n; ++s)
    for (std::size_t i = 0; i < n; ++i) {
      if (f.samples[s][i] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double w = f.samples[s][i] * g.samples[s][j];
        if (w == 0.0) continue;
        for (std::size_t k = 0; k < n; ++k) {
          const Rat& c = g_.c(i, j, k);
          if (c != 0) out.samples[s][k] += w * rat_double(c);
        }
      }
    }
  return out;
}

double TwistedLoopCocycle::cocycle_residual(const SampledTwistedSection& f,
                                            const SampledTwistedSection& g,
                                            const SampledTwistedSection& h) const {
  auto fg = bracket_sections(f, g);
  auto gh = bracket_sections(g, h);
  auto hf = bracket_sections(h, f);
  auto a = omega(fg, h);
  auto b = omega(gh, f);
  auto c = omega(hf, g);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::fabs(a[i] + b[i] + c[i]));
  return worst;
}

std::vector<double> a5_forward(const QuotientSpace& coker, const SampledTwistedSection& f) {
  auto total = integral_simpson(f);
  std::vector<double> out(coker.dim(), 0.0);
  for (std::size_t i = 0; i < coker.dim(); ++i)
    for (std::size_t j = 0; j < total.size(); ++j)
      out[i] += rat_double(coker.projection().at(i, j)) * total[j];
  return out;
}

SampledTwistedSection a5_inverse(const MatQ& phi_v, const std::vector<double>& v, std::size_t n) {
  MatQ inv = invert(phi_v, "singular_twist");
  auto pim = mat_to_double(inv);
  std::vector<double> w = apply_double(pim, v);
  return sample_section(n, [&](double t) {
    const double s = t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); // smoothstep, integral 1/2
    std::vector<double> out(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) out[c] = (1.0 - s) * v[c] + s * w[c];
    return out;
  });
}

} // namespace lieper
