#include "lieper/connection.hpp"

namespace lieper {

std::array<double, 3> fit_cubic_origin(const std::vector<double>& ts,
                                       const std::vector<double>& ys) {
  // normal equations for the design matrix [t, t^2, t^3]
  double m[3][3] = {};
  double rhs[3] = {};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    double powers[3] = {ts[i], ts[i] * ts[i], ts[i] * ts[i] * ts[i]};
    for (int p = 0; p < 3; ++p) {
      rhs[p] += ys[i] * powers[p];
      for (int q = 0; q < 3; ++q) m[p][q] += powers[p] * powers[q];
    }
  }
  // 3x3 Gaussian elimination with partial pivoting
  int perm[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int best = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(m[perm[r]][col]) > std::fabs(m[perm[best]][col])) best = r;
    std::swap(perm[col], perm[best]);
    for (int r = col + 1; r < 3; ++r) {
      double f = m[perm[r]][col] / m[perm[col]][col];
      for (int c = col; c < 3; ++c) m[perm[r]][c] -= f * m[perm[col]][c];
      rhs[perm[r]] -= f * rhs[perm[col]];
    }
  }
  std::array<double, 3> x{};
  for (int col = 2; col >= 0; --col) {
    double s = rhs[perm[col]];
    for (int c = col + 1; c < 3; ++c) s -= m[perm[col]][c] * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(col)] = s / m[perm[col]][col];
  }
  return x;
}

ConnectionPatch<U1Model> u1_xdy_patch() {
  ConnectionPatch<U1Model> p;
  p.a = [](double x, double) {
    return std::array<U1Model::Alg, 2>{U1Model::Alg{0.0}, U1Model::Alg{x}};
  };
  return p;
}

ConnectionPatch<SU2Model> su2_xy_patch() {
  ConnectionPatch<SU2Model> p;
  p.a = [](double x, double y) {
    return std::array<SU2Model::Alg, 2>{SU2Model::Alg{0.0, y, 0.0}, SU2Model::Alg{x, 0.0, 0.0}};
  };
  return p;
}

} // namespace lieper
