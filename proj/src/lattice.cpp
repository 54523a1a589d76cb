#include "lieper/lattice.hpp"

#include "lieper/errors.hpp"
#include "lieper/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace lieper {

namespace {

Int rat_round_nearest(const Rat& r) {
  // round half away from zero keeps |mu| <= 1/2 after size reduction
  Int p = numerator(r), q = denominator(r);
  Int twice = 2 * p;
  Int res;
  if (twice >= 0)
    res = (twice + q) / (2 * q);
  else
    res = -((-twice + q) / (2 * q));
  return res;
}

} // namespace

GeneratedSubgroup::GeneratedSubgroup(std::vector<std::string> constants,
                                     std::vector<SymbolicVector> generators)
    : constants_(std::move(constants)), generators_(std::move(generators)) {
  if (constants_.empty() || constants_[0] != "1")
    throw DomainError("bad_input", "constant list must start with \"1\"");
  if (generators_.empty()) throw DomainError("bad_input", "no generators");
  ambient_ = generators_[0].coeffs.rows();
  for (const auto& g : generators_)
    if (g.coeffs.rows() != ambient_ || g.coeffs.cols() != constants_.size())
      throw DomainError("bad_input", "generator coefficient shape mismatch");
}

void GeneratedSubgroup::set_values(std::vector<double> values) {
  if (values.size() != constants_.size() || values[0] != 1.0)
    throw DomainError("bad_input", "constant values must match the list, slot 0 = 1");
  values_ = std::move(values);
}

std::vector<double> GeneratedSubgroup::numeric_generator(std::size_t i) const {
  if (!values_) throw DomainError("bad_input", "no numeric values for constants");
  std::vector<double> v(ambient_, 0.0);
  for (std::size_t a = 0; a < ambient_; ++a)
    for (std::size_t j = 0; j < constants_.size(); ++j)
      v[a] += rat_double(generators_[i].coeffs.at(a, j)) * (*values_)[j];
  return v;
}

namespace {

// generators flattened over (ambient x constants) coordinates, with one global
// denominator cleared so that integer relations are preserved
struct ScaledRows {
  MatZ t;    // m x (ambient*k)
  Int scale; // original = t / scale
};

ScaledRows scaled_rows(const GeneratedSubgroup& g) {
  const std::size_t m = g.generators().size();
  const std::size_t d = g.ambient_dim() * g.n_constants();
  Int scale = 1;
  for (const auto& gen : g.generators())
    for (std::size_t a = 0; a < gen.coeffs.rows(); ++a)
      for (std::size_t j = 0; j < gen.coeffs.cols(); ++j) {
        const Int den = denominator(gen.coeffs.at(a, j));
        scale = lcm(scale, den);
      }
  MatZ t(m, d);
  for (std::size_t i = 0; i < m; ++i) {
    const MatQ& c = g.generators()[i].coeffs;
    for (std::size_t a = 0; a < c.rows(); ++a)
      for (std::size_t j = 0; j < c.cols(); ++j) {
        Rat v = c.at(a, j) * scale;
        assert(denominator(v) == 1);
        t.at(i, a * g.n_constants() + j) = numerator(v);
      }
  }
  return {std::move(t), std::move(scale)};
}

} // namespace

ZRankResult z_rank(const GeneratedSubgroup& g) {
  ScaledRows sr = scaled_rows(g);
  MatZ rel = left_kernel_z(sr.t);
  return ZRankResult{g.generators().size() - rel.rows(), std::move(rel)};
}

std::size_t span_rank(const GeneratedSubgroup& g) {
  // matrix of real entries, rows = ambient coordinates, cols = generators;
  // entries are affine-linear polynomials in the non-"1" constants
  const std::size_t nvars = g.n_constants() - 1;
  std::vector<std::vector<MultiPoly>> m(
      g.ambient_dim(), std::vector<MultiPoly>(g.generators().size(), MultiPoly(nvars)));
  for (std::size_t col = 0; col < g.generators().size(); ++col) {
    const MatQ& c = g.generators()[col].coeffs;
    for (std::size_t a = 0; a < g.ambient_dim(); ++a) {
      MultiPoly p = MultiPoly::constant(nvars, c.at(a, 0));
      for (std::size_t j = 1; j < g.n_constants(); ++j) {
        MultiPoly term = MultiPoly::variable(nvars, j - 1);
        p = p + term * MultiPoly::constant(nvars, c.at(a, j));
      }
      m[a][col] = p;
    }
  }
  return poly_rank(std::move(m));
}

MatZ lll_reduce(MatZ basis, const Rat& delta) {
  const std::size_t n = basis.rows(), d = basis.cols();
  if (n <= 1) return basis;

  auto dot = [&](std::size_t i, std::size_t j) {
    Rat s(0);
    for (std::size_t c = 0; c < d; ++c) s += Rat(basis.at(i, c)) * Rat(basis.at(j, c));
    return s;
  };

  // exact Gram-Schmidt data, recomputed after structural changes (dims are
  // small everywhere this is used)
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> bstar_sq(n, Rat(0));
  std::vector<std::vector<Rat>> bstar(n, std::vector<Rat>(d, Rat(0)));

  auto recompute = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < d; ++c) bstar[i][c] = Rat(basis.at(i, c));
      for (std::size_t j = 0; j < i; ++j) {
        if (bstar_sq[j] == 0) {
          mu[i][j] = 0;
          continue;
        }
        Rat proj(0);
        for (std::size_t c = 0; c < d; ++c) proj += Rat(basis.at(i, c)) * bstar[j][c];
        mu[i][j] = proj / bstar_sq[j];
        for (std::size_t c = 0; c < d; ++c) bstar[i][c] -= mu[i][j] * bstar[j][c];
      }
      Rat sq(0);
      for (std::size_t c = 0; c < d; ++c) sq += bstar[i][c] * bstar[i][c];
      bstar_sq[i] = sq;
    }
  };

  recompute();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      if (abs(numerator(mu[k][j])) * 2 > denominator(mu[k][j])) {
        Int r = rat_round_nearest(mu[k][j]);
        basis.addmul_row(k, j, -r);
        recompute();
      }
    }
    Rat lhs = bstar_sq[k];
    Rat rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar_sq[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      basis.swap_rows(k, k - 1);
      recompute();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  (void)dot;
  return basis;
}

namespace {

// numeric span rank by modified Gram-Schmidt with a relative tolerance
std::size_t numeric_rank(const std::vector<std::vector<double>>& vecs, double tol) {
  std::vector<std::vector<double>> basis;
  double scale = 1.0;
  for (const auto& v : vecs)
    for (double x : v) scale = std::max(scale, std::fabs(x));
  for (auto v : vecs) {
    for (const auto& b : basis) {
      double num = 0, den = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        num += v[i] * b[i];
        den += b[i] * b[i];
      }
      double f = num / den;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * b[i];
    }
    double norm = 0;
    for (double x : v) norm += x * x;
    if (std::sqrt(norm) > tol * scale) basis.push_back(v);
  }
  return basis.size();
}

struct NumericRelations {
  std::vector<std::vector<Int>> relations;
  std::size_t z_rank_estimate;
};

NumericRelations numeric_relations(const GeneratedSubgroup& g, double tol) {
  const std::size_t m = g.generators().size();
  const std::size_t n = g.ambient_dim();
  const double scale_big = 1e14;
  const double coeff_bound = 1e6;

  std::vector<std::vector<double>> vals(m);
  double vmax = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    vals[i] = g.numeric_generator(i);
    for (double x : vals[i]) vmax = std::max(vmax, std::fabs(x));
  }

  MatZ b(m, m + n);
  for (std::size_t i = 0; i < m; ++i) {
    b.at(i, i) = 1;
    for (std::size_t c = 0; c < n; ++c)
      b.at(i, m + c) = Int(std::llround(vals[i][c] / vmax * scale_big));
  }
  MatZ red = lll_reduce(std::move(b));

  NumericRelations out;
  std::vector<RatVec> accepted;
  for (std::size_t r = 0; r < red.rows(); ++r) {
    std::vector<Int> a(m);
    double linf = 0, l1 = 0;
    for (std::size_t i = 0; i < m; ++i) {
      a[i] = red.at(r, i);
      double av = std::fabs(a[i].convert_to<double>());
      linf = std::max(linf, av);
      l1 += av;
    }
    if (linf == 0 || linf > coeff_bound) continue;
    // verify the candidate against the raw double data
    double resid = 0;
    for (std::size_t c = 0; c < n; ++c) {
      double s = 0;
      for (std::size_t i = 0; i < m; ++i) s += a[i].convert_to<double>() * vals[i][c];
      resid = std::max(resid, std::fabs(s));
    }
    if (resid > tol * std::max(1.0, l1) * vmax) continue;
    RatVec av(m);
    for (std::size_t i = 0; i < m; ++i) av[i] = Rat(a[i]);
    accepted.push_back(av);
    out.relations.push_back(std::move(a));
  }
  std::size_t rel_rank = accepted.empty() ? 0 : rank(MatQ::from_rows(accepted, m));
  out.z_rank_estimate = m - rel_rank;
  return out;
}

// small nonzero group elements demonstrating non-discreteness, via LLL on the
// numeric generator values
std::vector<std::vector<double>> accumulation_demo(const GeneratedSubgroup& g, double eps,
                                                   std::size_t count) {
  const std::size_t m = g.generators().size();
  const std::size_t n = g.ambient_dim();
  std::vector<std::vector<double>> vals(m);
  for (std::size_t i = 0; i < m; ++i) vals[i] = g.numeric_generator(i);

  for (double scale : {1e8, 1e10, 1e12, 1e14}) {
    MatZ b(m, m + n);
    for (std::size_t i = 0; i < m; ++i) {
      b.at(i, i) = 1;
      for (std::size_t c = 0; c < n; ++c) b.at(i, m + c) = Int(std::llround(vals[i][c] * scale));
    }
    MatZ red = lll_reduce(std::move(b));
    // smallest nonzero element among reduced rows
    double best = 1e300;
    std::vector<double> best_elt;
    for (std::size_t r = 0; r < red.rows(); ++r) {
      std::vector<double> elt(n, 0.0);
      bool nonzero_comb = false;
      for (std::size_t i = 0; i < m; ++i) {
        double a = red.at(r, i).convert_to<double>();
        if (a != 0) nonzero_comb = true;
        for (std::size_t c = 0; c < n; ++c) elt[c] += a * vals[i][c];
      }
      if (!nonzero_comb) continue;
      double norm = 0;
      for (double x : elt) norm = std::max(norm, std::fabs(x));
      if (norm > 0 && norm < best) {
        best = norm;
        best_elt = elt;
      }
    }
    if (!best_elt.empty() && best * static_cast<double>(count + 1) <= eps) {
      std::vector<std::vector<double>> out;
      for (std::size_t k = 1; k <= count; ++k) {
        std::vector<double> p(n);
        for (std::size_t c = 0; c < n; ++c) p[c] = best_elt[c] * static_cast<double>(k);
        out.push_back(p);
      }
      return out;
    }
  }
  return {};
}

} // namespace

DiscretenessResult is_discrete(const GeneratedSubgroup& g, bool numeric) {
  DiscretenessResult res;
  const std::size_t m = g.generators().size();

  if (numeric) {
    if (!g.values()) throw DomainError("bad_input", "numeric mode needs constant values");
    const double tol = 1e-9;
    std::vector<std::vector<double>> vals(m);
    for (std::size_t i = 0; i < m; ++i) vals[i] = g.numeric_generator(i);
    std::size_t sr = numeric_rank(vals, tol);
    NumericRelations nr = numeric_relations(g, tol);
    res.z_rank = nr.z_rank_estimate;
    res.span_rank = sr;
    if (nr.z_rank_estimate == sr) {
      res.verdict = Verdict::likely_discrete;
    } else {
      res.verdict = Verdict::likely_not_discrete;
      res.accumulation_points = accumulation_demo(g, 1e-6, m + 1);
    }
    return res;
  }

  ZRankResult zr = z_rank(g);
  std::size_t sr = span_rank(g);
  res.z_rank = zr.rank;
  res.span_rank = sr;
  assert(zr.rank >= sr); // Q-span always at least as big as the real span

  if (zr.rank == sr) {
    res.verdict = Verdict::discrete;
    ScaledRows srows = scaled_rows(g);
    HnfResult h = hnf(srows.t);
    for (std::size_t r = 0; r < h.rank; ++r) {
      SymbolicVector sv;
      sv.coeffs = MatQ(g.ambient_dim(), g.n_constants());
      for (std::size_t a = 0; a < g.ambient_dim(); ++a)
        for (std::size_t j = 0; j < g.n_constants(); ++j)
          sv.coeffs.at(a, j) = Rat(h.h.at(r, a * g.n_constants() + j), srows.scale);
      res.lattice_basis.push_back(std::move(sv));
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Int> row(srows.t.cols());
      for (std::size_t c = 0; c < srows.t.cols(); ++c) row[c] = srows.t.at(i, c);
      auto coords = solve_in_hnf(h, row);
      assert(coords); // generators lie in their own row lattice
      res.generator_coords.push_back(*coords);
    }
  } else {
    res.verdict = Verdict::not_discrete;
    // greedy Z-independent generator subset of size z_rank; its real span is
    // at most span_rank < z_rank, which is the non-discreteness witness
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < m && res.witness_indices.size() < zr.rank; ++i) {
      RatVec flat(g.ambient_dim() * g.n_constants());
      for (std::size_t a = 0; a < g.ambient_dim(); ++a)
        for (std::size_t j = 0; j < g.n_constants(); ++j)
          flat[a * g.n_constants() + j] = g.generators()[i].coeffs.at(a, j);
      rows.push_back(flat);
      if (rank(MatQ::from_rows(rows, flat.size())) == rows.size())
        res.witness_indices.push_back(i);
      else
        rows.pop_back();
    }
    if (g.values()) res.accumulation_points = accumulation_demo(g, 1e-6, m + 1);
  }
  return res;
}

GeneratedSubgroup image_under_projection(const GeneratedSubgroup& g, const MatQ& p) {
  if (p.cols() != g.ambient_dim()) throw DomainError("bad_input", "projection shape mismatch");
  std::vector<SymbolicVector> gens;
  for (const auto& gen : g.generators()) gens.push_back(SymbolicVector{p * gen.coeffs});
  GeneratedSubgroup out(g.constants(), std::move(gens));
  if (g.values()) {
    // numeric values survive a projection untouched
    out.set_values(*g.values());
  }
  return out;
}

GeneratedSubgroup torus_period_group(const Rat& c) {
  SymbolicVector one, h;
  one.coeffs = MatQ(1, 1);
  one.coeffs.at(0, 0) = 1;
  h.coeffs = MatQ(1, 1);
  h.coeffs.at(0, 0) = c;
  return GeneratedSubgroup({"1"}, {one, h});
}

GeneratedSubgroup torus_period_group_symbolic(const std::string& name) {
  SymbolicVector one, h;
  one.coeffs = MatQ(1, 2);
  one.coeffs.at(0, 0) = 1;
  h.coeffs = MatQ(1, 2);
  h.coeffs.at(0, 1) = 1;
  return GeneratedSubgroup({"1", name}, {one, h});
}

double simpson_mean(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  if (n < 3 || n % 2 == 0) throw DomainError("bad_input", "need an odd sample count (even N)");
  const std::size_t intervals = n - 1;
  double s = samples.front() + samples.back();
  for (std::size_t i = 1; i < intervals; ++i) s += samples[i] * ((i % 2) ? 4.0 : 2.0);
  return s / (3.0 * static_cast<double>(intervals));
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::discrete: return "discrete";
    case Verdict::not_discrete: return "not_discrete";
    case Verdict::likely_discrete: return "likely_discrete";
    case Verdict::likely_not_discrete: return "likely_not_discrete";
  }
  return "?";
}

} // namespace lieper
