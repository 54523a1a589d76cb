#include "lieper/vform.hpp"

#include "lieper/errors.hpp"

#include <cassert>

namespace lieper {

std::size_t sym_dim(std::size_t n) { return n * (n + 1) / 2; }

std::size_t sym_index(std::size_t n, std::size_t i, std::size_t j) {
  assert(i <= j && j < n);
  // row i starts after i rows of lengths n, n-1, ...
  return i * n - i * (i - 1) / 2 + (j - i);
}

RatVec sym_coords(std::size_t n, const RatVec& x, const RatVec& y) {
  RatVec out = rv_zero(sym_dim(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      std::size_t a = std::min(i, j), b = std::max(i, j);
      out[sym_index(n, a, b)] += x[i] * y[j];
    }
  }
  return out;
}

MatQ UniversalForm::action_matrix(std::size_t k) const {
  const std::size_t n = g_.dim();
  MatQ m(sym_dim(n), sym_dim(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::size_t col = sym_index(n, i, j);
      // [e_k, e_i] v e_j
      for (std::size_t a = 0; a < n; ++a) {
        if (g_.c(k, i, a) == 0) continue;
        std::size_t p = std::min(a, j), q = std::max(a, j);
        m.at(sym_index(n, p, q), col) += g_.c(k, i, a);
      }
      // e_i v [e_k, e_j]
      for (std::size_t b = 0; b < n; ++b) {
        if (g_.c(k, j, b) == 0) continue;
        std::size_t p = std::min(i, b), q = std::max(i, b);
        m.at(sym_index(n, p, q), col) += g_.c(k, j, b);
      }
    }
  return m;
}

UniversalForm::UniversalForm(const LieAlgebra& g) : g_(g), ku_(g.dim(), 0) {
  const std::size_t n = g_.dim();
  const std::size_t sd = sym_dim(n);

  std::vector<RatVec> relations;
  relations.reserve(n * sd);
  for (std::size_t k = 0; k < n; ++k) {
    MatQ act = action_matrix(k);
    for (std::size_t col = 0; col < sd; ++col) {
      RatVec v(sd);
      bool nz = false;
      for (std::size_t r = 0; r < sd; ++r) {
        v[r] = act.at(r, col);
        nz = nz || v[r] != 0;
      }
      if (nz) relations.push_back(std::move(v));
    }
  }

  q_ = QuotientSpace(sd, relations);

  ku_ = SymBilinearForm(n, q_.dim());
  RatVec ei(n, Rat(0)), ej(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RatVec s = rv_zero(sd);
      s[sym_index(n, i, j)] = 1;
      ku_.set(i, j, q_.project(s));
    }

  // kappa_u must itself be invariant; cheap sanity check of the construction
  assert(is_invariant(g_, ku_));
}

RatVec UniversalForm::pair(const RatVec& x, const RatVec& y) const {
  return q_.project(sym_coords(g_.dim(), x, y));
}

LinearMap factor_through(const UniversalForm& u, const SymBilinearForm& beta) {
  const LieAlgebra& g = u.algebra();
  const std::size_t n = g.dim();
  if (beta.n() != n) throw DomainError("bad_input", "form dimension mismatch");
  if (!is_invariant(g, beta)) throw DomainError("not_invariant", "form is not invariant");

  // solve K X = B where rows of K are kappa_u(e_i,e_j), rows of B the beta values
  const std::size_t q = u.dim(), d = beta.value_dim();
  MatQ k(sym_dim(n), q), b(sym_dim(n), d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::size_t r = sym_index(n, i, j);
      const RatVec& ku = u.kappa_u().at(i, j);
      const RatVec& bv = beta.at(i, j);
      for (std::size_t t = 0; t < q; ++t) k.at(r, t) = ku[t];
      for (std::size_t t = 0; t < d; ++t) b.at(r, t) = bv[t];
    }
  auto x = solve(k, b);
  // invariance makes the system consistent; kappa_u spans V so the solution
  // is unique
  if (!x) throw DomainError("not_invariant", "factorization system inconsistent");
  return x->transpose();
}

std::vector<MatQ> centroid(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // unknowns: phi as n^2 flat vector (row-major); equations: phi ad_k = ad_k phi
  MatQ sys(n * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t k = 0; k < n; ++k) {
    MatQ ad = g.ad_basis(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // (phi ad - ad phi)_{ij} = sum_a phi_{ia} ad_{aj} - ad_{ia} phi_{aj}
        for (std::size_t a = 0; a < n; ++a) {
          sys.at(row, i * n + a) += ad.at(a, j);
          sys.at(row, a * n + j) -= ad.at(i, a);
        }
        ++row;
      }
  }
  MatQ basis = nullspace(sys);
  std::vector<MatQ> out;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    MatQ phi(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) phi.at(i, j) = basis.at(r, i * n + j);
    out.push_back(std::move(phi));
  }
  return out;
}

namespace {

// S^2 of a linear map phi (automorphism mode): e_i v e_j -> phi e_i v phi e_j.
MatQ sym_square(const LinearMap& phi) {
  const std::size_t n = phi.rows();
  MatQ m(sym_dim(n), sym_dim(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RatVec pi(n), pj(n);
      for (std::size_t k = 0; k < n; ++k) {
        pi[k] = phi.at(k, i);
        pj[k] = phi.at(k, j);
      }
      RatVec col = sym_coords(n, pi, pj);
      for (std::size_t r = 0; r < col.size(); ++r) m.at(r, sym_index(n, i, j)) = col[r];
    }
  return m;
}

// Leibniz extension of a derivation: e_i v e_j -> De_i v e_j + e_i v De_j.
MatQ sym_leibniz(const LinearMap& d) {
  const std::size_t n = d.rows();
  MatQ m(sym_dim(n), sym_dim(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::size_t col = sym_index(n, i, j);
      for (std::size_t a = 0; a < n; ++a) {
        if (d.at(a, i) != 0) {
          std::size_t p = std::min(a, j), q = std::max(a, j);
          m.at(sym_index(n, p, q), col) += d.at(a, i);
        }
        if (d.at(a, j) != 0) {
          std::size_t p = std::min(i, a), q = std::max(i, a);
          m.at(sym_index(n, p, q), col) += d.at(a, j);
        }
      }
    }
  return m;
}

} // namespace

MatQ induced_map_on_v(const UniversalForm& u, const LinearMap& phi, MorphismKind kind) {
  const LieAlgebra& g = u.algebra();
  if (phi.rows() != g.dim() || phi.cols() != g.dim())
    throw DomainError("bad_input", "map dimension mismatch");

  MatQ s2;
  if (kind == MorphismKind::automorphism) {
    if (!is_automorphism(g, phi))
      throw DomainError("not_morphism", "map is not a Lie algebra automorphism");
    s2 = sym_square(phi);
  } else {
    if (!is_derivation(g, phi)) throw DomainError("not_morphism", "map is not a derivation");
    s2 = sym_leibniz(phi);
  }

  const QuotientSpace& q = u.quotient();
  MatQ induced = q.projection() * s2 * q.section();
  // the relation span must be preserved, otherwise the map does not descend
  if (!(induced * q.projection() == q.projection() * s2))
    throw DomainError("not_morphism", "map does not descend to the quotient");
  return induced;
}

DecompositionReport verify_decomposition(const UniversalForm& u, const MatQ& radical_basis,
                                         const std::vector<MatQ>& isotypic_bases) {
  const LieAlgebra& g = u.algebra();
  const std::size_t n = g.dim();

  // the supplied pieces must be complementary and span g
  std::vector<RatVec> all;
  std::size_t count = radical_basis.rows();
  for (std::size_t r = 0; r < radical_basis.rows(); ++r) all.push_back(radical_basis.row(r));
  for (const auto& s : isotypic_bases) {
    count += s.rows();
    for (std::size_t r = 0; r < s.rows(); ++r) all.push_back(s.row(r));
  }
  if (count != n || (count > 0 && rank(MatQ::from_rows(all, n)) != n))
    throw DomainError("bad_input", "subspaces are not a complementary spanning family");

  auto span_of = [&](const std::vector<RatVec>& vecs) {
    if (vecs.empty()) return MatQ(0, u.dim());
    return rref(MatQ::from_rows(vecs, u.dim())).r;
  };

  DecompositionReport rep;
  std::vector<RatVec> pieces_concat;

  // V_0 = kappa_u(radical, g)
  std::vector<RatVec> v0;
  for (std::size_t r = 0; r < radical_basis.rows(); ++r) {
    RatVec x = radical_basis.row(r);
    for (std::size_t j = 0; j < n; ++j) {
      RatVec ej(n, Rat(0));
      ej[j] = 1;
      RatVec p = u.pair(x, ej);
      if (!rv_is_zero(p)) v0.push_back(p);
    }
  }
  MatQ v0b = span_of(v0);
  rep.dims.push_back(v0b.rows());
  for (std::size_t r = 0; r < v0b.rows(); ++r) pieces_concat.push_back(v0b.row(r));

  for (const auto& s : isotypic_bases) {
    std::vector<RatVec> vi;
    for (std::size_t a = 0; a < s.rows(); ++a)
      for (std::size_t b = a; b < s.rows(); ++b) {
        RatVec p = u.pair(s.row(a), s.row(b));
        if (!rv_is_zero(p)) vi.push_back(p);
      }
    MatQ vib = span_of(vi);
    rep.dims.push_back(vib.rows());
    for (std::size_t r = 0; r < vib.rows(); ++r) pieces_concat.push_back(vib.row(r));
  }

  std::size_t total = 0;
  for (auto d : rep.dims) total += d;
  std::size_t joint =
      pieces_concat.empty() ? 0 : rank(MatQ::from_rows(pieces_concat, u.dim()));
  rep.direct = joint == total;
  rep.exhaustive = joint == u.dim();
  return rep;
}

} // namespace lieper
