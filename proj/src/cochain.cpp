#include "lieper/cochain.hpp"

#include "lieper/errors.hpp"

#include <algorithm>
#include <cassert>

namespace lieper {

std::vector<std::vector<std::size_t>> Cochain::tuples(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p == 0 || p > n) return out;
  std::vector<std::size_t> t(p);
  for (std::size_t i = 0; i < p; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    // next strictly increasing tuple in lex order
    std::size_t i = p;
    while (i > 0) {
      --i;
      if (t[i] < n - (p - i)) {
        ++t[i];
        for (std::size_t j = i + 1; j < p; ++j) t[j] = t[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

Cochain::Cochain(std::size_t degree, std::size_t n, std::size_t value_dim)
    : p_(degree), n_(n), d_(value_dim) {
  if (degree < 1 || degree > 4) throw DomainError("degree_overflow", "cochain degree out of range");
  auto ts = tuples(n, degree);
  store_.assign(ts.size(), rv_zero(value_dim));
  // lex rank lookup via flattened tuple keys
  strides_.clear();
  for (const auto& t : ts) {
    std::size_t key = 0;
    for (auto v : t) key = key * n_ + v;
    strides_.push_back(key);
  }
}

std::size_t Cochain::index_of(const std::vector<std::size_t>& idx) const {
  std::size_t key = 0;
  for (auto v : idx) key = key * n_ + v;
  auto it = std::lower_bound(strides_.begin(), strides_.end(), key);
  assert(it != strides_.end() && *it == key);
  return static_cast<std::size_t>(it - strides_.begin());
}

RatVec& Cochain::at_sorted(const std::vector<std::size_t>& idx) {
  return store_[index_of(idx)];
}

const RatVec& Cochain::at_sorted(const std::vector<std::size_t>& idx) const {
  return store_[index_of(idx)];
}

RatVec Cochain::get(const std::vector<std::size_t>& idx) const {
  assert(idx.size() == p_);
  std::vector<std::size_t> s = idx;
  // bubble sort, tracking the permutation sign
  int sign = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j + 1 < s.size() - i; ++j) {
      if (s[j] == s[j + 1]) return rv_zero(d_);
      if (s[j] > s[j + 1]) {
        std::swap(s[j], s[j + 1]);
        sign = -sign;
      }
    }
  RatVec v = at_sorted(s);
  if (sign < 0)
    for (auto& e : v) e = -e;
  return v;
}

bool Cochain::is_zero() const {
  for (const auto& v : store_)
    if (!rv_is_zero(v)) return false;
  return true;
}

Cochain ce_differential(const LieAlgebra& g, const Cochain& c) {
  if (c.degree() > 3)
    throw DomainError("degree_overflow", "differential of a degree-4 cochain is not represented");
  const std::size_t n = g.dim(), p = c.degree();
  Cochain out(p + 1, n, c.value_dim());

  for (const auto& t : Cochain::tuples(n, p + 1)) {
    RatVec acc = rv_zero(c.value_dim());
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        // c([x_i, x_j], rest)
        std::vector<std::size_t> rest;
        rest.reserve(p);
        rest.push_back(0); // placeholder for the bracket slot
        for (std::size_t k = 0; k < t.size(); ++k)
          if (k != i && k != j) rest.push_back(t[k]);
        int sgn = ((i + j) % 2 == 0) ? 1 : -1;
        for (std::size_t a = 0; a < n; ++a) {
          const Rat& coef = g.c(t[i], t[j], a);
          if (coef == 0) continue;
          rest[0] = a;
          RatVec term = c.get(rest);
          rv_axpy(acc, sgn > 0 ? coef : -coef, term);
        }
      }
    out.at_sorted(t) = acc;
  }
  return out;
}

Cochain cartan_map(const LieAlgebra& g, const SymBilinearForm& kappa) {
  const std::size_t n = g.dim(), d = kappa.value_dim();
  if (!is_invariant(g, kappa))
    throw DomainError("not_invariant", "Cartan cocycle needs an invariant form");

  auto slice = [&](std::size_t i, std::size_t j, std::size_t k) {
    RatVec v = rv_zero(d);
    for (std::size_t a = 0; a < n; ++a) rv_axpy(v, g.c(i, j, a), kappa.at(a, k));
    return v;
  };

  // alternation, exactly: degenerate slots vanish and cyclic slots agree
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!rv_is_zero(slice(i, j, j)))
        throw DomainError("not_invariant", "Cartan cocycle fails alternation");
  Cochain c3(3, n, d);
  for (const auto& t : Cochain::tuples(n, 3)) {
    RatVec v = slice(t[0], t[1], t[2]);
    RatVec v2 = slice(t[1], t[2], t[0]);
    RatVec v3 = slice(t[2], t[0], t[1]);
    if (v != v2 || v != v3) throw DomainError("not_invariant", "Cartan cocycle fails alternation");
    c3.at_sorted(t) = v;
  }

  if (!ce_differential(g, c3).is_zero())
    throw DomainError("not_closed", "Cartan cocycle is not closed");
  return c3;
}

namespace {

// scalar matrix of d : C^(p) -> C^(p+1); identical on every value column
MatQ differential_matrix(const LieAlgebra& g, std::size_t p) {
  const std::size_t n = g.dim();
  auto dom = Cochain::tuples(n, p);
  auto cod = Cochain::tuples(n, p + 1);
  MatQ m(cod.size(), dom.size());
  for (std::size_t col = 0; col < dom.size(); ++col) {
    Cochain unit(p, n, 1);
    unit.at_sorted(dom[col]) = RatVec{Rat(1)};
    Cochain img = ce_differential(g, unit);
    for (std::size_t row = 0; row < cod.size(); ++row) m.at(row, col) = img.at_sorted(cod[row])[0];
  }
  return m;
}

std::variant<Cochain, NotExactWitness> solve_differential(const LieAlgebra& g, std::size_t p,
                                                          const Cochain& target) {
  const std::size_t n = g.dim(), d = target.value_dim();
  auto dom = Cochain::tuples(n, p);
  auto cod = Cochain::tuples(n, p + 1);
  assert(target.degree() == p + 1);

  MatQ dm = differential_matrix(g, p);
  MatQ rhs(cod.size(), d);
  for (std::size_t r = 0; r < cod.size(); ++r) {
    const RatVec& v = target.at_sorted(cod[r]);
    for (std::size_t t = 0; t < d; ++t) rhs.at(r, t) = v[t];
  }

  auto sol = solve(dm, rhs);
  if (sol) {
    Cochain eta(p, n, d);
    for (std::size_t r = 0; r < dom.size(); ++r) {
      RatVec v(d);
      for (std::size_t t = 0; t < d; ++t) v[t] = sol->at(r, t);
      eta.at_sorted(dom[r]) = v;
    }
    return eta;
  }

  // certify: a functional killing im(d) but not the target
  MatQ ln = left_nullspace(dm);
  MatQ probe = ln * rhs;
  for (std::size_t i = 0; i < probe.rows(); ++i)
    for (std::size_t j = 0; j < probe.cols(); ++j)
      if (probe.at(i, j) != 0) return NotExactWitness{ln.row(i), j};
  throw DomainError("bad_input", "inconsistent solve without certificate"); // unreachable
}

} // namespace

std::variant<Cochain, NotExactWitness> solve_exactness(const LieAlgebra& g, const Cochain& c3) {
  if (c3.degree() != 3) throw DomainError("bad_input", "exactness solve expects a 3-cochain");
  return solve_differential(g, 2, c3);
}

std::variant<Cochain, NotExactWitness> is_coboundary2(const LieAlgebra& g, const Cochain& omega) {
  if (omega.degree() != 2) throw DomainError("bad_input", "expected a 2-cochain");
  if (!ce_differential(g, omega).is_zero())
    throw DomainError("not_closed", "2-cochain is not closed");
  return solve_differential(g, 1, omega);
}

Cochain eta_d(const LieAlgebra& g, const SymBilinearForm& kappa, const LinearMap& d) {
  const std::size_t n = g.dim();
  if (!is_derivation(g, d)) throw DomainError("not_derivation", "map is not a derivation");
  if (!is_kappa_skew(g, kappa, d))
    throw DomainError("not_skew", "derivation is not skew for the form");

  Cochain eta(2, n, kappa.value_dim());
  for (const auto& t : Cochain::tuples(n, 2)) {
    RatVec v = rv_zero(kappa.value_dim());
    for (std::size_t a = 0; a < n; ++a) rv_axpy(v, d.at(a, t[1]), kappa.at(t[0], a));
    eta.at_sorted(t) = v;
  }
  if (!ce_differential(g, eta).is_zero())
    throw DomainError("not_closed", "derivation cocycle failed closedness");
  return eta;
}

Cochain kappa_slice_1cochain(const LieAlgebra& g, const SymBilinearForm& kappa, const RatVec& x0) {
  Cochain lam(1, g.dim(), kappa.value_dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    RatVec ei(g.dim(), Rat(0));
    ei[i] = 1;
    lam.at_sorted({i}) = kappa.eval(x0, ei);
  }
  return lam;
}

} // namespace lieper
