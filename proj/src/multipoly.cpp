#include "lieper/multipoly.hpp"

#include "lieper/errors.hpp"

#include <cassert>

namespace lieper {

MultiPoly MultiPoly::constant(std::size_t nvars, const Rat& c) {
  MultiPoly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t idx) {
  assert(idx < nvars);
  MultiPoly p(nvars);
  Mono m(nvars, 0);
  m[idx] = 1;
  p.add_term(m, Rat(1));
  return p;
}

void MultiPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Mono m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& o) const {
  if (o.is_zero()) throw DomainError("bad_input", "polynomial division by zero");
  MultiPoly rem = *this;
  MultiPoly quot(nvars_);
  // peel leading terms; exact divisibility keeps every step well defined
  while (!rem.is_zero()) {
    const auto& [lm_r, lc_r] = *rem.terms_.rbegin(); // lex-largest monomial
    const auto& [lm_o, lc_o] = *o.terms_.rbegin();
    Mono q(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (lm_r[i] < lm_o[i]) throw DomainError("bad_input", "inexact polynomial division");
      q[i] = lm_r[i] - lm_o[i];
    }
    Rat qc = lc_r / lc_o;
    quot.add_term(q, qc);
    MultiPoly t(nvars_);
    t.add_term(q, qc);
    rem = rem - t * o;
  }
  return quot;
}

std::size_t poly_rank(std::vector<std::vector<MultiPoly>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<bool> row_used(rows, false), col_used(cols, false);
  std::size_t nvars = m[0][0].nvars();
  MultiPoly prev = MultiPoly::constant(nvars, Rat(1));
  std::size_t rank = 0;

  for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
    // full pivot search over the untouched submatrix
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = 0; i < rows && pr == rows; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j] || m[i][j].is_zero()) continue;
        pr = i;
        pc = j;
        break;
      }
    }
    if (pr == rows) break;
    row_used[pr] = true;
    col_used[pc] = true;
    ++rank;
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        // Bareiss update keeps entries polynomial (they are minors of m)
        m[i][j] = (m[pr][pc] * m[i][j] - m[i][pc] * m[pr][j]).divide_exact(prev);
      }
      m[i][pc] = MultiPoly(nvars);
    }
    prev = m[pr][pc];
  }
  return rank;
}

} // namespace lieper
