#include "lieper/rational.hpp"

#include "lieper/errors.hpp"

#include <cctype>

namespace lieper {

namespace {

Int parse_int(const std::string& s) {
  if (s.empty()) throw DomainError("bad_input", "empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw DomainError("bad_input", "sign without digits: '" + s + "'");
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("bad_input", "not an integer literal: '" + s + "'");
  }
  return Int(s);
}

} // namespace

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int p = parse_int(text.substr(0, slash));
  Int q = parse_int(text.substr(slash + 1));
  if (q == 0) throw DomainError("bad_input", "zero denominator: '" + text + "'");
  return Rat(p, q);
}

std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double rat_double(const Rat& r) { return r.convert_to<double>(); }

RatVec rv_zero(std::size_t d) { return RatVec(d, Rat(0)); }

void rv_add(RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

void rv_axpy(RatVec& a, const Rat& c, const RatVec& b) {
  if (c == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

bool rv_is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::vector<double> rv_double(const RatVec& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = rat_double(a[i]);
  return out;
}

} // namespace lieper
