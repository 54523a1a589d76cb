#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace lieper {

// Exact scalar type used by all structural computations. cpp_rational keeps
// p/q in canonical reduced form (gcd(p,q)=1, q>0) after every operation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parse "p", "-p", "p/q". Throws DomainError(bad_input) on malformed text or
// zero denominator.
Rat parse_rat(const std::string& text);

// Canonical form back out: "p" or "p/q" with q > 1.
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

// Value vectors (entries of a form with values in R^d).
using RatVec = std::vector<Rat>;

RatVec rv_zero(std::size_t d);
void rv_add(RatVec& a, const RatVec& b);
void rv_axpy(RatVec& a, const Rat& c, const RatVec& b); // a += c*b
bool rv_is_zero(const RatVec& a);
std::vector<double> rv_double(const RatVec& a);

} // namespace lieper
