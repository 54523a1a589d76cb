#pragma once

#include "lieper/lattice.hpp"
#include "lieper/lie.hpp"
#include "lieper/loop.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace lieper {

using Json = nlohmann::json;

// file helpers; throw DomainError(bad_input) on missing or malformed input
std::string read_file(const std::string& path);
Json load_json_file(const std::string& path);

// {"dim": n, "basis": [names], "brackets": [[i, j, [[k, "p/q"], ...]], ...]}
// with 0-based indices, i < j; omitted pairs commute
LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& g);

// built-in algebras by name: su2, gl2, sl2c_real, su2su2, abelian<n>
LieAlgebra algebra_by_name(const std::string& name);

// array of rows, entries "p/q" strings (integers allowed), or {"matrix": rows}
MatQ matrix_from_json(const Json& j);
Json matrix_to_json(const MatQ& m);

// {"constants": ["1", ...], "vectors": [vector, ...], "values": [numbers]?}
// where a vector is a list of ambient coordinates, each a list of one
// coefficient string per constant
GeneratedSubgroup generators_from_json(const Json& j);

// {"N": n, "samples": [[coords], ...]} with n+1 rows
SampledTwistedSection section_from_json(const Json& j);
Json section_to_json(const SampledTwistedSection& s);

Json ratvec_to_json(const RatVec& v);

// FNV-1a 64-bit running hash, for input digests in run reports
constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
std::uint64_t fnv1a(std::uint64_t h, const std::string& bytes);
std::string hex64(std::uint64_t h);

} // namespace lieper
