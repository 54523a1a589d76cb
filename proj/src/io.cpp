#include "lieper/io.hpp"

#include "lieper/errors.hpp"

#include <fstream>
#include <sstream>

namespace lieper {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("bad_input", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json_file(const std::string& path) {
  Json j = Json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) throw DomainError("bad_input", "invalid JSON in " + path);
  return j;
}

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw DomainError("bad_input", "rational entries must be integers or \"p/q\" strings");
}

} // namespace

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw DomainError("bad_input", "algebra JSON needs a \"dim\" field");
  const std::size_t n = j["dim"].get<std::size_t>();
  std::vector<std::string> names;
  if (j.contains("basis")) {
    for (const auto& b : j["basis"]) names.push_back(b.get<std::string>());
    if (names.size() != n) throw DomainError("bad_input", "basis name count != dim");
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  std::vector<Rat> c(n * n * n, Rat(0));
  if (j.contains("brackets"))
    for (const auto& entry : j["brackets"]) {
      if (!entry.is_array() || entry.size() != 3)
        throw DomainError("bad_input", "bracket entries are [i, j, [[k, coeff], ...]]");
      const std::size_t i = entry[0].get<std::size_t>();
      const std::size_t jj = entry[1].get<std::size_t>();
      if (i >= n || jj >= n || i >= jj)
        throw DomainError("bad_input", "bracket indices must satisfy i < j < dim");
      for (const auto& term : entry[2]) {
        const std::size_t k = term[0].get<std::size_t>();
        if (k >= n) throw DomainError("bad_input", "bracket target index out of range");
        Rat v = rat_from_json(term[1]);
        c[(i * n + jj) * n + k] = v;
        c[(jj * n + i) * n + k] = -v;
      }
    }
  return LieAlgebra(n, std::move(names), std::move(c));
}

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  j["basis"] = g.basis_names();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t jj = i + 1; jj < g.dim(); ++jj) {
      Json terms = Json::array();
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (g.c(i, jj, k) != 0) terms.push_back(Json::array({k, rat_str(g.c(i, jj, k))}));
      if (!terms.empty()) brackets.push_back(Json::array({i, jj, terms}));
    }
  j["brackets"] = brackets;
  return j;
}

LieAlgebra algebra_by_name(const std::string& name) {
  if (name == "su2") return algebras::su2();
  if (name == "gl2") return algebras::gl2();
  if (name == "sl2c_real") return algebras::sl2c_real();
  if (name == "su2su2") return algebras::direct_sum(algebras::su2(), algebras::su2());
  if (name.rfind("abelian", 0) == 0) {
    int n = std::atoi(name.c_str() + 7);
    if (n > 0) return algebras::abelian(static_cast<std::size_t>(n));
  }
  throw DomainError("bad_input", "unknown algebra name: " + name);
}

MatQ matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw DomainError("bad_input", "matrix JSON must be an array of rows");
  MatQ m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DomainError("bad_input", "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = rat_from_json(rows[i][c]);
  }
  return m;
}

Json matrix_to_json(const MatQ& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(i, c)));
    rows.push_back(row);
  }
  return rows;
}

GeneratedSubgroup generators_from_json(const Json& j) {
  if (!j.contains("constants") || !j.contains("vectors"))
    throw DomainError("bad_input", "generator JSON needs \"constants\" and \"vectors\"");
  std::vector<std::string> constants;
  for (const auto& c : j["constants"]) constants.push_back(c.get<std::string>());
  std::vector<SymbolicVector> gens;
  for (const auto& vec : j["vectors"]) {
    if (!vec.is_array() || vec.empty())
      throw DomainError("bad_input", "each generator is a list of coordinates");
    SymbolicVector sv;
    sv.coeffs = MatQ(vec.size(), constants.size());
    for (std::size_t a = 0; a < vec.size(); ++a) {
      if (!vec[a].is_array() || vec[a].size() != constants.size())
        throw DomainError("bad_input", "coordinate entries need one coefficient per constant");
      for (std::size_t c = 0; c < constants.size(); ++c)
        sv.coeffs.at(a, c) = rat_from_json(vec[a][c]);
    }
    gens.push_back(std::move(sv));
  }
  GeneratedSubgroup g(std::move(constants), std::move(gens));
  if (j.contains("values")) {
    std::vector<double> vals;
    for (const auto& v : j["values"]) vals.push_back(v.get<double>());
    g.set_values(std::move(vals));
  }
  return g;
}

SampledTwistedSection section_from_json(const Json& j) {
  if (!j.contains("N") || !j.contains("samples"))
    throw DomainError("bad_input", "section JSON needs \"N\" and \"samples\"");
  SampledTwistedSection s;
  s.n = j["N"].get<std::size_t>();
  for (const auto& row : j["samples"]) s.samples.push_back(row.get<std::vector<double>>());
  if (s.samples.size() != s.n + 1)
    throw DomainError("bad_input", "sections need N+1 sample rows");
  return s;
}

Json section_to_json(const SampledTwistedSection& s) {
  Json j;
  j["N"] = s.n;
  j["samples"] = s.samples;
  return j;
}

Json ratvec_to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& bytes) {
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

} // namespace lieper
