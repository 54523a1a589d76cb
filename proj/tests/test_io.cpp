#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieper/errors.hpp"
#include "lieper/io.hpp"
#include "lieper/lie.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace lieper;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("io_test_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("algebras round trip through their json encoding") {
  for (const char* name : {"su2", "gl2", "sl2c_real", "su2su2", "abelian3"}) {
    LieAlgebra g = algebra_by_name(name);
    Json j = algebra_to_json(g);
    LieAlgebra h = algebra_from_json(j);
    REQUIRE(h.dim() == g.dim());
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = 0; b < g.dim(); ++b)
        for (std::size_t c = 0; c < g.dim(); ++c) CHECK(h.c(a, b, c) == g.c(a, b, c));
  }
  CHECK_THROWS_AS(algebra_by_name("so8"), DomainError);
  CHECK(algebra_by_name("abelian5").dim() == 5);
}

TEST_CASE("algebra json validation rejects malformed structures") {
  Json j = algebra_to_json(algebra_by_name("su2"));
  Json bad = j;
  bad["brackets"][0][0] = 7; // index out of range
  CHECK_THROWS_AS(algebra_from_json(bad), DomainError);
  Json bad2 = j;
  bad2["dim"] = 2; // basis size mismatch
  CHECK_THROWS_AS(algebra_from_json(bad2), DomainError);
}

TEST_CASE("matrices parse from plain arrays and wrapped objects") {
  Json rows = Json::array({Json::array({"1", "3/7"}), Json::array({"-2", "0"})});
  MatQ m = matrix_from_json(rows);
  CHECK(m.at(0, 1) == Rat(3, 7));
  CHECK(m.at(1, 0) == Rat(-2));
  Json wrapped{{"matrix", rows}};
  CHECK(matrix_from_json(wrapped) == m);
  MatQ back = matrix_from_json(matrix_to_json(m));
  CHECK(back == m);

  Json ragged = Json::array({Json::array({"1", "2"}), Json::array({"3"})});
  CHECK_THROWS_AS(matrix_from_json(ragged), DomainError);
}

TEST_CASE("missing and malformed files produce usage errors") {
  try {
    load_json_file("definitely_not_here.json");
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.code() == "bad_input");
  }
  TempFile bad("malformed.json", "{ not json ]");
  try {
    load_json_file(bad.path);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(e.code() == "bad_input");
  }
  TempFile good("wellformed.json", "{\"x\": 3}");
  Json j = load_json_file(good.path);
  CHECK(j["x"] == 3);
}

TEST_CASE("generator files carry constants, vectors and optional values") {
  Json j{{"constants", Json::array({"1", "alpha"})},
         {"vectors", Json::array({Json::array({Json::array({"1", "0"})}),
                                  Json::array({Json::array({"0", "1"})})})},
         {"values", Json::array({1.0, 1.41421356237})}};
  GeneratedSubgroup g = generators_from_json(j);
  CHECK(g.ambient_dim() == 1);
  CHECK(g.n_constants() == 2);
  REQUIRE(g.values().has_value());
  CHECK((*g.values())[1] == doctest::Approx(1.41421356237));
  CHECK(g.generators()[1].coeffs.at(0, 1) == 1);

  Json noval = j;
  noval.erase("values");
  GeneratedSubgroup g2 = generators_from_json(noval);
  CHECK_FALSE(g2.values().has_value());
}

TEST_CASE("section files must close correctly") {
  Json j{{"N", 4},
         {"samples", Json::array({Json::array({1.0}), Json::array({0.5}), Json::array({0.0}),
                                  Json::array({-0.5}), Json::array({-1.0})})}};
  SampledTwistedSection s = section_from_json(j);
  CHECK(s.n == 4);
  CHECK(s.samples[4][0] == -1.0);
  Json rt = section_to_json(s);
  SampledTwistedSection s2 = section_from_json(rt);
  CHECK(s2.samples == s.samples);

  Json bad = j;
  bad["N"] = 6; // sample count no longer matches
  CHECK_THROWS_AS(section_from_json(bad), DomainError);
}

TEST_CASE("digests follow the fnv1a reference values") {
  // reference vectors for 64-bit fnv1a
  CHECK(fnv1a(kFnvOffset, "") == kFnvOffset);
  CHECK(fnv1a(kFnvOffset, "a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a(kFnvOffset, "foobar") == 0x85944171f73967e8ull);
  // incremental hashing equals one-shot hashing
  CHECK(fnv1a(fnv1a(kFnvOffset, "foo"), "bar") == fnv1a(kFnvOffset, "foobar"));
  CHECK(hex64(0xaf63dc4c8601ec8cull) == "af63dc4c8601ec8c");
}
