#include <biham/errors.hpp>
#include <biham/io.hpp>
#include <biham/models.hpp>

#include <string>

#include "doctest.h"
#include "helpers.hpp"

using namespace biham;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_structure_text(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::InternalInconsistency;
}

const char* kHeader = R"({"name": "t", "dim": 2, "vars": ["a", "b"], )";

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("stored flat example matches the catalog") {
    StructureFile s = parse_structure_file(std::string(BIHAM_DATA_DIR) + "/flat_k3.json");
    ModelSpec m = flat_kronecker(2);
    CHECK(s.name == "flat_kronecker:k=2");
    CHECK(s.structure.p1 == m.structure.p1);
    CHECK(s.structure.p2 == m.structure.p2);
    REQUIRE(s.families.size() == 1);
    CHECK(s.families[0].coeffs == m.families[0].coeffs);
    CHECK(serialize_structure(s) == serialize_structure(structure_from_model(m)));
  }

  TEST_CASE("round trip of catalog exports") {
    for (const char* spec : {"open_toda:k=2", "periodic_toda:k=3", "two_family", "sl2_shift", "jordan_model:k=2,mu=1/3"}) {
      StructureFile s = structure_from_model(make_model(spec));
      const std::string text = serialize_structure(s);
      StructureFile back = parse_structure_text(text);
      CHECK_MESSAGE(back.structure.p1 == s.structure.p1, spec);
      CHECK(back.structure.p2 == s.structure.p2);
      CHECK(back.families.size() == s.families.size());
      CHECK(back.genericity == s.genericity);
      CHECK(serialize_structure(back) == text);
    }
  }

  TEST_CASE("validation errors") {
    CHECK(kind_of(std::string(kHeader) + R"("P1": [{"i": 0, "j": 0, "coeff": "a"}], "P2": []})") ==
          ErrorKind::Validation);
    CHECK(kind_of(std::string(kHeader) + R"("P1": [{"i": 0, "j": 5, "coeff": "a"}], "P2": []})") ==
          ErrorKind::Validation);
    CHECK(kind_of(std::string(kHeader) +
                  R"("P1": [{"i": 0, "j": 1, "coeff": "a"}, {"i": 1, "j": 0, "coeff": "a"}], "P2": []})") ==
          ErrorKind::Validation);
    CHECK(kind_of(R"({"name": "t", "dim": 3, "vars": ["a", "b"], "P1": [], "P2": []})") ==
          ErrorKind::DimensionMismatch);
    CHECK(kind_of(std::string(kHeader) + R"("P1": [{"i": 0, "j": 1, "coeff": "a +"}], "P2": []})") ==
          ErrorKind::Parse);
  }

  TEST_CASE("consistent duplicates are accepted") {
    StructureFile s = parse_structure_text(
        std::string(kHeader) + R"("P1": [{"i": 0, "j": 1, "coeff": "a"}, {"i": 1, "j": 0, "coeff": "-a"}], "P2": []})");
    CHECK(s.structure.p1(1, 0) == testing::expr("-a", s.structure.ring()));
  }

  TEST_CASE("syntax errors carry a position") {
    try {
      parse_structure_text("{\n  \"dim\": 2,\n  \"vars\": [\"a\" \"b\"]\n}");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      const std::string what = e.what();
      CHECK(what.find("line 3") != std::string::npos);
      CHECK(what.find("column") != std::string::npos);
    }
  }

  TEST_CASE("pencil files") {
    SkewPencil p = epsilon_pencil(testing::q("1/2"));
    SkewPencil back = parse_pencil_text(serialize_pencil(p));
    CHECK(back.a() == p.a());
    CHECK(back.b() == p.b());
    CHECK_THROWS_AS(parse_pencil_text(R"({"n": 2, "A": [["0", "1"], ["1", "0"]], "B": [["0", "0"], ["0", "0"]]})"),
                    Error);
  }

  TEST_CASE("single bivector files") {
    ModelSpec v3 = open_toda(1);
    PoissonStructure back = parse_poisson_text(serialize_poisson(v3.structure.p2));
    CHECK(back == v3.structure.p2);
  }

  TEST_CASE("family and chain files") {
    const Ring r = open_toda(1).structure.ring();
    LambdaFamily f = parse_family_text(R"({"degree": 1, "coeffs": ["v0*v2 - v1^2", "v0 + v2"]})", r);
    CHECK(f.degree() == 1);
    CHECK(f.coeffs[1] == testing::expr("v0 + v2", r));
    LenardChain c = parse_chain_text(R"({"functions": ["v0 + v2", "v0*v2 - v1^2"], "anchored": true})", r);
    CHECK(c.functions.size() == 2);
    CHECK(c.anchored);
    CHECK_THROWS_AS(parse_family_text(R"({"degree": 2, "coeffs": ["v0"]})", r), Error);
  }
}
