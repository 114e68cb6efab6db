#include <biham/lenard.hpp>
#include <biham/models.hpp>

#include "doctest.h"
#include "helpers.hpp"

using namespace biham;
using testing::expr;
using testing::pt;

namespace {

LenardChain chain(std::initializer_list<const char*> fs, const Ring& r, bool anchored) {
  LenardChain c;
  for (const char* f : fs) c.functions.push_back(expr(f, r));
  c.anchored = anchored;
  return c;
}

}  // namespace

TEST_SUITE("lenard") {
  TEST_CASE("chain_from_family") {
    ModelSpec k5 = flat_kronecker(3);
    const Ring& r5 = k5.structure.ring();
    LenardChain c = chain_from_family(k5.structure, k5.families[0]);
    REQUIRE(c.functions.size() == 3);
    CHECK(c.functions[0] == expr("x4", r5));
    CHECK(c.functions[1] == expr("x2", r5));
    CHECK(c.functions[2] == expr("x0", r5));
    CHECK(c.anchored);

    ModelSpec v3 = open_toda(1);
    const Ring& r3 = v3.structure.ring();
    LenardChain t = chain_from_family(v3.structure, v3.families[0]);
    REQUIRE(t.functions.size() == 2);
    CHECK(t.functions[0] == expr("v0 + v2", r3));
    CHECK(t.functions[1] == expr("v0*v2 - v1^2", r3));

    ModelSpec mf = m_f(testing::poly("x + y", make_ring({"x", "y"})));
    const Ring& rf = mf.structure.ring();
    LenardChain h = chain_from_family(mf.structure, mf.families[0]);
    REQUIRE(h.functions.size() == 2);
    CHECK(h.functions[0] == expr("y", rf));
    CHECK(h.functions[1] == expr("x", rf));
  }

  TEST_CASE("verify_chain") {
    for (const ModelSpec& m : {flat_kronecker(3), open_toda(1), m_f(testing::poly("x + y", make_ring({"x", "y"})))})
      CHECK(verify_chain(m.structure, chain_from_family(m.structure, m.families[0])));
    ModelSpec k5 = flat_kronecker(3);
    Certificate skip = verify_chain(k5.structure, chain({"x4", "x0"}, k5.structure.ring(), true));
    CHECK_FALSE(skip);
    CHECK(skip.detail.find("i=0") != std::string::npos);
    CHECK(verify_chain(k5.structure, chain({"x4"}, k5.structure.ring(), true)));
  }

  TEST_CASE("involution_check") {
    ModelSpec v3 = open_toda(1);
    const Ring& r = v3.structure.ring();
    CHECK(involution_check(chain_from_family(v3.structure, v3.families[0]).functions, v3.structure));
    CHECK(involution_check({expr("v0^2 + v1", r), expr("v0^2 + v1", r)}, v3.structure));
    CHECK_FALSE(involution_check({expr("v0", r), expr("v1", r)}, v3.structure));
  }

  TEST_CASE("integrability_verdict") {
    ModelSpec v5 = open_toda(2);
    IntegrabilityVerdict s = integrability_verdict(v5.structure, {chain_from_family(v5.structure, v5.families[0])},
                                                   pt({"1", "2", "3", "-1", "2"}));
    CHECK(s.outcome == IntegrabilityOutcome::StrictlyLenardIntegrable);
    CHECK(s.independent == 3);
    CHECK(s.action_dimension == 3);

    ModelSpec v6 = periodic_toda(3);
    std::vector<LenardChain> chains;
    for (const auto& f : v6.families) chains.push_back(chain_from_family(v6.structure, f));
    IntegrabilityVerdict p = integrability_verdict(v6.structure, chains, pt({"1", "2", "3", "1", "-1", "3"}));
    CHECK(p.outcome == IntegrabilityOutcome::StrictlyLenardIntegrable);
    CHECK(p.independent == 4);
    CHECK(p.action_dimension == 4);

    ModelSpec j = jordan_model(1, MuLabel{false, 2});
    IntegrabilityVerdict o =
        integrability_verdict(j.structure, {chain_from_family(j.structure, j.families[0])}, pt({"1", "1"}));
    CHECK(o.outcome == IntegrabilityOutcome::JordanObstructed);

    IntegrabilityVerdict few = integrability_verdict(v5.structure, {chain({"v0 + v2 + v4"}, v5.structure.ring(), true)},
                                                     pt({"1", "2", "3", "-1", "2"}));
    CHECK(few.outcome == IntegrabilityOutcome::Insufficient);
  }

  TEST_CASE("telescoping identity") {
    ModelSpec v7 = open_toda(3);
    LenardChain c = chain_from_family(v7.structure, v7.families[0]);
    const std::size_t n = c.functions.size();
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j)
        CHECK(bracket_of(v7.structure.p1, c.functions[i], c.functions[j]) ==
              bracket_of(v7.structure.p1, c.functions[i - 1], c.functions[j + 1]));
  }

  TEST_CASE("union of catalog chains is in involution") {
    ModelSpec v6 = periodic_toda(3);
    std::vector<RationalFunction> all;
    for (const auto& f : v6.families) {
      auto c = chain_from_family(v6.structure, f);
      all.insert(all.end(), c.functions.begin(), c.functions.end());
    }
    CHECK(involution_check(all, v6.structure));
  }
}
