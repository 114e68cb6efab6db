#include <biham/analysis.hpp>
#include <biham/errors.hpp>

#include "doctest.h"
#include "helpers.hpp"

using namespace biham;

TEST_SUITE("analysis") {
  TEST_CASE("sample_point stays in range") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      for (const Rational& x : sample_point(rng, 4)) {
        CHECK(abs(x) <= 10);
        CHECK(x.get_den() <= 5);
      }
    }
  }

  TEST_CASE("sampling is seed-deterministic") {
    AnalysisInput in = analysis_input(open_toda(2));
    CHECK(sample_generic_points(in, 5, 7) == sample_generic_points(in, 5, 7));
    CHECK(sample_generic_points(in, 5, 7) != sample_generic_points(in, 5, 8));
    for (const Point& p : sample_generic_points(in, 5, 7)) {
      CHECK(p[1] != 0);
      CHECK(p[3] != 0);
    }
  }

  TEST_CASE("sampling exhaustion") {
    ModelSpec m = open_toda(1);
    // x0 - x0 vanishes everywhere.
    m.genericity.push_back(Poly::variable(m.structure.ring(), 0) - Poly::variable(m.structure.ring(), 0));
    try {
      sample_generic_points(analysis_input(m), 3, 1);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SamplingExhausted);
    }
  }

  TEST_CASE("reports are deterministic and meet expectations") {
    for (const char* spec : {"flat_kronecker:k=3", "open_toda:k=2", "periodic_toda:k=3", "jordan_model:k=1,mu=2",
                             "two_family", "sl2_shift", "m_f:f=x+y"}) {
      AnalysisInput in = analysis_input(make_model(spec));
      AnalysisOptions opts;
      opts.samples = 4;
      opts.seed = 3;
      AnalysisReport a = run_analyze(in, opts), b = run_analyze(in, opts);
      CHECK(emit_report(a, ReportFormat::Json) == emit_report(b, ReportFormat::Json));
      CHECK_MESSAGE(a.certificates_passed(), spec);
      CHECK_MESSAGE(a.expectations_met(), spec);
      CHECK(a.points.size() == 4);
    }
  }

  TEST_CASE("explicit point") {
    AnalysisOptions opts;
    opts.point = testing::pt({"1", "0", "2"});
    AnalysisReport r = run_analyze(analysis_input(open_toda(1)), opts);
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0].pencil_type == "{K1, K1, K1}");
    CHECK(r.points[0].corank_p1 == 3);
  }

  TEST_CASE("markdown mentions the conjectural path") {
    AnalysisOptions opts;
    opts.samples = 2;
    const std::string single = emit_report(run_analyze(analysis_input(two_family(testing::poly("t^2", make_ring({"t"})))), opts), ReportFormat::Markdown);
    CHECK(single.find("conjectural path unused; criterion Inconclusive (degree bound)") != std::string::npos);
    const std::string multi = emit_report(run_analyze(analysis_input(periodic_toda(3)), opts), ReportFormat::Markdown);
    CHECK(multi.find("conjectural path used") != std::string::npos);
    CHECK(multi.find("status: ok") != std::string::npos);
  }

  TEST_CASE("parse_report round trip") {
    AnalysisOptions opts;
    opts.samples = 3;
    AnalysisReport r = run_analyze(analysis_input(periodic_toda(3)), opts);
    const std::string text = emit_report(r, ReportFormat::Json);
    AnalysisReport back = parse_report(text);
    CHECK(emit_report(back, ReportFormat::Json) == text);
    CHECK(back.modal_type == "{K5, K1}");
  }

  TEST_CASE("structure files without expectations") {
    StructureFile s = parse_structure_file(std::string(BIHAM_DATA_DIR) + "/flat_k3.json");
    AnalysisOptions opts;
    opts.samples = 2;
    AnalysisReport r = run_analyze(analysis_input(s), opts);
    CHECK(r.expectations.empty());
    CHECK(r.certificates_passed());
    CHECK(r.modal_type == "{K3}");
  }

  TEST_CASE("broken structures report failed certificates") {
    ModelSpec m = open_toda(2);
    m.structure.p2.set(0, 2, -m.structure.p2(0, 2));
    AnalysisOptions opts;
    opts.samples = 2;
    AnalysisReport r = run_analyze(analysis_input(m), opts);
    CHECK_FALSE(r.certificates_passed());
    CHECK(emit_report(r, ReportFormat::Json).find("\"status\": \"mismatch\"") != std::string::npos);
  }
}
