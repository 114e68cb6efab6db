#pragma once

#include <biham/io.hpp>
#include <biham/models.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace biham {

struct AnalysisInput {
  std::string identity;
  BihamStructure structure;
  std::vector<LambdaFamily> families;
  std::vector<LenardChain> chains;
  std::vector<Poly> genericity;
  std::optional<Expectations> expected;
};

AnalysisInput analysis_input(const ModelSpec& m);
AnalysisInput analysis_input(const StructureFile& s);

struct AnalysisOptions {
  std::size_t samples = 10;
  std::uint64_t seed = 0;
  std::optional<Point> point;
};

struct PointRecord {
  Point point;
  std::string pencil_type;
  std::size_t corank_p1 = 0;
  std::size_t corank_p2 = 0;
  std::size_t generic_corank = 0;
  std::size_t w1 = 0;
  std::string criterion;
  std::string lax;
  std::string integrability;
};

struct VerdictSummary {
  std::string name;
  std::string value;  // the common outcome over all points, or "mixed"
  std::string reason;
  std::string provenance;
  bool conjectural = false;
  std::vector<std::string> depends_on;
};

struct ExpectationCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool met = true;
};

struct AnalysisReport {
  std::string identity;
  std::string version;
  std::uint64_t seed = 0;
  std::size_t dimension = 0;
  std::size_t sampling_attempts = 0;
  std::vector<Certificate> certificates;
  std::vector<PointRecord> points;
  std::string modal_type;
  std::vector<VerdictSummary> verdicts;
  std::vector<ExpectationCheck> expectations;

  bool certificates_passed() const;
  bool expectations_met() const;
};

// Seed-deterministic rational point: numerators in [-10, 10], denominators in [1, 5].
Point sample_point(std::mt19937_64& rng, std::size_t n);
// Rejection sampling against the genericity inequations and the excluded loci, budget 10x.
std::vector<Point> sample_generic_points(const AnalysisInput& in, std::size_t count, std::uint64_t seed,
                                         std::size_t* attempts = nullptr);

AnalysisReport run_analyze(const AnalysisInput& in, const AnalysisOptions& opts);

enum class ReportFormat { Json, Markdown };
std::string emit_report(const AnalysisReport& r, ReportFormat format);
// Parses a JSON report produced by emit_report.
AnalysisReport parse_report(const std::string& text);

}  // namespace biham
