#include <benchmark/benchmark.h>
#include <biham/analysis.hpp>
#include <biham/models.hpp>
#include <biham/normal_form.hpp>
#include <biham/parse.hpp>

using namespace biham;

namespace {

SkewPencil kronecker_pencil(int k) {
  ModelSpec m = flat_kronecker(k);
  return pencil_at(m.structure, Point(m.structure.dim(), Rational(0)));
}

void BM_DecomposeKronecker(benchmark::State& state) {
  const SkewPencil p = kronecker_pencil(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(p));
}
BENCHMARK(BM_DecomposeKronecker)->DenseRange(2, 6);

void BM_DecomposeJordan(benchmark::State& state) {
  ModelSpec m = jordan_model(static_cast<int>(state.range(0)), MuLabel{false, 2});
  const SkewPencil p = pencil_at(m.structure, Point(m.structure.dim(), Rational(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(p));
}
BENCHMARK(BM_DecomposeJordan)->DenseRange(1, 3);

void BM_DecomposeOpenToda(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  ModelSpec m = open_toda(k);
  const Point p = sample_generic_points(analysis_input(m), 1, 1).front();
  const SkewPencil pencil = pencil_at(m.structure, p);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(pencil));
}
BENCHMARK(BM_DecomposeOpenToda)->DenseRange(1, 4);

void BM_JacobiCheck(benchmark::State& state) {
  ModelSpec m = open_toda(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_check(m.structure.p2));
}
BENCHMARK(BM_JacobiCheck)->DenseRange(1, 3);

void BM_CompatibilityCheck(benchmark::State& state) {
  ModelSpec m = open_toda(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compatibility_check(m.structure.p1, m.structure.p2));
}
BENCHMARK(BM_CompatibilityCheck)->DenseRange(1, 3);

void BM_FamilyCheckPeriodic(benchmark::State& state) {
  ModelSpec m = periodic_toda(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(family_check(m.structure, m.families[0]));
}
BENCHMARK(BM_FamilyCheckPeriodic)->DenseRange(3, 4);

void BM_NormalForm(benchmark::State& state) {
  const Poly f = parse_poly("x + y + x^2*y + x*y^3", make_ring({"x", "y"}));
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form_phi(f, order));
}
BENCHMARK(BM_NormalForm)->DenseRange(4, 8, 2);

void BM_Analyze(benchmark::State& state) {
  const AnalysisInput in = analysis_input(open_toda(static_cast<int>(state.range(0))));
  AnalysisOptions opts;
  opts.samples = 5;
  opts.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(emit_report(run_analyze(in, opts), ReportFormat::Json));
}
BENCHMARK(BM_Analyze)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
