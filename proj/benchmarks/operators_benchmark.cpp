#include <benchmark/benchmark.h>

#include <vector>

#include "massprec/krylov.hpp"
#include "massprec/operators.hpp"
#include "massprec/spectrum.hpp"

namespace massprec {
namespace {

void BM_Laplacian(benchmark::State& state) {
  const GridSpec spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::vector<double> in(spec.size(), 1.0);
  std::vector<double> out(spec.size());
  for (auto _ : state) {
    kernels::laplacian(spec, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.size()));
}
BENCHMARK(BM_Laplacian)->Args({2, 256})->Args({3, 64})->Args({3, 128});

void BM_Mass(benchmark::State& state) {
  const GridSpec spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::vector<double> in(spec.size(), 1.0);
  std::vector<double> out(spec.size());
  std::vector<double> scratch(spec.size());
  for (auto _ : state) {
    kernels::mass(spec, in, out, scratch);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.size()));
}
BENCHMARK(BM_Mass)->Args({2, 256})->Args({3, 64})->Args({3, 128});

void BM_Solve(benchmark::State& state) {
  const GridSpec spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  SolveConfig cfg;
  cfg.record_history = false;
  cfg.precondition = state.range(2) ? Preconditioner::kMass : Preconditioner::kNone;
  const auto b = make_rhs(spec, RhsKind::kOnes);
  for (auto _ : state) {
    auto report = cg_solve(spec, b, GridVector(spec), cfg);
    benchmark::DoNotOptimize(report.iterations);
    state.counters["iterations"] = static_cast<double>(report.iterations);
  }
}
BENCHMARK(BM_Solve)
    ->Args({2, 128, 0})
    ->Args({2, 128, 1})
    ->Args({3, 32, 0})
    ->Args({3, 32, 1})
    ->Unit(benchmark::kMillisecond);

void BM_SpectrumReport(benchmark::State& state) {
  const GridSpec spec(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_report(OperatorKind::kPreconditioned, spec).kappa);
  }
}
BENCHMARK(BM_SpectrumReport)->Arg(64)->Arg(1023)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace massprec

BENCHMARK_MAIN();
