// Serial reference against the OpenMP run of each verification suite.
#include <benchmark/benchmark.h>

#include "skein/daha.hpp"
#include "skein/suites.hpp"

using namespace skein;

namespace {

void run(benchmark::State& state, const std::string& suite, Execution mode) {
  for (auto _ : state) {
    VerificationReport r = run_suite(suite, mode);
    benchmark::DoNotOptimize(r.checks.data());
  }
}

void casimir(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(daha::casimir_check().is_zero());
}

}  // namespace

BENCHMARK_CAPTURE(run, daha_serial, "daha", Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, daha_parallel, "daha", Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, embedding_serial, "embedding", Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, embedding_parallel, "embedding", Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, laurentmod_serial, "laurentmod", Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, laurentmod_parallel, "laurentmod", Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, solidtorus_serial, "solidtorus", Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, solidtorus_parallel, "solidtorus", Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, curves_serial, "curves", Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, curves_parallel, "curves", Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, all_serial, "all", Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(run, all_parallel, "all", Execution::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(casimir)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
