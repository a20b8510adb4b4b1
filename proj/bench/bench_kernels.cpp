// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "qfe/euler.hpp"
#include "qfe/search.hpp"

using namespace qfe;

namespace {

SearchConfig sweep() {
  SearchConfig c;
  c.B11 = {1, 4};
  c.B22 = {1, 3};
  c.B12 = {1, 2};
  c.D1 = {1, 2};
  c.D2 = {1, 1};
  c.K1 = {1, 1};
  c.K2 = {1, 1};
  c.gamma = {1, 1};
  c.C1 = {-1, 0};
  c.C2 = {-1, 0};
  c.hi1 = 2;
  c.hi2 = 1;
  c.sizes = {2, 3};
  c.keep_cap = 16;
  return c;
}

void BM_SearchSerial(benchmark::State& st) {
  const auto cfg = sweep();
  for (auto _ : st) benchmark::DoNotOptimize(run_search_serial(cfg));
}

void BM_SearchParallel(benchmark::State& st) {
  auto cfg = sweep();
  cfg.jobs = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(run_search(cfg));
}

const SeriesParams kScan = SeriesParams::parse("2,2,2,0,0,1,1,1,2,1,1,-1");

void BM_ProductScanSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(product_scan_serial(kScan, {}, {0, 1}));
}

void BM_ProductScanParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(product_scan(kScan, {}, {0, 1}));
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductScanParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
