// Per-stage cost of the semigroup pipeline over fixed (d1, d2) stripes. The
// stripes span small, middle and near-limit products d1 d2.

#include <benchmark/benchmark.h>

#include <vector>

#include "sg3/report.hpp"
#include "sg3/scan.hpp"

namespace {

std::vector<sg3::GeneratorTriple> stripe(const benchmark::State& state) {
  return sg3::stripe_triples(state.range(0), state.range(1),
                             sg3::D3Rule::kMaxAllowed);
}

void stripe_args(benchmark::internal::Benchmark* b) {
  b->Args({10, 37})->Args({25, 99})->Args({3, 833})->Args({49, 51});
}

void BM_Profile(benchmark::State& state) {
  const auto triples = stripe(state);
  for (auto _ : state) {
    for (const auto& t : triples) benchmark::DoNotOptimize(sg3::profile(t));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(triples.size()));
}
BENCHMARK(BM_Profile)->Apply(stripe_args);

void BM_Syzygies(benchmark::State& state) {
  const auto triples = stripe(state);
  for (auto _ : state) {
    for (const auto& t : triples) {
      const auto p = sg3::profile(t);
      const auto num = sg3::hilbert_numerator(p);
      benchmark::DoNotOptimize(sg3::extract_syzygies(num, p, 6));
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(triples.size()));
}
BENCHMARK(BM_Syzygies)->Apply(stripe_args);

void BM_IdentitySuite(benchmark::State& state) {
  const auto triples = stripe(state);
  for (auto _ : state) {
    for (const auto& t : triples) {
      const auto p = sg3::profile(t);
      const auto num = sg3::hilbert_numerator(p);
      const auto data = sg3::extract_syzygies(num, p, 6);
      for (int r = 0; r <= 3; ++r) {
        benchmark::DoNotOptimize(sg3::verify_identity(data, p, r));
      }
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(triples.size()));
}
BENCHMARK(BM_IdentitySuite)->Apply(stripe_args);

void BM_Analyze(benchmark::State& state) {
  const auto triples = stripe(state);
  for (auto _ : state) {
    for (const auto& t : triples) {
      benchmark::DoNotOptimize(sg3::analyze(t));
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(triples.size()));
}
BENCHMARK(BM_Analyze)->Apply(stripe_args);

void BM_CsvRow(benchmark::State& state) {
  const auto triples = stripe(state);
  std::vector<sg3::ScanRecord> records;
  for (const auto& t : triples) {
    records.push_back(sg3::make_record(t, sg3::analyze(t)));
  }
  for (auto _ : state) {
    for (const auto& rec : records) {
      benchmark::DoNotOptimize(sg3::csv_row(rec, 7));
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(records.size()));
}
BENCHMARK(BM_CsvRow)->Args({10, 37});

}  // namespace

BENCHMARK_MAIN();
