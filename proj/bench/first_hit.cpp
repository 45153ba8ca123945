#include <benchmark/benchmark.h>

#include "slemmakit/sampling.hpp"

using namespace slemmakit;

namespace {

// S(g) is inside S(f), so the whole stream is scanned
const Polynomial& g_full() {
  static Polynomial g = parse_polynomial("x1^2*x2 - x3^3 + x1*x2*x3 - 1", 3);
  return g;
}
const Polynomial& f_full() {
  static Polynomial f = g_full() + parse_polynomial("x1^4 + x2^4 + 1", 3);
  return f;
}

template <bool Parallel>
void scan(benchmark::State& state) {
  SamplingConfig cfg;
  cfg.budget = static_cast<std::size_t>(state.range(0));
  auto gen = [&](std::size_t i) { return inclusion_candidates(g_full(), i, cfg); };
  auto test = [&](const RationalVector& y) { return g_full().evaluate(y) >= 0 && f_full().evaluate(y) < 0; };
  for (auto _ : state) {
    auto hit = Parallel ? first_hit_parallel(cfg.budget, gen, test) : first_hit_serial(cfg.budget, gen, test);
    benchmark::DoNotOptimize(hit);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FirstHitSerial(benchmark::State& s) { scan<false>(s); }
void BM_FirstHitParallel(benchmark::State& s) { scan<true>(s); }

}  // namespace

BENCHMARK(BM_FirstHitSerial)->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FirstHitParallel)->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
