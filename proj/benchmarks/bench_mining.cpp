#include <benchmark/benchmark.h>

#include "coloc/measures.hpp"
#include "coloc/nullmodels.hpp"
#include "coloc/pipeline.hpp"

using namespace coloc;

namespace {

void BM_expected_support(benchmark::State& state) {
    auto dataset = gen_synthetic_assoc(1);
    TransactionizeOptions opts;
    GridSpec grid = grid_covering(dataset, 0.25, opts.buffer, nullptr);
    auto txs = get_transactions(dataset, grid, opts);
    Pattern pattern = make_pattern({"C1", "C2", "D"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(expected_support(pattern, txs));
    }
    state.counters["transactions"] = static_cast<double>(txs.transactions.size());
}

void BM_mine_pipeline(benchmark::State& state) {
    RunConfig cfg;
    cfg.grid_spacing = 0.5;
    cfg.runs = static_cast<int>(state.range(0));
    cfg.consequent = "D";
    cfg.max_antecedent = 2;
    cfg.master_seed = 5;
    cfg.null_strategy = NullStrategy::fully_random;
    auto dataset = gen_synthetic_assoc(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(execute_mine(cfg, dataset));
    }
}

}  // namespace

BENCHMARK(BM_expected_support);
BENCHMARK(BM_mine_pipeline)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
