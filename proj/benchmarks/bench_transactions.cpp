#include <benchmark/benchmark.h>

#include "coloc/nullmodels.hpp"
#include "coloc/transactions.hpp"

using namespace coloc;

namespace {

void BM_transactionize(benchmark::State& state) {
    double spacing = 1.0 / static_cast<double>(state.range(0));
    auto dataset = gen_synthetic_assoc(1);
    TransactionizeOptions opts;
    GridSpec grid = grid_covering(dataset, spacing, opts.buffer, nullptr);
    std::size_t transactions = 0;
    for (auto _ : state) {
        auto txs = get_transactions(dataset, grid, opts);
        transactions = txs.transactions.size();
        benchmark::DoNotOptimize(txs);
    }
    state.counters["grid_points"] = static_cast<double>(grid.k3());
    state.counters["transactions"] = static_cast<double>(transactions);
}

void BM_buffer_query(benchmark::State& state) {
    Buffer buf = morph_to_ellipse(Point2D{0, 0}, 2.0, WindVector{3, 4}, 0.3);
    double x = -3.0;
    for (auto _ : state) {
        x += 0.01;
        if (x > 3.0) x = -3.0;
        benchmark::DoNotOptimize(normalized_buffer_distance(Point2D{x, 0.4}, buf));
    }
}

}  // namespace

BENCHMARK(BM_transactionize)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(BM_buffer_query);

BENCHMARK_MAIN();
