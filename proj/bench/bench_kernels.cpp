// Serial reference vs OpenMP kernels on synthetic tables.
#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "s3w/kernels.hpp"

using namespace s3w;

namespace {

const Scale kScale{3, 3};

std::vector<ExpertTable> make_tables(std::size_t n, std::size_t m, std::size_t e) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> phi(-3, 3), varphi(-3, 3);
    std::uniform_int_distribution<int> len(1, 4);
    std::vector<ExpertTable> out(e);
    for (std::size_t j = 0; j < e; ++j) {
        auto& t = out[j];
        t.expert_id = "E" + std::to_string(j);
        t.expert_weight = 1.0 / double(e);
        for (std::size_t p = 0; p < n; ++p) t.alternatives.push_back("x" + std::to_string(p));
        for (std::size_t q = 0; q < m; ++q) t.attributes.push_back("a" + std::to_string(q));
        t.cells = Matrix<Element>(n, m);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < m; ++q) {
                std::vector<Term> terms(len(rng));
                for (auto& term : terms) term = {phi(rng), varphi(rng)};
                t.cells(p, q) = Element(std::move(terms));
            }
    }
    return out;
}

void bm_fuse(benchmark::State& state, kernels::Exec exec) {
    const auto tables = make_tables(std::size_t(state.range(0)), 8, 4);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::fuse(exec, tables));
    state.SetItemsProcessed(state.iterations() * state.range(0) * 8);
}

void bm_similarity(benchmark::State& state, kernels::Exec exec) {
    const FusedTable f = kernels::fuse_serial(make_tables(std::size_t(state.range(0)), 8, 2));
    std::vector<std::size_t> cols(8);
    std::iota(cols.begin(), cols.end(), 0);
    const auto profiles = kernels::gradus_profiles_serial(f, cols, kScale);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::similarity(exec, profiles, 0.7));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(bm_fuse, serial, kernels::Exec::serial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(bm_fuse, parallel, kernels::Exec::parallel)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(bm_similarity, serial, kernels::Exec::serial)->RangeMultiplier(4)->Range(64, 2048);
BENCHMARK_CAPTURE(bm_similarity, parallel, kernels::Exec::parallel)->RangeMultiplier(4)->Range(64, 2048);

BENCHMARK_MAIN();
