#include <benchmark/benchmark.h>

#include <random>

#include "ringgray/codes.hpp"
#include "ringgray/gray.hpp"

using namespace ringgray;

namespace {

GeneratorMatrix random_matrix(int r, std::size_t k, std::size_t n, std::uint64_t seed) {
    const RingParams p(r);
    std::mt19937_64 rng(seed);
    std::vector<Word> rows(k);
    for (auto& row : rows)
        for (std::size_t j = 0; j < n; ++j) row.push_back(RingElement::from_index(rng() % p.ring_size(), p));
    return GeneratorMatrix(rows);
}

std::vector<BitVector> image_words(int r, std::size_t k, std::size_t n, MapId map) {
    return binary_image(enumerate_codewords(random_matrix(r, k, n, 17)), map).words;
}

}  // namespace

static void BM_CarletGray(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::uint64_t x = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(carlet_gray(x, m));
        x = (x + 1) & ((std::uint64_t{1} << m) - 1);
    }
}
BENCHMARK(BM_CarletGray)->Arg(4)->Arg(6)->Arg(10);

static void BM_Enumerate(benchmark::State& state) {
    const auto g = random_matrix(3, 2, static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_codewords(g));
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(4)->Arg(8);

static void BM_PairwiseHamming(benchmark::State& state) {
    const auto words = image_words(3, 2, static_cast<std::size_t>(state.range(0)), MapId::Phi5);
    for (auto _ : state) benchmark::DoNotOptimize(min_hamming_distance_image(words));
    state.counters["words"] = static_cast<double>(words.size());
}
BENCHMARK(BM_PairwiseHamming)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SpanDim(benchmark::State& state) {
    const auto words = image_words(3, 2, static_cast<std::size_t>(state.range(0)), MapId::Phi5);
    for (auto _ : state) benchmark::DoNotOptimize(f2_span_dim(words));
}
BENCHMARK(BM_SpanDim)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
