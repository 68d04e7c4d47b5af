#include <subrep/poset.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <string>

using namespace subrep;

namespace {

Poset random_poset(std::mt19937_64& rng, std::size_t n, double density) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("e" + std::to_string(i));
    }
    std::bernoulli_distribution edge(density);
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edge(rng)) {
                rel.emplace_back(names[i], names[j]);
            }
        }
    }
    return poset_from_cover(names, rel);
}

void BM_CanonicalCode(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::vector<Poset> cases;
    for (int i = 0; i < 32; ++i) {
        cases.push_back(random_poset(rng, static_cast<std::size_t>(state.range(0)), 0.3));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_code(cases[i++ % cases.size()]));
    }
}
BENCHMARK(BM_CanonicalCode)->DenseRange(4, 10, 2);

// Every point of an antichain has the same degrees; only twin pruning helps.
void BM_CanonicalAntichain(benchmark::State& state) {
    std::vector<std::string> names;
    for (int i = 0; i < state.range(0); ++i) {
        names.push_back("e" + std::to_string(i));
    }
    const Poset p = poset_from_cover(names, {});
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_code(p));
    }
}
BENCHMARK(BM_CanonicalAntichain)->DenseRange(4, 10, 2);

void BM_HeightWidth(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const Poset p = random_poset(rng, static_cast<std::size_t>(state.range(0)), 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(height_width(p));
    }
}
BENCHMARK(BM_HeightWidth)->Arg(16)->Arg(32)->Arg(64);

} // namespace

BENCHMARK_MAIN();
