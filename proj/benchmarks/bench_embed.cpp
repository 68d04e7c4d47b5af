#include <subrep/embed.hpp>

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

void BM_EmbedRandom(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::pair<Poset, Poset>> cases;
    for (int i = 0; i < 64; ++i) {
        cases.emplace_back(random_poset(rng, n / 2, 0.3), random_poset(rng, n, 0.3));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [a, b] = cases[i++ % cases.size()];
        benchmark::DoNotOptimize(find_embedding(a, b));
    }
}
BENCHMARK(BM_EmbedRandom)->Arg(8)->Arg(16)->Arg(24)->Arg(32);

void BM_PatternScan(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const Poset p = random_poset(rng, static_cast<std::size_t>(state.range(0)), 0.2);
    for (auto _ : state) {
        for (PatternKind k : all_patterns) {
            benchmark::DoNotOptimize(contains_pattern(p, k));
        }
    }
}
BENCHMARK(BM_PatternScan)->Arg(10)->Arg(20)->Arg(40);

} // namespace

BENCHMARK_MAIN();
