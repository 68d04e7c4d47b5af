#include <subrep/classify.hpp>
#include <subrep/construct.hpp>
#include <subrep/oracle.hpp>

#include <benchmark/benchmark.h>

using namespace subrep;

namespace {

void BM_Survey(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(survey(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_Survey)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_OracleFlower(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("e" + std::to_string(i));
        if (i > 0) {
            covers.emplace_back("e0", names.back());
        }
    }
    const Poset p = poset_from_cover(names, covers);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_subrep(p, n));
    }
}
BENCHMARK(BM_OracleFlower)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

void BM_BuildAndVerify(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("e" + std::to_string(i));
        if (i > 0 && i < n / 2) {
            covers.emplace_back(names[i - 1], names[i]);
        } else if (i >= n / 2) {
            covers.emplace_back(names[n / 2 - 1], names[i]);
        }
    }
    const Poset p = poset_from_cover(names, covers);
    for (auto _ : state) {
        const SubRepMap g = build_g(p);
        benchmark::DoNotOptimize(verify_subrep(p, g));
    }
}
BENCHMARK(BM_BuildAndVerify)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
