#include <subrep/pinboard.hpp>

#include <benchmark/benchmark.h>

using namespace subrep;

namespace {

void BM_ThetaWorkedExample(benchmark::State& state) {
    const auto host = parse_simple_pinboard("pin (aleph2,12) (7,aleph3)");
    const auto y = parse_pin_pairs("pin (w1+1,1) (w1,1) (w0+5,2) (w0,1) (30,2) (20,1) (5,aleph0) (3,aleph0)");
    const auto y2 = parse_pin_pairs("pin (w2,2) (w1+10,1) (w1,1) (w0,1) (60,1) (40,1) (30,1) (20,1) (6,aleph1)");
    for (auto _ : state) {
        const PinSubset a = normalize_subset(y, host);
        const PinSubset b = normalize_subset(y2, host);
        benchmark::DoNotOptimize(theta_subset(theta(host, a), theta(host, b)));
        benchmark::DoNotOptimize(pin_embeds(a, b));
    }
}
BENCHMARK(BM_ThetaWorkedExample);

} // namespace

BENCHMARK_MAIN();
