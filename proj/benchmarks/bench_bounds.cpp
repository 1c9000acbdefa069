#include <benchmark/benchmark.h>

#include "chb/chb.hpp"

using namespace chb;

namespace {

void BM_decompose(benchmark::State& state) {
    Integer r(5), d(10007), s(23);
    for (auto _ : state) {
        Decomposition dec = decompose(r, d, s);
        benchmark::DoNotOptimize(dec.delta);
    }
}
BENCHMARK(BM_decompose);

void BM_castelnuovo_bound(benchmark::State& state) {
    Integer n(7), s(state.range(0));
    for (auto _ : state) {
        Integer g = castelnuovo_bound(n, s);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_castelnuovo_bound)->Arg(100)->Arg(10000);

void BM_halphen_bound(benchmark::State& state) {
    Integer r(5), d(4001), s(17);
    for (auto _ : state) {
        Integer g = halphen_bound(r, d, s);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_halphen_bound);

void BM_flag2_bound(benchmark::State& state) {
    Integer r(6), d(9999), s(25);
    for (auto _ : state) {
        BoundReport rep = flag2_bound(r, d, s);
        benchmark::DoNotOptimize(rep.floor);
    }
}
BENCHMARK(BM_flag2_bound);

void BM_verify_sharp_p5(benchmark::State& state) {
    Integer d(120), s(24), t(6), u(2);
    for (auto _ : state) {
        SharpResult res = verify_sharp_p5(d, s, t, u);
        benchmark::DoNotOptimize(res.attained);
    }
}
BENCHMARK(BM_verify_sharp_p5);

void BM_regime_p5_big(benchmark::State& state) {
    Integer t = 408 * ipow(Integer(3), 3) + 1;
    Integer s = (2 * ipow(t, 4)) / 3 + 1;
    Integer d = (2 * ipow(s, 4)) / 3 + 1;
    for (auto _ : state) {
        RegimeReport rep = regime_p5(d, s, t, 2);
        benchmark::DoNotOptimize(rep.satisfied);
    }
}
BENCHMARK(BM_regime_p5_big);

void BM_scan_prop2(benchmark::State& state) {
    ScanSpec spec;
    spec.model = Model::Prop2;
    spec.grid = {{"r", parse_range("4")},
                 {"s", parse_range("4")},
                 {"d", parse_range("5..60")}};
    spec.checks = {Check::EqualityEquivalence};
    for (auto _ : state) {
        ScanResult result = run_scan(spec);
        benchmark::DoNotOptimize(result.rows.size());
    }
}
BENCHMARK(BM_scan_prop2);

void BM_render_csv(benchmark::State& state) {
    ScanSpec spec;
    spec.model = Model::Halphen;
    spec.grid = {{"r", parse_range("3..5")},
                 {"s", parse_range("3..8")},
                 {"d", parse_range("9..60")}};
    ScanResult result = run_scan(spec);
    for (auto _ : state) {
        std::string csv = render_csv(result);
        benchmark::DoNotOptimize(csv.size());
    }
}
BENCHMARK(BM_render_csv);

} // namespace

BENCHMARK_MAIN();
