#include <benchmark/benchmark.h>

#include <cstdint>

#include "wd4/discriminant.hpp"
#include "wd4/forms.hpp"
#include "wd4/geometry.hpp"
#include "wd4/render.hpp"
#include "wd4/topology.hpp"

namespace {

void BM_Validate(benchmark::State& state) {
    const std::int64_t D = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(wd4::validate(D));
}
BENCHMARK(BM_Validate)->Arg(17)->Arg(2828)->Arg(999997);

void BM_EnumerateOrder2(benchmark::State& state) {
    const wd4::Discriminant d = wd4::validate(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wd4::enumerate_order2(d));
}
BENCHMARK(BM_EnumerateOrder2)->Arg(17)->Arg(300)->Arg(2828)->Arg(4996);

void BM_EnumerateOrder3(benchmark::State& state) {
    const wd4::Discriminant d = wd4::validate(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wd4::enumerate_order3(d));
}
BENCHMARK(BM_EnumerateOrder3)->Arg(17)->Arg(300)->Arg(2828)->Arg(4996);

void BM_OrbifoldCounts(benchmark::State& state) {
    const wd4::Discriminant d = wd4::validate(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wd4::orbifold_counts(d));
}
BENCHMARK(BM_OrbifoldCounts)->Arg(300)->Arg(2828);

// Full quadric window with both predicates, the dominant cost of deep
// verification runs.
void BM_DomainSweep(benchmark::State& state) {
    const std::int64_t D = state.range(0);
    for (auto _ : state) {
        std::int64_t agreements = 0;
        for (std::int64_t a = -(wd4::isqrt(9 * D) + 1); a <= -1; ++a) {
            const std::int64_t t = 2 * a * a - 2 * D;
            if (t < 0) continue;
            const std::int64_t bmax = wd4::isqrt(t / 3);
            for (std::int64_t b = -bmax; b <= bmax; ++b) {
                const std::int64_t u = t - 3 * b * b;
                const std::int64_t k = wd4::isqrt(u);
                if (k * k != u) continue;
                const wd4::Triple lo{a, b, -k, wd4::FormKind::order3, D};
                agreements += wd4::in_fundamental_domain_exact(lo) ==
                              wd4::in_fundamental_domain_geometric(wd4::f_map(lo));
                if (k == 0) continue;
                const wd4::Triple hi{a, b, k, wd4::FormKind::order3, D};
                agreements += wd4::in_fundamental_domain_exact(hi) ==
                              wd4::in_fundamental_domain_geometric(wd4::f_map(hi));
            }
        }
        benchmark::DoNotOptimize(agreements);
    }
}
BENCHMARK(BM_DomainSweep)->Arg(300)->Arg(2828);

void BM_BuildTable(benchmark::State& state) {
    const wd4::FixtureMap fixtures =
        wd4::load_fixtures(std::string(WD4_DATA_DIR) + "/invariants.csv");
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(wd4::build_table(8, 300, fixtures, workers));
}
BENCHMARK(BM_BuildTable)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RenderSvg(benchmark::State& state) {
    const wd4::PlotSpec spec = wd4::order3_plot(wd4::validate(2828));
    for (auto _ : state) benchmark::DoNotOptimize(wd4::render_svg(spec));
}
BENCHMARK(BM_RenderSvg);

}  // namespace

BENCHMARK_MAIN();
