#include "zaremba/kappa.hpp"
#include "zaremba/linrep.hpp"
#include "zaremba/omega.hpp"
#include "zaremba/series.hpp"
#include "zaremba/spectrum.hpp"
#include "zaremba/sums.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

void BM_kappa_range(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zaremba::kappa_range(2, count));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(count));
}
BENCHMARK(BM_kappa_range)->Arg(1 << 16)->Arg(1 << 20);

void BM_eval_rep(benchmark::State& state) {
    const zaremba::LinearRep rep = zaremba::kappa_rep(2);
    std::uint64_t n = 0x9e3779b97f4a7c15ull;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zaremba::eval_rep(rep, n));
    }
}
BENCHMARK(BM_eval_rep);

void BM_continuant(benchmark::State& state) {
    const zaremba::DigitWord w = zaremba::to_digits(0x9e3779b97f4a7c15ull, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zaremba::continuant(w));
    }
}
BENCHMARK(BM_continuant);

void BM_series_mul(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const zaremba::IntSeries a = zaremba::kappa_series(2, order);
    const zaremba::IntSeries b = zaremba::kappa_series(3, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zaremba::mul(a, b));
    }
}
BENCHMARK(BM_series_mul)->Arg(256)->Arg(1024);

void BM_check_mfe(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(zaremba::check_mfe(2, order));
    }
}
BENCHMARK(BM_check_mfe)->Arg(1 << 12)->Arg(1 << 14);

void BM_radial_eval(benchmark::State& state) {
    const int j = static_cast<int>(state.range(0));
    const double z = 1.0 - std::ldexp(1.0, -j);
    const std::size_t order = zaremba::radial_order(z);
    const zaremba::KappaTable table = zaremba::kappa_range(2, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zaremba::eval_radial(table, z, order));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(order));
}
BENCHMARK(BM_radial_eval)->Arg(10)->Arg(14);

void BM_build_omega(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(zaremba::build_omega(2, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_build_omega)->Arg(6)->Arg(8);

void BM_relation_probe(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(zaremba::relation_probe(2, 2, 4, 120));
    }
}
BENCHMARK(BM_relation_probe);

void BM_takagi(benchmark::State& state) {
    double x = 0.123456789;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zaremba::takagi(x, 1e-12));
        x += 1e-9;
    }
}
BENCHMARK(BM_takagi);

void BM_partial_sums_scan(benchmark::State& state) {
    const auto n_max = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t last = 0;
        zaremba::scan_partial_sums(2, n_max, [&](std::uint64_t, std::uint64_t s) { last = s; });
        benchmark::DoNotOptimize(last);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(n_max));
}
BENCHMARK(BM_partial_sums_scan)->Arg(1 << 18);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
