#include <benchmark/benchmark.h>

#include "mdcoint/cointegration.hpp"
#include "mdcoint/lrv.hpp"
#include "mdcoint/ols.hpp"
#include "mdcoint/rng.hpp"
#include "mdcoint/simulate.hpp"
#include "mdcoint/transforms.hpp"
#include "mdcoint/unit_root.hpp"

using namespace mdcoint;

namespace {

SimSpec bench_spec(int m, int T) {
    SimSpec s;
    s.m = m;
    s.T = T;
    s.seed = 42;
    s.a1.assign(static_cast<std::size_t>(m), 0.8);
    s.a2.assign(static_cast<std::size_t>(m), 1.0);
    s.mu3.assign(static_cast<std::size_t>(m), 0.0);
    s.z1 = {0.5, 1.0};
    s.z2 = {0.5, 1.0};
    s.z3.assign(static_cast<std::size_t>(m), Ar1Spec{0.5, 1.0});
    return s;
}

Matrix regressors(const AlignedPanel& p, int m) {
    std::vector<std::string> names;
    for (int j = 1; j <= m; ++j) names.push_back("Y3_" + std::to_string(j));
    return p.to_matrix(names);
}

std::vector<double> ar1_series(std::size_t T, double rho, std::uint64_t seed) {
    NormalRng rng(seed);
    std::vector<double> y(T);
    double prev = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        prev = rho * prev + rng.next();
        y[t] = prev;
    }
    return y;
}

}  // namespace

static void BM_ols(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    NormalRng rng(1);
    Matrix X(n, 4);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < 4; ++j) X(i, j) = rng.next();
        y[i] = X(i, 0) + rng.next();
    }
    for (auto _ : state) {
        auto fit = ols(y, X, true);
        benchmark::DoNotOptimize(fit.coefficients);
    }
}
BENCHMARK(BM_ols)->Arg(500)->Arg(2000);

static void BM_bartlett_auto(benchmark::State& state) {
    const auto T = static_cast<std::size_t>(state.range(0));
    const auto y = ar1_series(T, 0.5, 2);
    Matrix u(T, 1);
    for (std::size_t t = 0; t < T; ++t) u(t, 0) = y[t];
    for (auto _ : state) {
        const double bw = nw_bandwidth(u);
        auto est = bartlett_lrv(u, bw);
        benchmark::DoNotOptimize(est.omega);
    }
}
BENCHMARK(BM_bartlett_auto)->Arg(1000)->Arg(20000);

static void BM_adf(benchmark::State& state) {
    const auto y = ar1_series(static_cast<std::size_t>(state.range(0)), 0.5, 3);
    for (auto _ : state) {
        auto r = adf(y);
        benchmark::DoNotOptimize(r.statistic);
    }
}
BENCHMARK(BM_adf)->Arg(500);

static void BM_simulate(benchmark::State& state) {
    const SimSpec s = bench_spec(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto p = simulate_triangular(s);
        benchmark::DoNotOptimize(p.rows());
    }
}
BENCHMARK(BM_simulate)->Arg(2000);

static void BM_dols(benchmark::State& state) {
    const SimSpec s = bench_spec(3, static_cast<int>(state.range(0)));
    const AlignedPanel p = simulate_triangular(s);
    const Matrix X = regressors(p, 3);
    const auto& y = p.column("y1");
    for (auto _ : state) {
        auto est = dols(y, X, -1);
        benchmark::DoNotOptimize(est.coefficients);
    }
}
BENCHMARK(BM_dols)->Arg(1000)->Arg(2000);

static void BM_fmols(benchmark::State& state) {
    const SimSpec s = bench_spec(3, static_cast<int>(state.range(0)));
    const AlignedPanel p = simulate_triangular(s);
    const Matrix X = regressors(p, 3);
    const auto& y = p.column("y1");
    for (auto _ : state) {
        auto est = fmols(y, X);
        benchmark::DoNotOptimize(est.coefficients);
    }
}
BENCHMARK(BM_fmols)->Arg(1000)->Arg(2000);

static void BM_hansen_lc(benchmark::State& state) {
    const SimSpec s = bench_spec(1, static_cast<int>(state.range(0)));
    const AlignedPanel p = simulate_triangular(s);
    const Matrix X = regressors(p, 1);
    const CointEstimate est = fmols(p.column("y1"), X);
    for (auto _ : state) {
        auto lc = hansen_lc(est, X);
        benchmark::DoNotOptimize(lc.statistic);
    }
}
BENCHMARK(BM_hansen_lc)->Arg(1000);

static void BM_spline(benchmark::State& state) {
    std::vector<double> q(64);
    NormalRng rng(4);
    for (auto& v : q) v = 10.0 + rng.next();
    const TimeSeries qs("c", Period::quarterly(2000, 1), q);
    for (auto _ : state) {
        auto m = spline_to_monthly(qs);
        benchmark::DoNotOptimize(m.values());
    }
}
BENCHMARK(BM_spline);

BENCHMARK_MAIN();
