#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "logmom/cmono.hpp"
#include "logmom/dirichlet.hpp"
#include "logmom/expfit.hpp"
#include "logmom/helson.hpp"
#include "logmom/logmoment.hpp"
#include "logmom/measure.hpp"

namespace {

logmom::GridMeasure sample_measure() {
    return logmom::GridMeasure(logmom::Domain::UnitInterval,
                               {{0.2, 0.5}, {0.55, 0.3}, {0.9, 0.7}});
}

void bm_recovery(benchmark::State& state) {
    const auto w = logmom::moments_of(sample_measure(), 1,
                                      static_cast<std::int64_t>(state.range(0)));
    const auto grid = logmom::default_fit_grid();
    for (auto _ : state) {
        auto fit = logmom::exp_nnls_fit(1, w.values, grid, true);
        benchmark::DoNotOptimize(fit.residual);
    }
}
BENCHMARK(bm_recovery)->Arg(32)->Arg(64)->Arg(128);

void bm_membership(benchmark::State& state) {
    const auto w = logmom::moments_of(sample_measure(), 1, 64);
    for (auto _ : state) {
        auto rep = logmom::membership(w);
        benchmark::DoNotOptimize(rep.verdict);
    }
}
BENCHMARK(bm_membership);

void bm_certify(benchmark::State& state) {
    // (1 - 2^{-s})^2, a square, so the adaptive scan runs to a certificate
    logmom::DirichletPolynomial q({{1, 1.0}, {2, -2.0}, {4, 1.0}});
    for (auto _ : state) {
        auto r = logmom::certify_nonnegative(q, 1e-2, 1e-9);
        benchmark::DoNotOptimize(logmom::is_certificate(r));
    }
}
BENCHMARK(bm_certify);

void bm_helson_norm(benchmark::State& state) {
    const std::int64_t N = state.range(0);
    std::vector<double> v;
    for (std::int64_t n = 1; n <= N * N; ++n)
        v.push_back(std::pow(static_cast<double>(n), -2.0));
    const logmom::MomentSequence w(1, std::move(v));
    const auto M = logmom::helson_build(w, N);
    for (auto _ : state) {
        benchmark::DoNotOptimize(logmom::operator_norm(M));
    }
}
BENCHMARK(bm_helson_norm)->Arg(16)->Arg(32)->Arg(64);

} // namespace

BENCHMARK_MAIN();
