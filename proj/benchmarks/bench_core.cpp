#include <benchmark/benchmark.h>

#include "cb/bernstein.hpp"
#include "cb/cartan.hpp"
#include "cb/cover2d.hpp"
#include "cb/resultant.hpp"
#include "cb/rng.hpp"
#include "cb/weierstrass.hpp"

namespace {

using cb::BivariatePoly;
using cb::Complex;
using cb::UnivariatePoly;

UnivariatePoly random_poly(cb::Rng& rng, int degree) {
    std::vector<Complex> cs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : cs) c = rng.in_unit_disk();
    if (std::abs(cs.back()) < 0.1) cs.back() = Complex{0.5, 0.1};
    return UnivariatePoly(cs);
}

void BM_roots(benchmark::State& state) {
    cb::Rng rng(1);
    const UnivariatePoly p = random_poly(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cb::roots(p));
}
BENCHMARK(BM_roots)->Arg(6)->Arg(12)->Arg(24);

void BM_resultant_sylvester(benchmark::State& state) {
    cb::Rng rng(2);
    const UnivariatePoly f = random_poly(rng, static_cast<int>(state.range(0)));
    const UnivariatePoly g = random_poly(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cb::resultant_sylvester(f, g));
}
BENCHMARK(BM_resultant_sylvester)->Arg(4)->Arg(8)->Arg(16);

void BM_circle_extrema(benchmark::State& state) {
    cb::Rng rng(3);
    const UnivariatePoly p = random_poly(rng, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::circle_extrema(p, Complex{0.1, 0.0}, 1.3));
}
BENCHMARK(BM_circle_extrema);

void BM_cartan_cover(benchmark::State& state) {
    cb::Rng rng(4);
    std::vector<Complex> zeros;
    for (int i = 0; i < state.range(0); ++i) zeros.push_back(rng.in_unit_disk());
    for (auto _ : state) benchmark::DoNotOptimize(cb::cartan_cover_1d(zeros, 5.0));
}
BENCHMARK(BM_cartan_cover)->Arg(4)->Arg(8)->Arg(16);

void BM_max_log_ball(benchmark::State& state) {
    const BivariatePoly f = BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 1);
    const auto fn = cb::as_fn(f);
    for (auto _ : state)
        benchmark::DoNotOptimize(cb::max_log_ball(fn, cb::C2{}, 0.5, 1024));
}
BENCHMARK(BM_max_log_ball);

void BM_prepare(benchmark::State& state) {
    const BivariatePoly f = BivariatePoly::monomial(2, 0) - BivariatePoly::monomial(0, 1);
    const cb::Frame frame{};
    for (auto _ : state) benchmark::DoNotOptimize(cb::prepare(f, frame, 0.2, 0.01));
}
BENCHMARK(BM_prepare);

void BM_build_cover_linear(benchmark::State& state) {
    const BivariatePoly f1 =
        cb::normalize_on_ball(BivariatePoly::monomial(1, 0) - BivariatePoly::monomial(0, 1));
    const BivariatePoly f2 =
        cb::normalize_on_ball(BivariatePoly::monomial(1, 0) + BivariatePoly::monomial(0, 1));
    const auto data = cb::estimate_inputs(f1, f2, 1e-12, 44);
    for (auto _ : state) benchmark::DoNotOptimize(cb::build_cover(f1, f2, data, 6.0));
}
BENCHMARK(BM_build_cover_linear);

}  // namespace

BENCHMARK_MAIN();
