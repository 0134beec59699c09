#include "oqs/dynamics.hpp"
#include "oqs/quadrature.hpp"
#include "oqs/reservoir.hpp"
#include "oqs/roots.hpp"
#include "oqs/spectrum.hpp"
#include "oqs/volterra.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

using cd = std::complex<double>;
using oqs::ReservoirModel;

namespace {

void BM_QuadratureSemiInfinite(benchmark::State& state) {
    const auto model = ReservoirModel::ohmic(1.0, 1.0, 1.0);
    const double e = -0.1;
    for (auto _ : state) {
        auto q = oqs::integrate_semi_infinite(
            [&](double w) {
                return cd(oqs::spectral_density(model, w) / (w - e), 0.0);
            },
            0.0);
        benchmark::DoNotOptimize(q.value);
    }
}
BENCHMARK(BM_QuadratureSemiInfinite);

void BM_BoundStateSearch(benchmark::State& state) {
    const auto model = ReservoirModel::ohmic(state.range(0) == 0 ? 0.5 : 1.0, 1.0, 1.0);
    for (auto _ : state) {
        auto report = oqs::find_bound_state(model, 8);
        benchmark::DoNotOptimize(report.e_bs);
    }
}
BENCHMARK(BM_BoundStateSearch)->Arg(0)->Arg(1);

void BM_RootFinder(benchmark::State& state) {
    for (auto _ : state) {
        const double x = oqs::find_root_bracketed(
            [](double e) { return std::tanh(50.0 * (e - 0.7)); }, -1.0, 1.0);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_RootFinder);

void BM_KernelEval(benchmark::State& state) {
    const auto model = ReservoirModel::ohmic(0.5, 1.0, 1.0);
    double tau = 0.0;
    for (auto _ : state) {
        tau += 1e-3;
        benchmark::DoNotOptimize(oqs::correlation_kernel(model, tau));
    }
}
BENCHMARK(BM_KernelEval);

// O(M^2) history sum: steps/iteration reveals the quadratic scaling.
void BM_VolterraSolve(benchmark::State& state) {
    const auto model = ReservoirModel::ohmic(1.0, 1.0, 1.0);
    const double t_max = static_cast<double>(state.range(0));
    const auto init = oqs::InitialState::epr_pair(8);
    for (auto _ : state) {
        auto traj = oqs::propagate_volterra(model, init, {1e-3, t_max, 2});
        benchmark::DoNotOptimize(traj.collective.back());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VolterraSolve)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Complexity();

void BM_LorentzianAnalytic(benchmark::State& state) {
    const auto model = ReservoirModel::lorentzian(0.2, 15.0);
    const auto init = oqs::InitialState::epr_pair(8);
    std::vector<double> grid(50001);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 1e-3 * i;
    for (auto _ : state) {
        auto traj = oqs::propagate_lorentzian_analytic(model, init, grid);
        benchmark::DoNotOptimize(traj.collective.back());
    }
}
BENCHMARK(BM_LorentzianAnalytic);

} // namespace

BENCHMARK_MAIN();
