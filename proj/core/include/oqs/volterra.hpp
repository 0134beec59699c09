#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace oqs {

struct VolterraOptions {
    double dt = 1e-3;             // time step, units 1/omega0
    double t_max = 50.0;          // final time, units 1/omega0
    int corrector_iterations = 2; // PECE corrector sweeps per step
};

/// Number of points of the uniform grid implied by the options,
/// M = floor(t_max/dt) + 1.
std::size_t volterra_grid_size(const VolterraOptions& opts);

/// Solves dS/dt = -multiplier * Int_0^t kernel(t - t') S(t') dt', S(0) = s0,
/// on the uniform grid t_i = i*dt.  The memory integral is discretized with
/// the trapezoidal rule and each step is advanced predictor-corrector
/// (explicit Euler predictor, trapezoidal corrector); the scheme is second
/// order in dt.  Throws VolterraError naming the step index if a
/// non-finite value appears.
std::vector<std::complex<double>> solve_volterra_scalar(
    const std::function<std::complex<double>(double)>& kernel, int multiplier,
    std::complex<double> s0, const VolterraOptions& opts);

} // namespace oqs
