#include "oqs/volterra.hpp"
#include "oqs/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace oqs {

std::size_t volterra_grid_size(const VolterraOptions& opts) {
    if (!(opts.dt > 0.0)) throw std::invalid_argument("VolterraOptions: dt must be positive");
    if (!(opts.t_max >= opts.dt))
        throw std::invalid_argument("VolterraOptions: t_max must be at least dt");
    if (opts.corrector_iterations < 1)
        throw std::invalid_argument("VolterraOptions: corrector_iterations must be >= 1");
    // Nudge against representation error in t_max/dt before truncating.
    const auto m = static_cast<std::size_t>(std::floor(opts.t_max / opts.dt + 1e-9)) + 1;
    if (m < 2) throw std::invalid_argument("VolterraOptions: grid must have at least 2 points");
    return m;
}

std::vector<std::complex<double>> solve_volterra_scalar(
    const std::function<std::complex<double>(double)>& kernel, int multiplier,
    std::complex<double> s0, const VolterraOptions& opts) {
    if (multiplier < 1)
        throw std::invalid_argument("solve_volterra_scalar: multiplier must be >= 1");
    if (!std::isfinite(s0.real()) || !std::isfinite(s0.imag()))
        throw std::invalid_argument("solve_volterra_scalar: s0 must be finite");

    const std::size_t m = volterra_grid_size(opts);
    const double dt = opts.dt;
    const double n = static_cast<double>(multiplier);

    // Kernel samples on the uniform grid, split into real/imaginary parts
    // to keep the O(M^2) convolution loop vectorizable.
    std::vector<double> fr(m), fi(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::complex<double> f = kernel(static_cast<double>(i) * dt);
        fr[i] = f.real();
        fi[i] = f.imag();
    }
    const double f0r = fr[0], f0i = fi[0];

    std::vector<double> sr(m), si(m);
    sr[0] = s0.real();
    si[0] = s0.imag();
    double prev_fr = 0.0, prev_fi = 0.0; // F_i = -n * I_i; I_0 = 0

    for (std::size_t i = 0; i + 1 < m; ++i) {
        // History part of the trapezoidal memory integral at t_{i+1}:
        // dt*(f(t_{i+1})*S_0/2 + sum_{j=1..i} f(t_{i+1}-t_j)*S_j).
        double hr = 0.5 * (fr[i + 1] * sr[0] - fi[i + 1] * si[0]);
        double hi = 0.5 * (fr[i + 1] * si[0] + fi[i + 1] * sr[0]);
        for (std::size_t j = 1; j <= i; ++j) {
            const std::size_t k = i + 1 - j;
            hr += fr[k] * sr[j] - fi[k] * si[j];
            hi += fr[k] * si[j] + fi[k] * sr[j];
        }
        hr *= dt;
        hi *= dt;

        // Predict with explicit Euler, then correct with the trapezoidal rule.
        double spr = sr[i] + dt * prev_fr;
        double spi = si[i] + dt * prev_fi;
        double fnr = 0.0, fni = 0.0;
        for (int c = 0; c < opts.corrector_iterations; ++c) {
            const double ir = hr + 0.5 * dt * (f0r * spr - f0i * spi);
            const double ii = hi + 0.5 * dt * (f0r * spi + f0i * spr);
            fnr = -n * ir;
            fni = -n * ii;
            spr = sr[i] + 0.5 * dt * (prev_fr + fnr);
            spi = si[i] + 0.5 * dt * (prev_fi + fni);
        }
        if (!std::isfinite(spr) || !std::isfinite(spi)) {
            throw VolterraError("solve_volterra_scalar: non-finite value at step " +
                                    std::to_string(i + 1) +
                                    " (dt too large or singular kernel)",
                                i + 1);
        }
        sr[i + 1] = spr;
        si[i + 1] = spi;
        prev_fr = -n * (hr + 0.5 * dt * (f0r * spr - f0i * spi));
        prev_fi = -n * (hi + 0.5 * dt * (f0r * spi + f0i * spr));
    }

    std::vector<std::complex<double>> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = {sr[i], si[i]};
    return out;
}

} // namespace oqs
