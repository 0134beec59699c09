#include "oqs/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace oqs {

InitialState InitialState::pair_state(int n_qubits, int m, int n,
                                      std::complex<double> c_m,
                                      std::complex<double> c_n) {
    if (n_qubits < 2) throw std::invalid_argument("InitialState: n_qubits must be >= 2");
    if (m == n || m < 1 || n < 1 || m > n_qubits || n > n_qubits)
        throw std::invalid_argument("InitialState: invalid qubit pair");
    InitialState init;
    init.n_qubits = n_qubits;
    init.amplitudes.assign(static_cast<std::size_t>(n_qubits), {0.0, 0.0});
    init.amplitudes[static_cast<std::size_t>(m - 1)] = c_m;
    init.amplitudes[static_cast<std::size_t>(n - 1)] = c_n;
    init.validate();
    return init;
}

InitialState InitialState::epr_pair(int n_qubits, int m, int n) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return pair_state(n_qubits, m, n, {inv_sqrt2, 0.0}, {inv_sqrt2, 0.0});
}

std::complex<double> InitialState::collective_sum() const {
    std::complex<double> s{0.0, 0.0};
    for (const auto& c : amplitudes) s += c;
    return s;
}

void InitialState::validate() const {
    if (n_qubits < 2) throw std::invalid_argument("InitialState: n_qubits must be >= 2");
    if (amplitudes.size() != static_cast<std::size_t>(n_qubits))
        throw std::invalid_argument("InitialState: amplitude count must equal n_qubits");
    double norm_sq = 0.0;
    for (const auto& c : amplitudes) norm_sq += std::norm(c);
    if (std::abs(norm_sq - 1.0) > 1e-12)
        throw std::invalid_argument(
            "InitialState: amplitudes must carry exactly one excitation "
            "(sum |C_l|^2 = 1 within 1e-12)");
}

std::complex<double> lorentzian_decay_factor(const Lorentzian& density,
                                             int n_qubits, double t) {
    const double lambda = density.lambda;
    const double d_sq = lambda * lambda - 2.0 * density.gamma0 * lambda * n_qubits;
    if (std::abs(d_sq) < 1e-12 * lambda * lambda) {
        // Critically damped limit D -> 0.
        return std::exp(-0.5 * lambda * t) * (1.0 + 0.5 * lambda * t);
    }
    const std::complex<double> d = std::sqrt(std::complex<double>(d_sq, 0.0));
    // G = e^{-lambda t/2}(cosh(Dt/2) + (lambda/D) sinh(Dt/2)), grouped as a
    // sum of pure exponentials so real D close to lambda cannot overflow.
    const std::complex<double> r = lambda / d;
    return 0.5 * (1.0 + r) * std::exp(0.5 * (d - lambda) * t) +
           0.5 * (1.0 - r) * std::exp(-0.5 * (d + lambda) * t);
}

namespace {

Trajectory reconstruct(const InitialState& init, std::vector<double> t_grid,
                       const std::vector<std::complex<double>>& collective) {
    const auto n = static_cast<std::size_t>(init.n_qubits);
    const std::complex<double> s0 = init.collective_sum();
    Trajectory traj;
    traj.t_grid = std::move(t_grid);
    traj.collective = collective;
    traj.amplitudes.assign(n, std::vector<std::complex<double>>(collective.size()));
    for (std::size_t l = 0; l < n; ++l) {
        const std::complex<double> c0 = init.amplitudes[l];
        for (std::size_t i = 0; i < collective.size(); ++i) {
            traj.amplitudes[l][i] =
                c0 + (collective[i] - s0) / static_cast<double>(init.n_qubits);
        }
    }
    // Keep the initial point bitwise exact.
    for (std::size_t l = 0; l < n; ++l) traj.amplitudes[l][0] = init.amplitudes[l];
    return traj;
}

} // namespace

Trajectory propagate_lorentzian_analytic(const ReservoirModel& model,
                                         const InitialState& init,
                                         const std::vector<double>& t_grid) {
    if (!model.is_lorentzian())
        throw std::invalid_argument(
            "propagate_lorentzian_analytic: model must be Lorentzian");
    init.validate();
    const auto& density = model.as_lorentzian();
    const std::complex<double> s0 = init.collective_sum();

    std::vector<std::complex<double>> collective(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        collective[i] = lorentzian_decay_factor(density, init.n_qubits, t_grid[i]) * s0;
    }
    return reconstruct(init, t_grid, collective);
}

Trajectory propagate_volterra(const ReservoirModel& model, const InitialState& init,
                              const VolterraOptions& opts) {
    init.validate();
    auto kernel = [&model](double tau) { return correlation_kernel(model, tau); };
    const std::vector<std::complex<double>> collective =
        solve_volterra_scalar(kernel, init.n_qubits, init.collective_sum(), opts);

    std::vector<double> t_grid(collective.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        t_grid[i] = static_cast<double>(i) * opts.dt;
    return reconstruct(init, std::move(t_grid), collective);
}

RegimeReport classify_regime(const Lorentzian& density, int n_qubits) {
    if (n_qubits < 1)
        throw std::invalid_argument("classify_regime: n_qubits must be positive");
    const double threshold = density.lambda / (2.0 * n_qubits);
    if (density.gamma0 < threshold) return RegimeReport{Regime::Markovian, false};
    return RegimeReport{Regime::NonMarkovian, density.gamma0 == threshold};
}

} // namespace oqs
