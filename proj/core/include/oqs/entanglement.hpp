#pragma once

#include "oqs/dynamics.hpp"
#include "oqs/reservoir.hpp"
#include "oqs/spectrum.hpp"

#include <Eigen/Dense>

#include <complex>

namespace oqs {

/// Two-qubit density matrix in the ordered basis {|ee>, |eg>, |ge>, |gg>}.
struct TwoQubitState {
    Eigen::Matrix4cd rho;

    /// Validates Hermiticity (1e-12), unit trace (1e-12) and positive
    /// semidefiniteness (eigenvalues >= -1e-10).
    static TwoQubitState from_matrix(const Eigen::Matrix4cd& rho);
};

/// 2 |c_m c_n| for the single-excitation pair state; throws if
/// |c_m|^2 + |c_n|^2 > 1 + 1e-6.
double concurrence_from_amplitudes(std::complex<double> c_m,
                                   std::complex<double> c_n);

/// Reduced state of the (m, n) pair: populations |c_m|^2 at |eg> and
/// |c_n|^2 at |ge>, coherence c_m * conj(c_n), remainder at |gg>.
TwoQubitState reduced_density_matrix(std::complex<double> c_m,
                                     std::complex<double> c_n);

/// Wootters concurrence max{0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)} where
/// l_i are the decreasing eigenvalues of rho * rho_tilde,
/// rho_tilde = (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y).
double wootters_concurrence(const TwoQubitState& state);

/// Long-time concurrence prediction for the (m, n) pair from the
/// stationary decomposition: the dark components d_l = C_l(0) - S(0)/N
/// persist exactly; a bound state adds a rotating term of magnitude
/// beta^2 |S(0)| to each surviving amplitude, so the concurrence
/// oscillates in a band indefinitely.
struct SteadyPrediction {
    std::complex<double> dark_m{0.0, 0.0};
    std::complex<double> dark_n{0.0, 0.0};
    double bs_weight = 0.0; // beta^2 * |S(0)| contribution magnitude
    double concurrence_min = 0.0;
    double concurrence_max = 0.0;
    double concurrence_mean = 0.0;
};

/// Predicts the asymptotic concurrence band for qubits m and n (1-based).
/// For the Lorentzian model with the exponential kernel the continuum of
/// the full-line extension covers every energy, so no bound-state term
/// contributes regardless of the half-line report and the band collapses
/// to 2|d_m d_n| (the closed-form dynamics decays to the dark components).
SteadyPrediction predict_steady(const ReservoirModel& model, const InitialState& init,
                                int m, int n, const BoundStateReport& report);

} // namespace oqs
