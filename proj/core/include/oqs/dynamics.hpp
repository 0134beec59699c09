#pragma once

#include "oqs/reservoir.hpp"
#include "oqs/volterra.hpp"

#include <complex>
#include <vector>

namespace oqs {

/// One shared excitation distributed over N qubits; the reservoir starts
/// in vacuum.  amplitudes[l-1] is C_l(0).
struct InitialState {
    int n_qubits = 2;
    std::vector<std::complex<double>> amplitudes;

    /// Excitation shared by qubits m and n (1-based), zeros elsewhere.
    static InitialState pair_state(int n_qubits, int m, int n,
                                   std::complex<double> c_m,
                                   std::complex<double> c_n);

    /// The figures' symmetric EPR pair on qubits (m, n) with amplitudes
    /// 1/sqrt(2).
    static InitialState epr_pair(int n_qubits, int m = 1, int n = 2);

    std::complex<double> collective_sum() const;

    /// Throws unless exactly one excitation is shared
    /// (sum |C_l(0)|^2 = 1 within 1e-12) and sizes are consistent.
    void validate() const;
};

/// Interaction-picture amplitudes on a uniform time grid.
struct Trajectory {
    std::vector<double> t_grid;                                // units 1/omega0
    std::vector<std::vector<std::complex<double>>> amplitudes; // [qubit][time]
    std::vector<std::complex<double>> collective;              // S(t) = sum_l C_l(t)
};

enum class Regime { Markovian, NonMarkovian };

struct RegimeReport {
    Regime regime;
    bool boundary = false; // gamma0 == lambda/(2N) exactly
};

/// Closed-form Lorentzian (exponential-kernel) propagation:
/// C_l(t) = C_l(0) + (G(t) - 1) S(0)/N with
/// G(t) = e^{-lambda t/2}(cosh(Dt/2) + (lambda/D) sinh(Dt/2)),
/// D = sqrt(lambda^2 - 2 gamma0 lambda N) in complex arithmetic.
Trajectory propagate_lorentzian_analytic(const ReservoirModel& model,
                                         const InitialState& init,
                                         const std::vector<double>& t_grid);

/// The amplitude decay factor G(t) itself.
std::complex<double> lorentzian_decay_factor(const Lorentzian& density,
                                             int n_qubits, double t);

/// Numerical propagation for any model: the N amplitude equations share
/// one right-hand side, so the collective sum obeys the single scalar
/// equation dS/dt = -N Int_0^t f(t-t') S(t') dt' and every amplitude is
/// reconstructed as C_l(t) = C_l(0) + (S(t) - S(0))/N.
Trajectory propagate_volterra(const ReservoirModel& model, const InitialState& init,
                              const VolterraOptions& opts);

/// Weak coupling gamma0 < lambda/(2N) is Markovian; the critically damped
/// boundary is reported as NonMarkovian with the boundary flag set.
RegimeReport classify_regime(const Lorentzian& density, int n_qubits);

} // namespace oqs
