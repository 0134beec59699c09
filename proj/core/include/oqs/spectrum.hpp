#pragma once

#include "oqs/reservoir.hpp"

#include <limits>

namespace oqs {

struct SpectrumTols {
    double x_tol = 1e-10;
    double g_tol = 1e-10;
    double quad_abs_tol = 1e-10;
    double quad_rel_tol = 1e-10;
    // Operational bound-state definition for densities with J(0) > 0
    // (Lorentzian): the root must lie at or below -probe_epsilon*omega0
    // and carry at least beta_sq_min of per-qubit weight.  Both are
    // reported back in the BoundStateReport.
    double probe_epsilon = 1e-6;
    double beta_sq_min = 1e-6;
};

struct BoundStateReport {
    bool exists = false;
    // Root of E = y(E) below the probe energy, when one was located.
    // Surfaced together with its weight even when the thresholds reject
    // it, so marginal candidates stay visible.
    double e_bs = std::numeric_limits<double>::quiet_NaN();
    double beta_sq = std::numeric_limits<double>::quiet_NaN();
    double y_at_zero = std::numeric_limits<double>::quiet_NaN(); // y(-probe_epsilon*omega0)
    double probe_epsilon = 0.0;
};

struct ExistenceCheck {
    bool exists = false;
    double y_at_zero = std::numeric_limits<double>::quiet_NaN();
};

/// y(E) = omega0 - N * Int_0^inf J(omega)/(omega - E) domega, for E < 0.
double y_of(const ReservoirModel& model, int n_qubits, double e,
            const SpectrumTols& tols = {});

/// Analytic y(0) = omega0 - N*gamma*Gamma(s)*omega_c/(2*pi) for the Ohmic
/// family (the Lorentzian limit diverges).
double ohmic_y_at_zero(const OhmicFamily& density, int n_qubits, double omega0);

/// Ohmic family: true iff the analytic y(0) is negative.  Lorentzian:
/// applies the thresholded operational definition via a root search.
ExistenceCheck bound_state_exists(const ReservoirModel& model, int n_qubits,
                                  const SpectrumTols& tols = {});

/// Locates the isolated root of E = y(E) on E < 0 by expanding a bracket
/// downward from -omega0 (doubling, up to |E| = 1e6*omega0) and refining
/// with the hybrid root finder, then fills in the overlap weight.
BoundStateReport find_bound_state(const ReservoirModel& model, int n_qubits,
                                  const SpectrumTols& tols = {});

/// Squared per-qubit amplitude of the normalized bound eigenstate,
/// beta^2 = 1 / (N + N^2 * K) with K = Int_0^inf J(omega)/(omega - E)^2 domega.
double bound_state_weight(const ReservoirModel& model, int n_qubits, double e_bs,
                          const SpectrumTols& tols = {});

} // namespace oqs
