#include "oqs/spectrum.hpp"
#include "oqs/errors.hpp"
#include "oqs/quadrature.hpp"
#include "oqs/roots.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oqs {

namespace {

void check_n(int n_qubits) {
    if (n_qubits < 1)
        throw std::invalid_argument("spectrum: n_qubits must be positive");
}

} // namespace

double y_of(const ReservoirModel& model, int n_qubits, double e,
            const SpectrumTols& tols) {
    check_n(n_qubits);
    if (!(e < 0.0))
        throw std::invalid_argument(
            "y_of: requires e < 0 (outside the bound-state search domain)");
    auto integrand = [&model, e](double omega) {
        return std::complex<double>(spectral_density(model, omega) / (omega - e), 0.0);
    };
    const QuadResult q = integrate_semi_infinite(integrand, 0.0, tols.quad_abs_tol,
                                                 tols.quad_rel_tol);
    return model.omega0 - n_qubits * q.value.real();
}

double ohmic_y_at_zero(const OhmicFamily& density, int n_qubits, double omega0) {
    check_n(n_qubits);
    return omega0 - n_qubits * density.gamma * std::tgamma(density.s) *
                        density.omega_c / (2.0 * std::numbers::pi);
}

double bound_state_weight(const ReservoirModel& model, int n_qubits, double e_bs,
                          const SpectrumTols& tols) {
    check_n(n_qubits);
    if (!(e_bs < 0.0))
        throw std::invalid_argument("bound_state_weight: e_bs must be negative");
    auto integrand = [&model, e_bs](double omega) {
        const double d = omega - e_bs;
        return std::complex<double>(spectral_density(model, omega) / (d * d), 0.0);
    };
    const double k = integrate_semi_infinite(integrand, 0.0, tols.quad_abs_tol,
                                             tols.quad_rel_tol)
                         .value.real();
    const double n = n_qubits;
    return 1.0 / (n + n * n * k);
}

namespace {

// Bracket g(E) = y(E) - E on [e_lo, -eps] and root-find.  y -> omega0 as
// E -> -inf guarantees g > 0 for sufficiently negative E.
double locate_root(const ReservoirModel& model, int n_qubits, double eps,
                   const SpectrumTols& tols) {
    auto g = [&](double e) { return y_of(model, n_qubits, e, tols) - e; };
    double e_lo = -model.omega0;
    while (g(e_lo) <= 0.0) {
        e_lo *= 2.0;
        if (-e_lo > 1e6 * model.omega0)
            throw NumericsError(
                "find_bound_state: bracket expansion exceeded 1e6*omega0 "
                "(pathological parameters)");
    }
    return find_root_bracketed(g, e_lo, -eps, tols.x_tol, tols.g_tol);
}

} // namespace

BoundStateReport find_bound_state(const ReservoirModel& model, int n_qubits,
                                  const SpectrumTols& tols) {
    check_n(n_qubits);
    const double eps = tols.probe_epsilon * model.omega0;
    BoundStateReport report;
    report.probe_epsilon = eps;
    report.y_at_zero = y_of(model, n_qubits, -eps, tols);

    const bool probe_negative = report.y_at_zero < -eps; // g(-eps) < 0

    if (!model.is_lorentzian()) {
        const bool analytic_exists =
            ohmic_y_at_zero(model.as_ohmic(), n_qubits, model.omega0) < 0.0;
        if (!analytic_exists || !probe_negative) return report;
        report.e_bs = locate_root(model, n_qubits, eps, tols);
        report.beta_sq = bound_state_weight(model, n_qubits, report.e_bs, tols);
        report.exists = true;
        return report;
    }

    // Lorentzian: J(0) > 0 makes the integral diverge logarithmically as
    // E -> 0-, so a formal root always exists at exponentially small |E|.
    // Candidates are surfaced; existence additionally demands the weight
    // threshold.
    if (!probe_negative) return report;
    report.e_bs = locate_root(model, n_qubits, eps, tols);
    report.beta_sq = bound_state_weight(model, n_qubits, report.e_bs, tols);
    report.exists = report.beta_sq >= tols.beta_sq_min;
    return report;
}

ExistenceCheck bound_state_exists(const ReservoirModel& model, int n_qubits,
                                  const SpectrumTols& tols) {
    check_n(n_qubits);
    if (!model.is_lorentzian()) {
        return ExistenceCheck{
            ohmic_y_at_zero(model.as_ohmic(), n_qubits, model.omega0) < 0.0,
            ohmic_y_at_zero(model.as_ohmic(), n_qubits, model.omega0)};
    }
    const BoundStateReport report = find_bound_state(model, n_qubits, tols);
    return ExistenceCheck{report.exists, report.y_at_zero};
}

} // namespace oqs
