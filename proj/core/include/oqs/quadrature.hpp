#pragma once

#include <complex>
#include <functional>

namespace oqs {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double abs_error_estimate = 0.0;
};

using Integrand = std::function<std::complex<double>(double)>;

/// Adaptive Gauss-Kronrod (G7/K15) integration of a complex-valued
/// integrand on the finite interval [a, b].  Subdivision stops once the
/// accumulated error estimate drops below max(abs_tol, rel_tol*|value|).
QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              double abs_tol = 1e-10, double rel_tol = 1e-10,
                              int max_intervals = 4000);

/// Integrates f over [lower, +inf).  The tail is mapped to a finite
/// interval with omega = lower + u/(1-u) and handled by the same adaptive
/// engine, which grades subdivision toward an integrable endpoint
/// singularity omega^(s-1), s > 0, at the lower limit.
QuadResult integrate_semi_infinite(const Integrand& f, double lower,
                                   double abs_tol = 1e-10,
                                   double rel_tol = 1e-10,
                                   int max_intervals = 4000);

} // namespace oqs
