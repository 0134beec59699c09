#include "oqs/reservoir.hpp"
#include "oqs/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oqs {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ReservoirModel ReservoirModel::lorentzian(double gamma0, double lambda,
                                          double omega0, LorentzianKernel kernel) {
    if (!(gamma0 > 0.0) || !(lambda > 0.0) || !(omega0 > 0.0))
        throw std::invalid_argument("Lorentzian: parameters must be strictly positive");
    return ReservoirModel{Lorentzian{gamma0, lambda, kernel}, omega0};
}

ReservoirModel ReservoirModel::ohmic(double s, double gamma, double omega_c,
                                     double omega0) {
    if (!(s > 0.0) || !(gamma > 0.0) || !(omega_c > 0.0) || !(omega0 > 0.0))
        throw std::invalid_argument("OhmicFamily: parameters must be strictly positive");
    return ReservoirModel{OhmicFamily{s, gamma, omega_c}, omega0};
}

double spectral_density(const ReservoirModel& model, double omega) {
    if (omega < 0.0)
        throw std::invalid_argument("spectral_density: omega must be >= 0");
    if (model.is_lorentzian()) {
        const auto& p = model.as_lorentzian();
        const double d = omega - model.omega0;
        return p.gamma0 * p.lambda * p.lambda / (kTwoPi * (d * d + p.lambda * p.lambda));
    }
    const auto& p = model.as_ohmic();
    if (omega == 0.0) return 0.0;
    return p.gamma / kTwoPi * std::pow(p.omega_c, 1.0 - p.s) * std::pow(omega, p.s) *
           std::exp(-omega / p.omega_c);
}

std::complex<double> correlation_kernel(const ReservoirModel& model, double tau) {
    if (tau < 0.0)
        throw std::invalid_argument("correlation_kernel: tau must be >= 0");
    if (model.is_lorentzian()) {
        const auto& p = model.as_lorentzian();
        if (p.kernel == LorentzianKernel::Exponential) {
            return {0.5 * p.gamma0 * p.lambda * std::exp(-p.lambda * tau), 0.0};
        }
        // Half-line convention: full-line kernel minus the omega < 0 part.
        // The negative-frequency correction is evaluated on a rotated
        // contour (omega = -i*y) where the integrand is smooth and decays,
        // avoiding the oscillatory tail of the literal form.
        const double w0 = model.omega0;
        auto rotated = [&p, w0, tau](double y) {
            const std::complex<double> denom =
                std::complex<double>(w0, y) * std::complex<double>(w0, y) +
                p.lambda * p.lambda;
            return std::exp(-y * tau) / denom;
        };
        const std::complex<double> correction =
            std::complex<double>(0.0, 1.0) *
            std::exp(std::complex<double>(0.0, w0 * tau)) * p.gamma0 * p.lambda *
            p.lambda / kTwoPi * integrate_semi_infinite(rotated, 0.0, 1e-12, 1e-10).value;
        return std::complex<double>(0.5 * p.gamma0 * p.lambda * std::exp(-p.lambda * tau),
                                    0.0) -
               correction;
    }
    const auto& p = model.as_ohmic();
    const std::complex<double> base(1.0 / p.omega_c, tau);
    return p.gamma / kTwoPi * std::pow(p.omega_c, 1.0 - p.s) * std::tgamma(p.s + 1.0) *
           std::exp(std::complex<double>(0.0, model.omega0 * tau)) *
           std::pow(base, -(p.s + 1.0));
}

} // namespace oqs
