#pragma once

#include <complex>
#include <variant>

namespace oqs {

/// Kernel convention for the Lorentzian density.  The exponential kernel
/// (gamma0*lambda/2)*exp(-lambda*tau) corresponds to extending the
/// frequency integral of the correlation function over the full real
/// line; it is the kernel for which the closed-form amplitude dynamics is
/// exact.  The half-line kernel keeps the integral on [0, inf) and is
/// evaluated by quadrature, for sensitivity studies.
enum class LorentzianKernel { Exponential, HalfLine };

struct Lorentzian {
    double gamma0; // coupling strength, units omega0
    double lambda; // spectral width, units omega0
    LorentzianKernel kernel = LorentzianKernel::Exponential;
};

struct OhmicFamily {
    double s;       // exponent: 1/2 sub-Ohmic, 1 Ohmic, 2 super-Ohmic
    double gamma;   // dimensionless coupling
    double omega_c; // cutoff frequency, units omega0
};

/// Spectral density of the reservoir plus the qubit transition frequency.
/// For the Lorentzian variant the center frequency of the density equals
/// omega0.
struct ReservoirModel {
    std::variant<Lorentzian, OhmicFamily> density;
    double omega0 = 1.0;

    static ReservoirModel lorentzian(double gamma0, double lambda,
                                     double omega0 = 1.0,
                                     LorentzianKernel kernel = LorentzianKernel::Exponential);
    static ReservoirModel ohmic(double s, double gamma, double omega_c,
                                double omega0 = 1.0);

    bool is_lorentzian() const { return std::holds_alternative<Lorentzian>(density); }
    const Lorentzian& as_lorentzian() const { return std::get<Lorentzian>(density); }
    const OhmicFamily& as_ohmic() const { return std::get<OhmicFamily>(density); }
};

/// J(omega) >= 0 for omega >= 0; throws std::invalid_argument for
/// negative frequencies.
double spectral_density(const ReservoirModel& model, double omega);

/// Reservoir correlation kernel f(tau) = Int J(omega) e^{i(omega0-omega)tau} domega
/// for tau >= 0.  Lorentzian (exponential convention): (gamma0*lambda/2)*e^{-lambda*tau}.
/// Ohmic family: (gamma/2pi)*omega_c^{1-s}*Gamma(s+1)*e^{i*omega0*tau}
///               *(1/omega_c + i*tau)^{-(s+1)}.
std::complex<double> correlation_kernel(const ReservoirModel& model, double tau);

} // namespace oqs
