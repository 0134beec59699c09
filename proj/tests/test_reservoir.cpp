#include "oqs/quadrature.hpp"
#include "oqs/reservoir.hpp"

#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using cd = std::complex<double>;
using oqs::correlation_kernel;
using oqs::ReservoirModel;
using oqs::spectral_density;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Direct quadrature of f(tau) = Int_0^inf J(w) e^{i(w0 - w) tau} dw,
// the independent cross-check for the closed-form kernels.
cd kernel_by_quadrature(const ReservoirModel& model, double tau) {
    return oqs::integrate_semi_infinite(
               [&](double w) {
                   return spectral_density(model, w) *
                          std::exp(cd(0.0, (model.omega0 - w) * tau));
               },
               0.0, 1e-12, 1e-12)
        .value;
}

} // namespace

TEST_CASE("Lorentzian density at the center frequency") {
    const auto model = ReservoirModel::lorentzian(0.2, 15.0);
    CHECK(spectral_density(model, 1.0) == doctest::Approx(0.2 / kTwoPi).epsilon(1e-12));
}

TEST_CASE("Ohmic density values") {
    const auto ohmic = ReservoirModel::ohmic(1.0, 1.0, 1.0);
    CHECK(spectral_density(ohmic, 1.0) ==
          doctest::Approx(std::exp(-1.0) / kTwoPi).epsilon(1e-12));
    for (double s : {0.5, 1.0, 2.0, 3.7}) {
        CHECK(spectral_density(ReservoirModel::ohmic(s, 1.0, 1.0), 0.0) == 0.0);
    }
}

TEST_CASE("negative frequency is rejected") {
    const auto model = ReservoirModel::ohmic(1.0, 1.0, 1.0);
    CHECK_THROWS_AS(spectral_density(model, -0.1), std::invalid_argument);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(ReservoirModel::lorentzian(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ReservoirModel::ohmic(-0.5, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("J(w) >= 0 across randomized valid parameters") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> pos(0.05, 5.0);
    std::uniform_real_distribution<double> freq(0.0, 30.0);
    for (int i = 0; i < 200; ++i) {
        const auto lor = ReservoirModel::lorentzian(pos(rng), pos(rng));
        const auto ohm = ReservoirModel::ohmic(pos(rng), pos(rng), pos(rng));
        const double w = freq(rng);
        CHECK(spectral_density(lor, w) >= 0.0);
        CHECK(spectral_density(ohm, w) >= 0.0);
    }
}

TEST_CASE("kernel values at tau = 0") {
    const auto lor = ReservoirModel::lorentzian(1.0, 0.5);
    CHECK(correlation_kernel(lor, 0.0).real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(correlation_kernel(lor, 0.0).imag() == 0.0);

    const auto ohm = ReservoirModel::ohmic(1.0, 1.0, 1.0);
    CHECK(correlation_kernel(ohm, 0.0).real() ==
          doctest::Approx(1.0 / kTwoPi).epsilon(1e-12));
    CHECK(std::abs(correlation_kernel(ohm, 0.0).imag()) < 1e-15);
}

TEST_CASE("Ohmic closed form agrees with quadrature of the density") {
    for (double s : {0.5, 1.0, 2.0}) {
        const auto model = ReservoirModel::ohmic(s, 1.0, 1.0);
        for (double tau : {0.0, 0.1, 1.0, 10.0}) {
            const cd closed = correlation_kernel(model, tau);
            const cd direct = kernel_by_quadrature(model, tau);
            CHECK(std::abs(closed - direct) < 1e-8);
        }
    }
}

TEST_CASE("exponential Lorentzian kernel equals the full-line frequency integral") {
    const auto model = ReservoirModel::lorentzian(1.0, 0.5);
    // Truncated full-line quadrature; the tail beyond |w - w0| = 2000
    // is bounded by gamma0*lambda^2/(pi*2000) ~ 4e-5.
    for (double tau : {0.0, 0.1, 1.0}) {
        const cd direct =
            oqs::integrate_adaptive(
                [&](double w) {
                    const double d = w - model.omega0;
                    const auto& p = model.as_lorentzian();
                    return p.gamma0 * p.lambda * p.lambda /
                           (kTwoPi * (d * d + p.lambda * p.lambda)) *
                           std::exp(cd(0.0, -d * tau));
                },
                model.omega0 - 2000.0, model.omega0 + 2000.0, 1e-10, 1e-10, 60000)
                .value;
        const cd closed = correlation_kernel(model, tau);
        CHECK(std::abs(closed - direct) < 1e-4);
    }
}

TEST_CASE("half-line Lorentzian kernel") {
    const auto model =
        ReservoirModel::lorentzian(1.0, 0.5, 1.0, oqs::LorentzianKernel::HalfLine);
    // tau = 0: f(0) = Int_0^inf J = (gamma0*lambda/2pi)(pi/2 + atan(w0/lambda)).
    const double f0 = 1.0 * 0.5 / kTwoPi * (std::numbers::pi / 2.0 + std::atan(2.0));
    CHECK(correlation_kernel(model, 0.0).real() == doctest::Approx(f0).epsilon(1e-8));
    // Positive tau: cross-check against the literal truncated integral.
    for (double tau : {0.5, 2.0}) {
        const cd direct = oqs::integrate_adaptive(
                              [&](double w) {
                                  return spectral_density(model, w) *
                                         std::exp(cd(0.0, (model.omega0 - w) * tau));
                              },
                              0.0, 2000.0, 1e-10, 1e-10, 60000)
                              .value;
        CHECK(std::abs(correlation_kernel(model, tau) - direct) < 1e-4);
    }
}

TEST_CASE("kernel modulus decays toward zero") {
    const ReservoirModel models[] = {
        ReservoirModel::lorentzian(0.2, 15.0),
        ReservoirModel::ohmic(0.5, 1.0, 1.0),
        ReservoirModel::ohmic(1.0, 1.0, 1.0),
        ReservoirModel::ohmic(2.0, 1.0, 1.0),
    };
    for (const auto& model : models) {
        const double f0 = std::abs(correlation_kernel(model, 0.0));
        CHECK(std::abs(correlation_kernel(model, 200.0)) < 1e-3 * f0);
    }
    // At tau = 50 the 1e-3 bound holds for all defaults except the
    // sub-Ohmic power-law tail, which sits near (1 + 50^2)^(-0.75) ~ 2.8e-3.
    for (const auto& model : {ReservoirModel::lorentzian(1.0, 0.5),
                              ReservoirModel::ohmic(1.0, 1.0, 1.0),
                              ReservoirModel::ohmic(2.0, 1.0, 1.0)}) {
        const double f0 = std::abs(correlation_kernel(model, 0.0));
        CHECK(std::abs(correlation_kernel(model, 50.0)) < 1e-3 * f0);
    }
    const auto sub = ReservoirModel::ohmic(0.5, 1.0, 1.0);
    const double ratio = std::abs(correlation_kernel(sub, 50.0)) /
                         std::abs(correlation_kernel(sub, 0.0));
    CHECK(ratio == doctest::Approx(std::pow(1.0 + 2500.0, -0.75)).epsilon(1e-6));
}
