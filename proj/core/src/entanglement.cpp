#include "oqs/entanglement.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace oqs {

namespace {

void check_pair_norm(std::complex<double> c_m, std::complex<double> c_n) {
    if (std::norm(c_m) + std::norm(c_n) > 1.0 + 1e-6)
        throw std::invalid_argument(
            "non-physical amplitudes: |c_m|^2 + |c_n|^2 exceeds 1");
}

} // namespace

TwoQubitState TwoQubitState::from_matrix(const Eigen::Matrix4cd& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("TwoQubitState: matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-12 || std::abs(rho.trace().imag()) > 1e-12)
        throw std::invalid_argument("TwoQubitState: trace must be 1");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("TwoQubitState: matrix is not positive semidefinite");
    return TwoQubitState{rho};
}

double concurrence_from_amplitudes(std::complex<double> c_m,
                                   std::complex<double> c_n) {
    check_pair_norm(c_m, c_n);
    return 2.0 * std::abs(c_m * c_n);
}

TwoQubitState reduced_density_matrix(std::complex<double> c_m,
                                     std::complex<double> c_n) {
    check_pair_norm(c_m, c_n);
    const double p_m = std::norm(c_m);
    const double p_n = std::norm(c_n);
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    rho(1, 1) = p_m;
    rho(2, 2) = p_n;
    rho(1, 2) = c_m * std::conj(c_n);
    rho(2, 1) = std::conj(rho(1, 2));
    const double remainder = 1.0 - p_m - p_n;
    if (remainder >= 0.0) {
        rho(3, 3) = remainder;
    } else {
        // |c_m|^2 + |c_n|^2 marginally above 1 (allowed up to 1e-6):
        // clamp |gg> to zero and rescale so the trace stays exactly 1.
        rho /= p_m + p_n;
    }
    return TwoQubitState{rho};
}

double wootters_concurrence(const TwoQubitState& state) {
    // sigma_y x sigma_y in the {ee, eg, ge, gg} basis is the
    // anti-diagonal {-1, 1, 1, -1}.
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;

    // The sqrt-eigenvalues of rho*rho_tilde equal the singular values of
    // sqrt(rho) * yy * conj(sqrt(rho)); going through the SVD avoids
    // taking square roots of near-zero eigenvalues, which would amplify
    // machine noise to ~1e-8.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(state.rho);
    Eigen::Vector4d w = es.eigenvalues();
    for (int i = 0; i < 4; ++i) w(i) = std::sqrt(std::max(w(i), 0.0));
    const Eigen::Matrix4cd sqrt_rho =
        es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();

    const Eigen::Matrix4cd b = sqrt_rho * yy * sqrt_rho.conjugate();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(b);
    const Eigen::Vector4d& lambdas = svd.singularValues(); // sorted descending
    return std::max(0.0, lambdas(0) - lambdas(1) - lambdas(2) - lambdas(3));
}

SteadyPrediction predict_steady(const ReservoirModel& model, const InitialState& init,
                                int m, int n, const BoundStateReport& report) {
    init.validate();
    if (m == n || m < 1 || n < 1 || m > init.n_qubits || n > init.n_qubits)
        throw std::invalid_argument("predict_steady: invalid qubit pair");

    const std::complex<double> s0 = init.collective_sum();
    SteadyPrediction pred;
    pred.dark_m = init.amplitudes[static_cast<std::size_t>(m - 1)] -
                  s0 / static_cast<double>(init.n_qubits);
    pred.dark_n = init.amplitudes[static_cast<std::size_t>(n - 1)] -
                  s0 / static_cast<double>(init.n_qubits);

    const bool exponential_lorentzian =
        model.is_lorentzian() &&
        model.as_lorentzian().kernel == LorentzianKernel::Exponential;
    const bool bound = report.exists && !exponential_lorentzian;

    const double b = bound ? report.beta_sq * std::abs(s0) : 0.0;
    pred.bs_weight = b;

    const double am = std::abs(pred.dark_m);
    const double an = std::abs(pred.dark_n);
    pred.concurrence_min = 2.0 * std::max(am - b, 0.0) * std::max(an - b, 0.0);
    pred.concurrence_max = std::min(1.0, 2.0 * (am + b) * (an + b));
    pred.concurrence_mean = 0.5 * (pred.concurrence_min + pred.concurrence_max);
    return pred;
}

} // namespace oqs
