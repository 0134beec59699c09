#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace oqs {

/// Base class for failures of the numerical kernels.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature did not reach the requested tolerance.
/// Carries the best estimate obtained so far and its error bound.
class QuadratureError : public NumericsError {
public:
    QuadratureError(const std::string& what, std::complex<double> best_value,
                    double best_error)
        : NumericsError(what), best_value_(best_value), best_error_(best_error) {}

    std::complex<double> best_value() const { return best_value_; }
    double best_error() const { return best_error_; }

private:
    std::complex<double> best_value_;
    double best_error_;
};

/// Root bracket with equal signs at both endpoints.
class BracketError : public NumericsError {
public:
    BracketError(const std::string& what, double g_lo, double g_hi)
        : NumericsError(what), g_lo_(g_lo), g_hi_(g_hi) {}

    double g_at_lower() const { return g_lo_; }
    double g_at_upper() const { return g_hi_; }

private:
    double g_lo_;
    double g_hi_;
};

/// Non-finite value produced while stepping the Volterra solver.
class VolterraError : public NumericsError {
public:
    VolterraError(const std::string& what, std::size_t step)
        : NumericsError(what), step_(step) {}

    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

} // namespace oqs
