#pragma once

#include <functional>

namespace oqs {

/// Finds a root of g on the bracket [a, b], where g(a) and g(b) must not
/// share a sign.  Secant steps are taken whenever they land strictly
/// inside the current bracket and make progress; otherwise the bracket is
/// bisected, so the result never leaves [a, b].  Returns x with
/// |g(x)| <= g_tol or with the bracket narrowed below x_tol.
double find_root_bracketed(const std::function<double(double)>& g, double a,
                           double b, double x_tol = 1e-10,
                           double g_tol = 1e-10);

} // namespace oqs
