#include "oqs/quadrature.hpp"
#include "oqs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace oqs {
namespace {

// 15-point Kronrod nodes with the embedded 7-point Gauss rule.
// Columns: abscissa, Gauss weight (0 for Kronrod-only nodes), Kronrod weight.
constexpr double kNodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Segment {
    double a, b;
    std::complex<double> value;
    double err;
};

Segment evaluate(const Integrand& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::complex<double> y0 = f(mid);
    std::complex<double> g7 = kNodes[0][1] * y0;
    std::complex<double> k15 = kNodes[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i][0];
        const std::complex<double> yi = f(mid + dx) + f(mid - dx);
        g7 += kNodes[i][1] * yi;
        k15 += kNodes[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;

    double err = std::abs(k15 - g7);
    if (err == 0.0) err = std::abs(k15) * std::numeric_limits<double>::epsilon() * 50.0;
    return Segment{a, b, k15, err};
}

QuadResult adapt(const Integrand& f, double a, double b, double abs_tol,
                 double rel_tol, int max_intervals) {
    std::vector<Segment> segs;
    segs.reserve(64);
    segs.push_back(evaluate(f, a, b));

    auto totals = [&segs]() {
        std::complex<double> v{0.0, 0.0};
        double e = 0.0;
        for (const auto& s : segs) {
            v += s.value;
            e += s.err;
        }
        return std::pair{v, e};
    };

    while (true) {
        auto [value, err] = totals();
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            throw QuadratureError("quadrature: integrand produced a non-finite value",
                                  value, err);
        }
        if (err <= std::max(abs_tol, rel_tol * std::abs(value))) {
            return QuadResult{value, err};
        }
        if (static_cast<int>(segs.size()) >= max_intervals) {
            throw QuadratureError(
                "quadrature: no convergence after " + std::to_string(segs.size()) +
                    " subdivisions (best error " + std::to_string(err) + ")",
                value, err);
        }
        auto worst = std::max_element(
            segs.begin(), segs.end(),
            [](const Segment& l, const Segment& r) { return l.err < r.err; });
        const double lo = worst->a, hi = worst->b;
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) {
            // Interval collapsed to machine precision: accept its estimate.
            worst->err = 0.0;
            continue;
        }
        *worst = evaluate(f, lo, mid);
        segs.push_back(evaluate(f, mid, hi));
    }
}

} // namespace

QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              double abs_tol, double rel_tol, int max_intervals) {
    if (!(b > a)) throw std::invalid_argument("integrate_adaptive: requires b > a");
    return adapt(f, a, b, abs_tol, rel_tol, max_intervals);
}

QuadResult integrate_semi_infinite(const Integrand& f, double lower,
                                   double abs_tol, double rel_tol,
                                   int max_intervals) {
    // omega = lower + u/(1-u), d(omega) = du/(1-u)^2, u in [0, 1).
    auto mapped = [&f, lower](double u) -> std::complex<double> {
        const double one_minus = 1.0 - u;
        const double omega = lower + u / one_minus;
        return f(omega) / (one_minus * one_minus);
    };
    return adapt(mapped, 0.0, 1.0, abs_tol, rel_tol, max_intervals);
}

} // namespace oqs
