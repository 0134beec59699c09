#include "oqs/roots.hpp"
#include "oqs/errors.hpp"

#include <cmath>
#include <string>

namespace oqs {

double find_root_bracketed(const std::function<double(double)>& g, double a,
                           double b, double x_tol, double g_tol) {
    if (!(b > a)) throw std::invalid_argument("find_root_bracketed: requires b > a");

    double ga = g(a);
    double gb = g(b);
    if (std::abs(ga) <= g_tol) return a;
    if (std::abs(gb) <= g_tol) return b;
    if ((ga > 0) == (gb > 0)) {
        throw BracketError("find_root_bracketed: invalid bracket, g(" +
                               std::to_string(a) + ") = " + std::to_string(ga) +
                               " and g(" + std::to_string(b) + ") = " +
                               std::to_string(gb) + " share a sign",
                           ga, gb);
    }

    int same_side = 0; // consecutive updates to the same endpoint
    int last_side = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const double width = b - a;
        if (width <= x_tol) break;

        double x = b - gb * width / (gb - ga); // secant through the endpoints
        const double margin = 0.01 * width;
        if (!(x > a + margin && x < b - margin) || same_side >= 2) {
            x = a + 0.5 * width; // bisect
            same_side = 0;
        }
        const double gx = g(x);
        if (std::abs(gx) <= g_tol) return x;
        int side;
        if ((gx > 0) == (ga > 0)) {
            a = x;
            ga = gx;
            side = -1;
        } else {
            b = x;
            gb = gx;
            side = 1;
        }
        same_side = (side == last_side) ? same_side + 1 : 1;
        last_side = side;
    }
    return std::abs(ga) < std::abs(gb) ? a : b;
}

} // namespace oqs
