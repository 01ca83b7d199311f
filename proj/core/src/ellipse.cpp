#include "gegen/ellipse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gegen {

double ellipse_circumference(double semi_major, double semi_minor) {
    if (!(semi_major > 0.0) || semi_minor < 0.0 || semi_minor > semi_major)
        throw std::domain_error("ellipse_circumference: need a >= b >= 0, a > 0");
    if (semi_minor == 0.0) return 4.0 * semi_major;

    // L = 4 a E(e); E computed from the AGM sequence with c_n = (a_n - b_n)/2:
    // E = K (1 - sum 2^{n-1} c_n^2), K = pi / (2 agm(1, b/a)).
    long double a = 1.0L;
    long double b = static_cast<long double>(semi_minor) / semi_major;
    long double c = std::sqrt(1.0L - b * b); // eccentricity = c_0
    long double csum = 0.5L * c * c;
    long double pow2 = 1.0L;
    for (int it = 0; it < 64 && c > 1e-20L; ++it) {
        const long double an = 0.5L * (a + b);
        const long double bn = std::sqrt(a * b);
        c = 0.5L * (a - b);
        a = an;
        b = bn;
        pow2 *= 2.0L;
        csum += pow2 * 0.5L * c * c;
    }
    const long double K = std::numbers::pi_v<long double> / (2.0L * a);
    const long double E = K * (1.0L - csum);
    return static_cast<double>(4.0L * semi_major * E);
}

double bernstein_circumference(double rho) {
    if (!(rho >= 1.0)) throw std::domain_error("bernstein_circumference: rho must be >= 1");
    const double a = 0.5 * (rho + 1.0 / rho);
    const double b = 0.5 * (rho - 1.0 / rho);
    return ellipse_circumference(a, b);
}

EllipseParams ellipse_from_h(double h) {
    if (!(h > 0.0)) throw std::domain_error("ellipse_from_h: h must be > 0");
    EllipseParams e;
    e.h = h;
    e.rho = h + std::sqrt(1.0 + h * h);
    e.circumference = ellipse_circumference(e.semi_major(), e.semi_minor());
    return e;
}

EllipseParams ellipse_from_rho(double rho) {
    if (!(rho > 1.0)) throw std::domain_error("ellipse_from_rho: rho must be > 1");
    EllipseParams e;
    e.rho = rho;
    e.h = 0.5 * (rho - 1.0 / rho);
    e.circumference = ellipse_circumference(e.semi_major(), e.semi_minor());
    return e;
}

} // namespace gegen
