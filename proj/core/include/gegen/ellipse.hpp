#ifndef GEGEN_ELLIPSE_HPP
#define GEGEN_ELLIPSE_HPP

namespace gegen {

/// Bernstein ellipse E_rho: image of |u| = rho > 1 under z = (u + 1/u)/2.
/// Foci +-1, semi-axes (rho + 1/rho)/2 and (rho - 1/rho)/2; the elevation
/// parameter h = (rho - 1/rho)/2 satisfies rho = h + sqrt(1 + h^2).
struct EllipseParams {
    double rho = 1.0;
    double h = 0.0;
    double circumference = 0.0;

    double semi_major() const { return 0.5 * (rho + 1.0 / rho); }
    double semi_minor() const { return 0.5 * (rho - 1.0 / rho); }
};

EllipseParams ellipse_from_h(double h);     // requires h > 0
EllipseParams ellipse_from_rho(double rho); // requires rho > 1

/// Circumference of the ellipse with the given semi-axes, via the AGM form
/// of the complete elliptic integral of the second kind (relative accuracy
/// well below 1e-13; the degenerate b = 0 case returns 4a).
double ellipse_circumference(double semi_major, double semi_minor);

/// L(E_rho) for rho >= 1 (rho = 1 gives the degenerate segment, length 4).
double bernstein_circumference(double rho);

} // namespace gegen

#endif
