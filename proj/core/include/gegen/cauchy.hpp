#ifndef GEGEN_CAUCHY_HPP
#define GEGEN_CAUCHY_HPP

#include "gegen/multi_index.hpp"

#include <complex>
#include <vector>

namespace gegen::oracles {

/// d-tuple of complex numbers.
using ComplexPoint = std::vector<std::complex<double>>;

enum class ChebKind { T, U };

/// sqrt(z^2-1) with the branch fixed so |z + sqrt(z^2-1)| >= 1 (the root
/// exterior to the unit circle in the Joukowski parametrization).
std::complex<double> exterior_sqrt(std::complex<double> z);

/// Closed-form weighted Cauchy transform of T_n or U_n off [-1,1]:
/// T: 1/(sqrt(z^2-1) u^n) for n >= 1, 1/(2 sqrt(z^2-1)) for n = 0;
/// U: 1/u^(n+1); u = z + sqrt(z^2-1) with |u| >= 1.
std::complex<double> cheb_closed_form(ChebKind kind, int n, std::complex<double> z);

/// Q_n^(lambda)(z) = (1/(2 h_n)) int w_l(x) C_n(x) / (z-x) dx by Gauss-Jacobi
/// quadrature with order doubling to an absolute tolerance of 1e-12
/// (long double accumulation). lambda = 0 dispatches to the Chebyshev-T
/// closed form. Requires dist(z, [-1,1]) > 1e-6.
std::complex<double> cauchy_q(double lambda, int n, std::complex<double> z, double tol = 1e-12);

/// Distance from z to the segment [-1,1].
double distance_to_cut(std::complex<double> z);

/// Point on the Bernstein ellipse E_rho at angle theta.
std::complex<double> bernstein_point(double rho, double theta);

} // namespace gegen::oracles

#endif
