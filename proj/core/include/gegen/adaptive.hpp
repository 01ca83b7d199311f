#ifndef GEGEN_ADAPTIVE_HPP
#define GEGEN_ADAPTIVE_HPP

#include <functional>

namespace gegen::oracles {

/// Adaptive Gauss-Kronrod (7,15) integration of f over [a,b] to an absolute
/// tolerance: worst-segment bisection on a priority queue, deterministic
/// split order. Throws numerical_error past the subdivision cap.
double adaptive_integral_1d(const std::function<double(double)>& f, double a, double b,
                            double tol, int max_segments = 200000);

/// Integral of f over [a, infinity) for decaying integrands: exp-scaled
/// window doubling, each window integrated adaptively, stopping once two
/// consecutive windows contribute below tol/4.
double adaptive_integral_to_inf(const std::function<double(double)>& f, double a, double tol);

/// Iterated 2D integral over [ax,bx] x [ay,by].
double adaptive_integral_2d(const std::function<double(double, double)>& f,
                            double ax, double bx, double ay, double by, double tol);

/// Integral of g(x) (1-x^2)^(lambda-1/2) over [-1,1] with the endpoint weight
/// singularity removed by x = sin t (needs lambda > -1/2).
double integrate_weighted_1d(const std::function<double(double)>& g, double lambda, double tol);

} // namespace gegen::oracles

#endif
