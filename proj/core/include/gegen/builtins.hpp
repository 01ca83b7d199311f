#ifndef GEGEN_BUILTINS_HPP
#define GEGEN_BUILTINS_HPP

#include "gegen/target_function.hpp"

#include <complex>
#include <span>
#include <string>

namespace gegen {

/// Registry of the experiment functions. Accepted names:
///   f1                 sqrt(x1^2 + x2^2 + 1/2), d = 2
///   f2                 1 / (x1^2 + x2^2 + 1),   d = 2
///   runge(h)           1 / (x1^2 + x2^2 + h^2), d = 2
///   poly_test          P_2(x1) P_3(x2),         d = 2
///   finite_reg(s,d)    prod_j |x_j|^s on [-1,1]^d
/// Throws config_error for anything else.
TargetFunction builtin_function(const std::string& name);

/// Largest integer Sobolev order m with d^m/dx^m |x|^s in L^2(-1,1)
/// (per-dimension order of finite_reg(s,d)).
int finite_reg_sobolev_order(double s);

/// Weighted derivative norm V_{k,m} of finite_reg(s,d) at family parameter
/// lambda, in closed form through Beta integrals.
double finite_reg_vkm(double s, double lambda, const MultiIndex& k, const MultiIndex& m);

namespace oracles {

/// Principal-branch analytic continuation of a built-in at a complex point.
/// Throws std::domain_error within 1e-8 of the function's singular variety
/// and config_error for functions without a registered continuation.
std::complex<double> complex_eval_builtin(const std::string& name,
                                          std::span<const std::complex<double>> z);

} // namespace oracles

} // namespace gegen

#endif
