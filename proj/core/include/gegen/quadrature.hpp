#ifndef GEGEN_QUADRATURE_HPP
#define GEGEN_QUADRATURE_HPP

#include "gegen/family.hpp"

#include <vector>

namespace gegen {

/// Gauss-Jacobi rule for the weight (1-x^2)^(lambda-1/2).
///
/// nodes/weights are the binary64 interface; nodes_hi/weights_hi carry the
/// same rule polished to long double. Applying the rule through the _hi
/// arrays keeps the node-perturbation error (which grows with the degree of
/// the integrand) below the coefficient noise floor.
///
/// Immutable after construction; safe to share across threads.
struct QuadratureRule {
    double lambda = 0.0;
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<long double> nodes_hi;
    std::vector<long double> weights_hi;

    /// Sum of f over the rule: sum_i w_i f(x_i), accumulated in long double.
    template <typename F>
    long double apply(F&& f) const {
        long double acc = 0.0L;
        for (int i = 0; i < order; ++i) acc += weights_hi[i] * f(nodes_hi[i]);
        return acc;
    }
};

/// Build the order-point Gauss rule for weight (1-x^2)^(lambda-1/2):
/// symmetric-tridiagonal (Golub-Welsch) eigensolve on the Jacobi-matrix
/// recurrence coefficients, then a long double Newton polish of each node
/// and Christoffel-function weights. Deterministic for fixed inputs.
/// Requires lambda > -1/2; throws numerical_error if the eigensolve stalls.
QuadratureRule gauss_rule(const FamilyParam& fam, int order);
QuadratureRule gauss_rule(double lambda, int order);

} // namespace gegen

#endif
