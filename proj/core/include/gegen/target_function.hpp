#ifndef GEGEN_TARGET_FUNCTION_HPP
#define GEGEN_TARGET_FUNCTION_HPP

#include "gegen/analyticity.hpp"
#include "gegen/multi_index.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>

namespace gegen {

/// A function on [-1,1]^d together with whatever is known about it:
/// analyticity geometry for the bound machinery, a Sobolev multi-index for
/// finite-regularity functions, and (built-ins only) complex continuations.
struct TargetFunction {
    using RealEval = std::function<double(std::span<const double>)>;
    using ComplexEval = std::function<std::complex<double>(std::span<const std::complex<double>>)>;
    using Profile = std::function<std::complex<double>(std::complex<double>)>;

    std::string name;
    int dim = 1;
    RealEval evaluator;

    /// Limit analyticity data (largest valid h for region mode); bound
    /// evaluation shrinks it, rate predictions use it as-is.
    std::optional<AnalyticityContext> analyticity;

    /// Sobolev order m for finite-regularity functions.
    std::optional<MultiIndex> regularity;

    ComplexEval complex_eval;          // empty unless a continuation is registered
    Profile isotropic_profile;         // g with f(x) = g(x_1^2 + ... + x_d^2)
    std::optional<double> singular_w;  // g is singular at w = singular_w

    double operator()(std::span<const double> x) const { return evaluator(x); }
};

} // namespace gegen

#endif
