#include "gegen/family.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gegen {

FamilyParam::FamilyParam(double lambda) : lambda_(lambda) {
    if (!(lambda >= 0.0)) {
        throw std::domain_error("FamilyParam: lambda must be >= 0, got " + std::to_string(lambda));
    }
}

namespace {

template <typename Real>
std::vector<Real> poly_sequence_impl(double lambda, int max_degree, Real x) {
    std::vector<Real> v(static_cast<std::size_t>(max_degree) + 1);
    v[0] = Real(1);
    if (max_degree == 0) return v;
    const Real lam = static_cast<Real>(lambda);
    v[1] = (lambda == 0.0) ? x : 2 * lam * x;
    for (int n = 2; n <= max_degree; ++n) {
        if (lambda == 0.0) {
            v[n] = 2 * x * v[n - 1] - v[n - 2];
        } else {
            v[n] = (2 * (n - 1 + lam) * x * v[n - 1] - (n - 2 + 2 * lam) * v[n - 2]) / Real(n);
        }
    }
    return v;
}

} // namespace

double eval_poly(const FamilyParam& fam, int n, double x) {
    if (n < 0) throw std::domain_error("eval_poly: degree must be >= 0");
    if (std::abs(x) > 1.0) {
        throw std::domain_error("eval_poly: |x| > 1; complex-plane evaluation belongs to the oracles");
    }
    return poly_sequence_impl<double>(fam.lambda(), n, x)[static_cast<std::size_t>(n)];
}

std::vector<double> eval_poly_sequence(const FamilyParam& fam, int max_degree, double x) {
    if (max_degree < 0) throw std::domain_error("eval_poly_sequence: max_degree must be >= 0");
    return poly_sequence_impl<double>(fam.lambda(), max_degree, x);
}

std::vector<long double> eval_poly_sequence(const FamilyParam& fam, int max_degree, long double x) {
    if (max_degree < 0) throw std::domain_error("eval_poly_sequence: max_degree must be >= 0");
    return poly_sequence_impl<long double>(fam.lambda(), max_degree, x);
}

double eval_at_one(const FamilyParam& fam, int n) {
    if (n < 0) throw std::domain_error("eval_at_one: degree must be >= 0");
    const double lam = fam.lambda();
    if (lam == 0.0) return n == 0 ? 1.0 : 2.0 / n;
    if (n == 0) return 1.0;
    // Gamma(n+2l) / (n! Gamma(2l))
    return std::exp(std::lgamma(n + 2 * lam) - std::lgamma(n + 1.0) - std::lgamma(2 * lam));
}

double norm_constant(const FamilyParam& fam, int n) {
    if (n < 0) throw std::domain_error("norm_constant: degree must be >= 0");
    const double lam = fam.lambda();
    if (lam == 0.0) return n == 0 ? std::numbers::pi : std::numbers::pi / 2.0;
    const double log_h = (1.0 - 2.0 * lam) * std::numbers::ln2 + std::log(std::numbers::pi)
                       - 2.0 * std::lgamma(lam)
                       + std::lgamma(n + 2.0 * lam) - std::lgamma(n + 1.0) - std::log(n + lam);
    return std::exp(log_h);
}

double weight_integral(double lambda) {
    if (!(lambda > -0.5)) throw std::domain_error("weight_integral: lambda must exceed -1/2");
    // 2^(2l) Gamma(l+1/2)^2 / Gamma(2l+1)
    return std::exp(2.0 * lambda * std::numbers::ln2 + 2.0 * std::lgamma(lambda + 0.5)
                    - std::lgamma(2.0 * lambda + 1.0));
}

} // namespace gegen
