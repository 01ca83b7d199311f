#include "gegen/cauchy.hpp"

#include "gegen/errors.hpp"
#include "gegen/family.hpp"
#include "gegen/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gegen::oracles {

std::complex<double> exterior_sqrt(std::complex<double> z) {
    std::complex<double> s = std::sqrt(z * z - 1.0);
    if (std::abs(z + s) < 1.0) s = -s;
    return s;
}

std::complex<double> cheb_closed_form(ChebKind kind, int n, std::complex<double> z) {
    if (n < 0) throw std::domain_error("cheb_closed_form: degree must be >= 0");
    const std::complex<double> s = exterior_sqrt(z);
    const std::complex<double> u = z + s;
    if (kind == ChebKind::U) return std::pow(u, -(n + 1));
    if (n == 0) return 1.0 / (2.0 * s);
    return 1.0 / (s * std::pow(u, n));
}

double distance_to_cut(std::complex<double> z) {
    const double x = z.real(), y = std::abs(z.imag());
    if (x < -1.0) return std::hypot(x + 1.0, y);
    if (x > 1.0) return std::hypot(x - 1.0, y);
    return y;
}

std::complex<double> bernstein_point(double rho, double theta) {
    const std::complex<double> u = std::polar(rho, theta);
    return 0.5 * (u + 1.0 / u);
}

namespace {

const QuadratureRule& cached_rule(double lambda, int order) {
    static std::map<std::pair<double, int>, QuadratureRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({lambda, order});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(lambda, order), gauss_rule(lambda, order)).first;
    return it->second;
}

std::complex<double> q_by_rule(double lambda, int n, std::complex<double> z, int order) {
    const QuadratureRule& rule = cached_rule(lambda, order);
    const FamilyParam fam(lambda);
    const long double zr = z.real(), zi = z.imag();
    long double acc_re = 0.0L, acc_im = 0.0L;
    for (int i = 0; i < order; ++i) {
        const long double x = rule.nodes_hi[static_cast<std::size_t>(i)];
        const auto vals = eval_poly_sequence(fam, n, x);
        const long double num = rule.weights_hi[static_cast<std::size_t>(i)] * vals[static_cast<std::size_t>(n)];
        const long double dr = zr - x, di = zi;
        const long double den = dr * dr + di * di;
        acc_re += num * dr / den;
        acc_im += num * (-di) / den;
    }
    const long double scale = 0.5L / static_cast<long double>(norm_constant(fam, n));
    return {static_cast<double>(acc_re * scale), static_cast<double>(acc_im * scale)};
}

} // namespace

std::complex<double> cauchy_q(double lambda, int n, std::complex<double> z, double tol) {
    if (n < 0) throw std::domain_error("cauchy_q: degree must be >= 0");
    if (lambda < 0.0) throw std::domain_error("cauchy_q: lambda must be >= 0");
    if (lambda == 0.0) return cheb_closed_form(ChebKind::T, n, z);
    if (distance_to_cut(z) <= 1e-6)
        throw std::domain_error("cauchy_q: z within 1e-6 of the cut [-1,1]");

    int order = std::max(64, n + 16);
    std::complex<double> prev = q_by_rule(lambda, n, z, order);
    for (int it = 0; it < 10; ++it) {
        order *= 2;
        const std::complex<double> cur = q_by_rule(lambda, n, z, order);
        if (std::abs(cur - prev) <= tol) return cur;
        prev = cur;
    }
    throw numerical_error("cauchy_q: quadrature did not reach tolerance (z too close to the cut?)");
}

} // namespace gegen::oracles
