#include "gegen/bounds.hpp"

#include "gegen/ellipse.hpp"
#include "gegen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gegen {

namespace {

constexpr double kPi = std::numbers::pi;

// Dbar with rho = 1 admitted for lambda >= 1 (the factor stays finite there);
// kappa evaluates it at sqrt(eps) + sqrt(1+eps), which is 1 when eps = 0.
double qn_dbar_relaxed(double rho, double lambda) {
    const double t = lambda >= 1.0 ? 1.0 + 1.0 / (rho * rho) : 1.0 - 1.0 / (rho * rho);
    return std::pow(t, lambda - 1.0) / rho;
}

void require_lambda_pos(double lambda, const char* who) {
    if (!(lambda > 0.0)) throw std::domain_error(std::string(who) + ": requires lambda > 0");
}

void require_eps_rule(double lambda, double epsilon, const char* who) {
    if (lambda > 0.0 && lambda < 1.0 && !(epsilon > 0.0))
        throw std::domain_error(std::string(who)
                                + ": epsilon must be positive for 0 < lambda < 1 (Dbar/D blow up as rho_hat -> 1)");
}

double require_b(const AnalyticityContext& ctx, const char* who) {
    if (!ctx.B_f) throw std::domain_error(std::string(who) + ": context is missing B_f");
    return *ctx.B_f;
}

double log_qn_bound(double rho, double lambda, int n) {
    if (lambda == 1.0) return -(n + 1.0) * std::log(rho);
    if (n == 0) return std::log(qn_dbar(rho, lambda));
    return std::log(qn_dconst(rho, lambda)) + (1.0 - lambda) * std::log(static_cast<double>(n))
           - n * std::log(rho);
}

double l2_norm(const MultiIndex& k) {
    double s = 0.0;
    for (int e : k) s += static_cast<double>(e) * e;
    return std::sqrt(s);
}

} // namespace

double qn_dbar(double rho, double lambda) {
    if (!(rho > 1.0)) throw std::domain_error("qn_dbar: rho must exceed 1");
    require_lambda_pos(lambda, "qn_dbar");
    const double t = lambda >= 1.0 ? 1.0 + 1.0 / (rho * rho) : 1.0 - 1.0 / (rho * rho);
    return std::pow(t, lambda - 1.0) / rho;
}

double qn_dconst(double rho, double lambda) {
    if (!(rho > 1.0)) throw std::domain_error("qn_dconst: rho must exceed 1");
    require_lambda_pos(lambda, "qn_dconst");
    const double t = lambda >= 1.0 ? 1.0 + 1.0 / (rho * rho) : 1.0 - 1.0 / (rho * rho);
    const double e = lambda >= 1.0 ? 1.0 / 12.0 : 1.0 / 12.0 + (1.0 - lambda) / (2.0 * lambda);
    return std::tgamma(lambda) / rho * std::exp(e) * std::pow(t, lambda - 1.0);
}

double qn_bound(double rho, double lambda, int n) {
    if (n < 0) throw std::domain_error("qn_bound: degree must be >= 0");
    if (lambda == 0.0)
        throw std::domain_error("qn_bound: lambda = 0 has a closed form; use cheb_closed_form");
    if (!(rho > 1.0)) throw std::domain_error("qn_bound: rho must exceed 1");
    require_lambda_pos(lambda, "qn_bound");
    return std::exp(log_qn_bound(rho, lambda, n));
}

double coeff_bound_a1(const AnalyticityContext& ctx, double lambda, const MultiIndex& k) {
    require_lambda_pos(lambda, "coeff_bound_a1");
    if (ctx.mode != AnalyticityContext::Mode::polyellipse)
        throw std::domain_error("coeff_bound_a1: needs a polyellipse context");
    if (static_cast<int>(ctx.rho_vec.size()) != k.dim())
        throw std::domain_error("coeff_bound_a1: rho_vec/index dimension mismatch");
    const double B = require_b(ctx, "coeff_bound_a1");

    double lg = std::log(B) - k.dim() * std::log(kPi);
    for (int j = 0; j < k.dim(); ++j) {
        const double rho = ctx.rho_vec[static_cast<std::size_t>(j)];
        lg += std::log(bernstein_circumference(rho));
        lg += log_qn_bound(rho, lambda, k[j]);
    }
    return std::exp(lg);
}

std::vector<double> rho_hat(double h, double epsilon, const MultiIndex& k) {
    if (!(h > 0.0)) throw std::domain_error("rho_hat: h must be > 0");
    if (epsilon < 0.0) throw std::domain_error("rho_hat: epsilon must be >= 0");
    if (k.is_zero()) throw std::domain_error("rho_hat: zero multi-index (directions undefined)");
    const double norm = l2_norm(k);
    std::vector<double> out(static_cast<std::size_t>(k.dim()));
    for (int j = 0; j < k.dim(); ++j) {
        const double cjh = k[j] / norm * h;
        const double t = cjh * cjh + epsilon;
        out[static_cast<std::size_t>(j)] = std::sqrt(t) + std::sqrt(1.0 + t);
    }
    return out;
}

namespace {

// rho_hat with the k = 0 convention rho_hat_j = sqrt(eps) + sqrt(1+eps)
// (the c_j = 0 limit), so the corollary bounds extend to the constant term.
std::vector<double> rho_hat_or_limit(double h, double epsilon, const MultiIndex& k) {
    if (!k.is_zero()) return rho_hat(h, epsilon, k);
    const double r0 = std::sqrt(epsilon) + std::sqrt(1.0 + epsilon);
    return std::vector<double>(static_cast<std::size_t>(k.dim()), r0);
}

} // namespace

double coeff_bound_a2(const AnalyticityContext& ctx, double lambda, const MultiIndex& k) {
    require_lambda_pos(lambda, "coeff_bound_a2");
    if (ctx.mode != AnalyticityContext::Mode::region)
        throw std::domain_error("coeff_bound_a2: needs a region context");
    require_eps_rule(lambda, ctx.epsilon, "coeff_bound_a2");
    const double B = require_b(ctx, "coeff_bound_a2");

    const std::vector<double> rh = rho_hat_or_limit(ctx.h, ctx.epsilon, k);
    const double rho = ctx.region_rho();
    const double nk2 = l2_norm(k);

    double lg = std::log(B) - k.dim() * std::log(kPi);
    for (double r : rh) lg += std::log(bernstein_circumference(r));

    if (lambda == 1.0) {
        // prod rho_hat_j^(k_j+1) >= rho^(||k||_2 + 1)
        lg -= (nk2 + 1.0) * std::log(rho);
        return std::exp(lg);
    }
    lg -= nk2 * std::log(rho);
    for (int j = 0; j < k.dim(); ++j) {
        const double r = rh[static_cast<std::size_t>(j)];
        if (k[j] == 0) {
            lg += std::log(qn_dbar(r, lambda));
        } else {
            lg += (1.0 - lambda) * std::log(static_cast<double>(k[j])) + std::log(qn_dconst(r, lambda));
        }
    }
    return std::exp(lg);
}

double cheb_t_bound_a1(const AnalyticityContext& ctx, const MultiIndex& k) {
    if (ctx.mode != AnalyticityContext::Mode::polyellipse)
        throw std::domain_error("cheb_t_bound_a1: needs a polyellipse context");
    if (static_cast<int>(ctx.rho_vec.size()) != k.dim())
        throw std::domain_error("cheb_t_bound_a1: rho_vec/index dimension mismatch");
    const double B = require_b(ctx, "cheb_t_bound_a1");
    double lg = (k.dim() - aleph(k)) * std::numbers::ln2 + std::log(B);
    for (int j = 0; j < k.dim(); ++j) lg -= k[j] * std::log(ctx.rho_vec[static_cast<std::size_t>(j)]);
    return std::exp(lg);
}

double cheb_t_bound_a2(const AnalyticityContext& ctx, const MultiIndex& k) {
    if (ctx.mode != AnalyticityContext::Mode::region)
        throw std::domain_error("cheb_t_bound_a2: needs a region context");
    const double B = require_b(ctx, "cheb_t_bound_a2");
    return std::exp((k.dim() - aleph(k)) * std::numbers::ln2 + std::log(B)
                    - l2_norm(k) * std::log(ctx.region_rho()));
}

double cheb_u_bound_a1(const AnalyticityContext& ctx, const MultiIndex& k) {
    return coeff_bound_a1(ctx, 1.0, k);
}

double cheb_u_bound_a2(const AnalyticityContext& ctx, const MultiIndex& k) {
    return coeff_bound_a2(ctx, 1.0, k);
}

namespace {

double legendre_bound_impl(double B, std::span<const double> radii, double log_rho_power,
                           const MultiIndex& k, bool normalized) {
    double lg = std::log(B) - k.dim() * std::log(kPi) - log_rho_power;
    if (normalized) lg += 0.5 * aleph(k) * std::numbers::ln2;
    for (int j = 0; j < k.dim(); ++j) {
        const double r = radii[static_cast<std::size_t>(j)];
        lg += std::log(bernstein_circumference(r));
        if (k[j] == 0) {
            lg += std::log(qn_dbar(r, 0.5));
        } else {
            if (!normalized) lg += 0.5 * std::log(static_cast<double>(k[j]));
            lg += std::log(qn_dconst(r, 0.5));
        }
    }
    return std::exp(lg);
}

} // namespace

double legendre_bound_a1(const AnalyticityContext& ctx, const MultiIndex& k, bool normalized) {
    if (ctx.mode != AnalyticityContext::Mode::polyellipse)
        throw std::domain_error("legendre_bound_a1: needs a polyellipse context");
    if (static_cast<int>(ctx.rho_vec.size()) != k.dim())
        throw std::domain_error("legendre_bound_a1: rho_vec/index dimension mismatch");
    const double B = require_b(ctx, "legendre_bound_a1");
    double logpow = 0.0;
    for (int j = 0; j < k.dim(); ++j)
        logpow += k[j] * std::log(ctx.rho_vec[static_cast<std::size_t>(j)]);
    return legendre_bound_impl(B, ctx.rho_vec, logpow, k, normalized);
}

double legendre_bound_a2(const AnalyticityContext& ctx, const MultiIndex& k, bool normalized) {
    if (ctx.mode != AnalyticityContext::Mode::region)
        throw std::domain_error("legendre_bound_a2: needs a region context");
    require_eps_rule(0.5, ctx.epsilon, "legendre_bound_a2");
    const double B = require_b(ctx, "legendre_bound_a2");
    const std::vector<double> rh = rho_hat_or_limit(ctx.h, ctx.epsilon, k);
    const double logpow = l2_norm(k) * std::log(ctx.region_rho());
    return legendre_bound_impl(B, rh, logpow, k, normalized);
}

double gamma_factor(double q, int dim) {
    if (!(q > 0.0)) throw std::domain_error("gamma_factor: q must be positive");
    if (dim < 1) throw std::domain_error("gamma_factor: dimension must be >= 1");
    if (q >= 2.0 || std::isinf(q)) return 1.0;
    return std::pow(static_cast<double>(dim), 1.0 / q - 0.5);
}

int m_b(double b) {
    if (!(b >= 0.0)) throw std::domain_error("m_b: b must be >= 0");
    const double r = std::round(b);
    if (std::abs(b - r) < 1e-9) return static_cast<int>(r);
    return static_cast<int>(std::floor(b)) + 1;
}

double int_bound(double a, double b, double M) {
    if (!(a > 0.0) || !(M > 0.0) || b < 0.0)
        throw std::domain_error("int_bound: requires a > 0, M > 0, b >= 0");
    const int mb = m_b(b);
    double sum = 0.0;
    for (int j = 1; j <= mb + 1; ++j) {
        double prod = 1.0;
        for (int i = 0; i <= j - 2; ++i) prod *= (b - i);
        sum += std::pow(M, b - j + 1) / std::pow(a, j) * prod;
    }
    return std::exp(-a * M) * sum;
}

double upsilon(double k, double a, double b) {
    if (!(k >= 1.0) || !(k + a > 1.0) || !(k + b > 1.0))
        throw std::domain_error("upsilon: requires k >= 1, k+a > 1, k+b > 1");
    return std::exp((a - b) / (2.0 * (k + b - 1.0)) + 1.0 / (12.0 * (k + a - 1.0))
                    + (a - 1.0) * (a - b) / k);
}

double c_d(int dim) {
    if (dim < 1) throw std::domain_error("c_d: dimension must be >= 1");
    if (dim == 1) return 1.0;
    double dfact = 1.0; // (d-2)!! with 0!! = (-1)!! = 1
    for (int v = dim - 2; v >= 2; v -= 2) dfact *= v;
    return std::pow(kPi / 2.0, std::floor(dim / 2.0)) / dfact;
}

double kappa_thm41(double lambda, double epsilon) {
    require_lambda_pos(lambda, "kappa_thm41");
    require_eps_rule(lambda, epsilon, "kappa_thm41");
    const double rho0 = std::sqrt(epsilon) + std::sqrt(1.0 + epsilon);
    const double expo = 2.0 * std::max({0.0, (2.0 * lambda - 1.0) / 2.0, (1.0 - lambda) / (2.0 * lambda)})
                        + 1.0 / (24.0 * lambda) + (2.0 * lambda - 1.0) * (2.0 * lambda - 1.0) + 1.0 / 12.0;
    const double core = std::exp(std::lgamma(lambda) - std::lgamma(2.0 * lambda) + expo);
    return std::max(1.0, core) * qn_dbar_relaxed(rho0, lambda);
}

double error_bound_thm41(const AnalyticityContext& ctx, double lambda, double q, int dim, double N) {
    if (lambda < 0.0) throw std::domain_error("error_bound_thm41: lambda must be >= 0");
    if (ctx.mode != AnalyticityContext::Mode::region)
        throw std::domain_error("error_bound_thm41: needs a region context");
    const double B = require_b(ctx, "error_bound_thm41");
    const double gamma = gamma_factor(q, dim);
    const double rho = ctx.region_rho();
    const double ln_rho = std::log(rho);

    if (lambda == 0.0) {
        if (!(N > 0.0)) throw std::domain_error("error_bound_thm41: needs N > 0");
        return B * std::pow(2.0, dim) * c_d(dim) * int_bound(ln_rho, dim - 1.0, N / gamma);
    }

    require_eps_rule(lambda, ctx.epsilon, "error_bound_thm41");
    if (!(N > lambda * gamma * dim / ln_rho))
        throw std::domain_error("error_bound_thm41: side condition N > lambda gamma d / ln rho violated");

    const double rho_eps = std::sqrt(ctx.h * ctx.h + ctx.epsilon)
                           + std::sqrt(1.0 + ctx.h * ctx.h + ctx.epsilon);
    const double L = bernstein_circumference(rho_eps);
    const double kap = kappa_thm41(lambda, ctx.epsilon);
    const double b = lambda * dim + dim - 1.0;
    return B * std::pow(L, dim) * std::pow(kap / kPi, dim) * c_d(dim)
           * int_bound(ln_rho, b, N / gamma);
}

bool FiniteRegularitySpec::rate_applicable(double lambda) const {
    for (int j = 0; j < m.dim(); ++j)
        if (!(m[j] > lambda + 1.0)) return false;
    return true;
}

double finite_reg_coeff_bound(const FamilyParam& fam, const MultiIndex& k,
                              const FiniteRegularitySpec& spec) {
    const double lambda = fam.lambda();
    require_lambda_pos(lambda, "finite_reg_coeff_bound");
    if (k.dim() != spec.m.dim())
        throw std::domain_error("finite_reg_coeff_bound: index/order dimension mismatch");
    if (!spec.V_km) throw std::domain_error("finite_reg_coeff_bound: V_km oracle missing");

    const double V = spec.V_km(k);
    double lg = std::log(V);
    for (int j = 0; j < k.dim(); ++j) {
        const int n = std::min(k[j], spec.m[j]);
        lg -= std::log(norm_constant(fam, k[j]));
        lg += 0.5 * std::log(norm_constant(FamilyParam(lambda + n), k[j] - n));
        for (int s = 0; s < n; ++s) {
            lg += std::log(2.0 * (lambda + s))
                  - std::log(static_cast<double>(k[j] - s))
                  - std::log(k[j] + 2.0 * lambda + s);
        }
    }
    return std::exp(lg);
}

double finite_reg_error_rate(double lambda, const MultiIndex& m) {
    require_lambda_pos(lambda, "finite_reg_error_rate");
    double r = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m.dim(); ++j) {
        if (!(m[j] > lambda + 1.0))
            throw std::domain_error("finite_reg_error_rate: requires every m_j > lambda + 1");
        r = std::min(r, m[j] - lambda - 1.0);
    }
    return r;
}

double sample_b_polyellipse(const TargetFunction& f, std::span<const double> rho, int theta_samples) {
    if (!f.complex_eval)
        throw std::domain_error("sample_b_polyellipse: function has no complex continuation");
    if (static_cast<int>(rho.size()) != f.dim)
        throw std::domain_error("sample_b_polyellipse: radii/dimension mismatch");
    const int d = f.dim;
    const int per_dim = d <= 2 ? theta_samples : (d == 3 ? 64 : 24);
    std::uint64_t total = 1;
    for (int j = 0; j < d; ++j) total *= static_cast<std::uint64_t>(per_dim);

    std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
    double best = 0.0;
    for (std::uint64_t flat = 0; flat < total; ++flat) {
        std::uint64_t rem = flat;
        for (int j = d - 1; j >= 0; --j) {
            const int g = static_cast<int>(rem % per_dim);
            rem /= per_dim;
            const double theta = 2.0 * kPi * g / per_dim;
            const double r = rho[static_cast<std::size_t>(j)];
            const std::complex<double> u = std::polar(r, theta);
            z[static_cast<std::size_t>(j)] = 0.5 * (u + 1.0 / u);
        }
        best = std::max(best, std::abs(f.complex_eval(z)));
    }
    return best * 1.01;
}

double sample_b_region(const TargetFunction& f, double h, double epsilon, int theta_samples) {
    if (!f.isotropic_profile)
        throw std::domain_error("sample_b_region: function has no isotropic profile");
    const double s = f.dim;
    const double a = h * h + f.dim * epsilon;
    const double A = s / 2.0 + a;
    const double Bsemi = std::sqrt(a * a + s * a);
    double best = 0.0;
    for (int g = 0; g < theta_samples; ++g) {
        const double theta = 2.0 * kPi * g / theta_samples;
        const std::complex<double> w(s / 2.0 + A * std::cos(theta), Bsemi * std::sin(theta));
        best = std::max(best, std::abs(f.isotropic_profile(w)));
    }
    return best * 1.01;
}

AnalyticityContext bound_region_context(const TargetFunction& f, double lambda, double epsilon) {
    if (!f.analyticity || f.analyticity->mode != AnalyticityContext::Mode::region)
        throw std::domain_error("bound_region_context: function carries no region analyticity data");
    const double eps = (lambda > 0.0 && lambda < 1.0) ? epsilon : 0.0;
    const double h_lim2 = f.analyticity->h * f.analyticity->h;
    const double h_eff2 = h_lim2 * 0.99 - f.dim * eps;
    if (!(h_eff2 > 0.0))
        throw std::domain_error("bound_region_context: epsilon budget exhausts the analyticity region");
    const double h_eff = std::sqrt(h_eff2);
    const double B = sample_b_region(f, h_eff, eps);
    return AnalyticityContext::region(h_eff, eps, B);
}

} // namespace gegen
