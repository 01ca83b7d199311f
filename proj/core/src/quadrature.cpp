#include "gegen/quadrature.hpp"

#include "gegen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gegen {

namespace {

// Recurrence coefficient beta_k of the monic orthogonal polynomials for the
// weight (1-x^2)^(lambda-1/2); the diagonal alpha_k vanishes by symmetry.
double beta_k(double lambda, int k) {
    if (k == 1) return 1.0 / (2.0 * lambda + 2.0);
    const double s = k + lambda - 0.5;
    return k * (k + 2.0 * lambda - 1.0) / (4.0 * s * s - 1.0);
}

// Implicit-shift QL for a symmetric tridiagonal matrix, accumulating only the
// first row of the eigenvector matrix (EISPACK imtql2 reduced to what
// Golub-Welsch needs). d holds the diagonal, e the subdiagonal; on return d
// holds ascending eigenvalues and z[i] the first component of eigenvector i.
void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    if (n == 1) return;
    const double prec = 2.220446049250313e-16;
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            for (; m < n - 1; ++m) {
                if (std::abs(e[m]) <= prec * (std::abs(d[m]) + std::abs(d[m + 1]))) break;
            }
            if (m == l) break;
            if (++iter > 40) throw numerical_error("gauss_rule: tridiagonal eigensolve did not converge");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;

            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // selection sort keeps the (d, z) pairing
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j)
            if (d[j] < d[k]) k = j;
        std::swap(d[i], d[k]);
        std::swap(z[i], z[k]);
    }
}

// Orthonormal-polynomial value and derivative at x via the recurrence
// sqrt(b_{k+1}) p_{k+1} = x p_k - sqrt(b_k) p_{k-1}.
struct PnEval {
    long double p;   // p_n(x)
    long double dp;  // p_n'(x)
};

PnEval orthonormal_pn(double lambda, int n, long double mu0, long double x,
                      const std::vector<long double>& sqrt_b) {
    long double p_prev = 0.0L, p = 1.0L / std::sqrt(mu0);
    long double dp_prev = 0.0L, dp = 0.0L;
    for (int k = 1; k <= n; ++k) {
        const long double sb = sqrt_b[k];
        const long double sbm = (k >= 2) ? sqrt_b[k - 1] : 0.0L;
        const long double pn = (x * p - sbm * p_prev) / sb;
        const long double dpn = (p + x * dp - sbm * dp_prev) / sb;
        p_prev = p;
        p = pn;
        dp_prev = dp;
        dp = dpn;
    }
    return {p, dp};
}

} // namespace

QuadratureRule gauss_rule(double lambda, int order) {
    if (order < 1) throw std::domain_error("gauss_rule: order must be >= 1");
    if (!(lambda > -0.5)) throw std::domain_error("gauss_rule: lambda must exceed -1/2");

    const double mu0 = weight_integral(lambda);

    std::vector<double> diag(order, 0.0), sub(order, 0.0), z(order, 0.0);
    for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(beta_k(lambda, k));
    z[0] = 1.0;
    imtqlx(diag, sub, z);

    std::vector<long double> sqrt_b(static_cast<std::size_t>(order) + 1, 0.0L);
    for (int k = 1; k <= order; ++k) sqrt_b[k] = std::sqrt(static_cast<long double>(beta_k(lambda, k)));
    const long double mu0_l = static_cast<long double>(mu0);

    QuadratureRule rule;
    rule.lambda = lambda;
    rule.order = order;
    rule.nodes_hi.resize(order);
    rule.weights_hi.resize(order);

    for (int i = 0; i < order; ++i) {
        long double x = diag[i];
        for (int it = 0; it < 3; ++it) {
            const PnEval v = orthonormal_pn(lambda, order, mu0_l, x, sqrt_b);
            x -= v.p / v.dp;
        }
        rule.nodes_hi[i] = x;
    }
    // exact +/- pairing: fold the eigensolve's residual asymmetry
    for (int i = 0; i < order / 2; ++i) {
        const long double v = 0.5L * (rule.nodes_hi[order - 1 - i] - rule.nodes_hi[i]);
        rule.nodes_hi[i] = -v;
        rule.nodes_hi[order - 1 - i] = v;
    }
    if (order % 2 == 1) rule.nodes_hi[order / 2] = 0.0L;

    for (int i = 0; i < order; ++i) {
        // Christoffel function: w_i = 1 / sum_{j<n} p_j(x_i)^2
        long double s = 0.0L;
        long double p_prev = 0.0L, p = 1.0L / std::sqrt(mu0_l);
        s += p * p;
        const long double x = rule.nodes_hi[i];
        for (int k = 1; k < order; ++k) {
            const long double sb = sqrt_b[k];
            const long double sbm = (k >= 2) ? sqrt_b[k - 1] : 0.0L;
            const long double pn = (x * p - sbm * p_prev) / sb;
            p_prev = p;
            p = pn;
            s += p * p;
        }
        rule.weights_hi[i] = 1.0L / s;
    }
    for (int i = 0; i < order / 2; ++i) {
        const long double w = 0.5L * (rule.weights_hi[i] + rule.weights_hi[order - 1 - i]);
        rule.weights_hi[i] = w;
        rule.weights_hi[order - 1 - i] = w;
    }

    rule.nodes.assign(rule.nodes_hi.begin(), rule.nodes_hi.end());
    rule.weights.assign(rule.weights_hi.begin(), rule.weights_hi.end());

    for (int i = 0; i + 1 < order; ++i) {
        if (!(rule.nodes[i] < rule.nodes[i + 1]))
            throw numerical_error("gauss_rule: nodes not strictly increasing (order " + std::to_string(order) + ")");
    }
    return rule;
}

QuadratureRule gauss_rule(const FamilyParam& fam, int order) {
    return gauss_rule(fam.lambda(), order);
}

} // namespace gegen
