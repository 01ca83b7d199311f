#include "gegen/transform.hpp"

#include "gegen/errors.hpp"
#include "gegen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gegen {

GridSpec GridSpec::default_for(int dim) {
    GridSpec g;
    g.kind = dim <= 2 ? Kind::tensor_chebyshev : Kind::random_uniform;
    return g;
}

namespace {

// out[r*K + k] = sum_i M[k*n + i] * in[i*S + r]
// Contracts axis 0 (size n) of `in` (viewed as [n, S]) and appends the new
// axis (size K) last; d successive contractions restore the axis order.
std::vector<long double> contract_axis0(const std::vector<long double>& in, int n, int S,
                                        const std::vector<long double>& M, int K) {
    std::vector<long double> out(static_cast<std::size_t>(S) * K);
    for (int r = 0; r < S; ++r) {
        for (int k = 0; k < K; ++k) {
            const long double* mk = M.data() + static_cast<std::size_t>(k) * n;
            long double acc = 0.0L;
            for (int i = 0; i < n; ++i) acc += mk[i] * in[static_cast<std::size_t>(i) * S + r];
            out[static_cast<std::size_t>(r) * K + k] = acc;
        }
    }
    return out;
}

// Basis values B_0..B_K at x for the table's normalization convention:
// C_k^(lambda) (or T_k), times sqrt(k+1/2) for normalized Legendre.
std::vector<long double> basis_values(double lambda, Normalization norm, int max_degree, long double x) {
    const FamilyParam fam(lambda);
    std::vector<long double> v = eval_poly_sequence(fam, max_degree, x);
    if (norm == Normalization::legendre_normalized) {
        for (int k = 0; k <= max_degree; ++k) v[k] *= std::sqrt(k + 0.5L);
    }
    return v;
}

void check_dim_cap(int dim, int cap) {
    if (dim > cap)
        throw resource_error("transform: dimension " + std::to_string(dim)
                             + " exceeds cap " + std::to_string(cap));
}

std::uint64_t ipow_checked(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

long double project_point(const CoefficientTable& tab, const std::vector<int>& degrees,
                          std::span<const double> x) {
    const int d = tab.meta.dim;
    std::vector<std::vector<long double>> vals(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        vals[j] = basis_values(tab.lambda, tab.normalization, degrees[j], x[j]);
    long double acc = 0.0L;
    for (const auto& [k, a] : tab.entries) {
        long double term = a;
        for (int j = 0; j < d; ++j) term *= vals[j][static_cast<std::size_t>(k[j])];
        acc += term;
    }
    return acc;
}

std::vector<long double> chebyshev_grid(int G) {
    std::vector<long double> t(static_cast<std::size_t>(G));
    if (G == 1) {
        t[0] = 0.0L;
        return t;
    }
    for (int g = 0; g < G; ++g)
        t[g] = std::cos(std::numbers::pi_v<long double> * (G - 1 - g) / (G - 1));
    return t;
}

double uniform_pm1(std::mt19937_64& rng) {
    // fixed mapping (not std::uniform_real_distribution) so streams are
    // identical across standard libraries
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

} // namespace

CoefficientTable compute_coefficients(const TargetFunction& f, const FamilyParam& fam,
                                      const IndexSet& set, const TransformOptions& opt) {
    const int d = set.dim;
    if (f.dim != d) throw std::domain_error("compute_coefficients: function/set dimension mismatch");
    check_dim_cap(d, opt.dim_cap);

    const std::vector<int> degrees = set.max_degree_per_dim();
    const int k_max = set.members.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    const int n = opt.quad_order > 0 ? opt.quad_order : k_max + kQuadGuard;
    if (n < k_max + 1)
        throw std::domain_error("compute_coefficients: quad_order " + std::to_string(n)
                                + " below max degree + 1 = " + std::to_string(k_max + 1));

    const std::uint64_t npoints = ipow_checked(static_cast<std::uint64_t>(n), d, opt.grid_cap);
    if (npoints > opt.grid_cap)
        throw resource_error("compute_coefficients: quadrature grid exceeds cap of "
                             + std::to_string(opt.grid_cap) + " points");

    const QuadratureRule rule = gauss_rule(fam, n);

    // f on the tensor grid, last dimension fastest
    std::vector<long double> T(npoints);
    {
        std::vector<double> x(static_cast<std::size_t>(d));
        std::vector<int> digit(static_cast<std::size_t>(d), 0);
        for (std::uint64_t flat = 0; flat < npoints; ++flat) {
            std::uint64_t rem = flat;
            for (int j = d - 1; j >= 0; --j) {
                digit[j] = static_cast<int>(rem % n);
                rem /= n;
            }
            for (int j = 0; j < d; ++j) x[j] = rule.nodes[static_cast<std::size_t>(digit[j])];
            T[flat] = f.evaluator(x);
        }
    }

    // Per-dimension weighted value matrix M[k][i] = w_i C_k(x_i) / h_k.
    std::vector<std::vector<long double>> M(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        const int K = degrees[j];
        M[j].assign(static_cast<std::size_t>(K + 1) * n, 0.0L);
        for (int i = 0; i < n; ++i) {
            const auto vals = eval_poly_sequence(fam, K, rule.nodes_hi[static_cast<std::size_t>(i)]);
            for (int k = 0; k <= K; ++k)
                M[j][static_cast<std::size_t>(k) * n + i] = rule.weights_hi[static_cast<std::size_t>(i)] * vals[k];
        }
        for (int k = 0; k <= K; ++k) {
            const long double h = norm_constant(fam, k);
            for (int i = 0; i < n; ++i) M[j][static_cast<std::size_t>(k) * n + i] /= h;
        }
    }

    for (int j = 0; j < d; ++j) {
        const int S = static_cast<int>(T.size()) / n;
        T = contract_axis0(T, n, S, M[j], degrees[j] + 1);
    }

    CoefficientTable tab;
    tab.lambda = fam.lambda();
    tab.normalization = natural_normalization(fam.lambda());
    tab.meta.function_name = f.name;
    tab.meta.quad_order = n;
    tab.meta.q = set.q;
    tab.meta.radius = set.radius;
    tab.meta.dim = d;

    std::vector<std::size_t> stride(static_cast<std::size_t>(d), 1);
    for (int j = d - 2; j >= 0; --j)
        stride[j] = stride[j + 1] * static_cast<std::size_t>(degrees[j + 1] + 1);
    for (const auto& k : set.members) {
        std::size_t flat = 0;
        for (int j = 0; j < d; ++j) flat += stride[j] * static_cast<std::size_t>(k[j]);
        tab.entries.emplace(k, static_cast<double>(T[flat]));
    }
    return tab;
}

CoefficientTable compute_coefficients_normalized(const TargetFunction& f, const IndexSet& set,
                                                 const TransformOptions& opt) {
    return convert(compute_coefficients(f, FamilyParam::legendre(), set, opt),
                   Normalization::legendre_normalized);
}

double evaluate_projection(const CoefficientTable& tab, std::span<const double> x) {
    if (static_cast<int>(x.size()) != tab.meta.dim)
        throw std::domain_error("evaluate_projection: point dimension mismatch");
    for (double xi : x)
        if (std::abs(xi) > 1.0) throw std::domain_error("evaluate_projection: point outside [-1,1]^d");
    if (tab.entries.empty()) return 0.0;
    return static_cast<double>(project_point(tab, tab.max_degree_per_dim(), x));
}

double sup_error(const TargetFunction& f, const CoefficientTable& tab, const GridSpec& grid) {
    const int d = tab.meta.dim;
    if (f.dim != d) throw std::domain_error("sup_error: function/table dimension mismatch");

    if (grid.kind == GridSpec::Kind::random_uniform) {
        const std::vector<int> degrees = tab.max_degree_per_dim();
        std::mt19937_64 rng(grid.seed);
        std::vector<double> x(static_cast<std::size_t>(d));
        long double worst = 0.0L;
        for (int p = 0; p < grid.n_random; ++p) {
            for (int j = 0; j < d; ++j) x[j] = uniform_pm1(rng);
            const long double err = std::abs(static_cast<long double>(f.evaluator(x))
                                             - project_point(tab, degrees, x));
            worst = std::max(worst, err);
        }
        return static_cast<double>(worst);
    }

    const int G = grid.points_per_dim;
    if (G < 2) throw std::domain_error("sup_error: tensor grid needs >= 2 points per dimension");
    const std::uint64_t npoints = ipow_checked(static_cast<std::uint64_t>(G), d, kDefaultGridCap);
    if (npoints > kDefaultGridCap)
        throw resource_error("sup_error: tensor grid exceeds cap; use a random grid for d >= 3");

    const std::vector<long double> t = chebyshev_grid(G);
    const std::vector<int> degrees = tab.max_degree_per_dim();

    // dense coefficient tensor, axis order (k_1, ..., k_d)
    std::vector<std::size_t> stride(static_cast<std::size_t>(d), 1);
    std::size_t numel = static_cast<std::size_t>(degrees[d - 1] + 1);
    for (int j = d - 2; j >= 0; --j) {
        stride[j] = numel;
        numel *= static_cast<std::size_t>(degrees[j] + 1);
    }
    std::vector<long double> T(numel, 0.0L);
    for (const auto& [k, a] : tab.entries) {
        std::size_t flat = 0;
        for (int j = 0; j < d; ++j) flat += stride[j] * static_cast<std::size_t>(k[j]);
        T[flat] = a;
    }

    // Vt[g][k]: basis value of degree k at grid point g
    for (int j = 0; j < d; ++j) {
        const int K = degrees[j];
        std::vector<long double> Vt(static_cast<std::size_t>(G) * (K + 1));
        for (int g = 0; g < G; ++g) {
            const auto vals = basis_values(tab.lambda, tab.normalization, K, t[static_cast<std::size_t>(g)]);
            for (int k = 0; k <= K; ++k) Vt[static_cast<std::size_t>(g) * (K + 1) + k] = vals[k];
        }
        const int S = static_cast<int>(T.size()) / (K + 1);
        T = contract_axis0(T, K + 1, S, Vt, G);
    }

    long double worst = 0.0L;
    std::vector<double> x(static_cast<std::size_t>(d));
    std::vector<int> digit(static_cast<std::size_t>(d), 0);
    for (std::uint64_t flat = 0; flat < npoints; ++flat) {
        std::uint64_t rem = flat;
        for (int j = d - 1; j >= 0; --j) {
            digit[j] = static_cast<int>(rem % G);
            rem /= G;
        }
        for (int j = 0; j < d; ++j) x[j] = static_cast<double>(t[static_cast<std::size_t>(digit[j])]);
        const long double err = std::abs(static_cast<long double>(f.evaluator(x)) - T[flat]);
        worst = std::max(worst, err);
    }
    return static_cast<double>(worst);
}

double sup_error(const TargetFunction& f, const CoefficientTable& tab) {
    return sup_error(f, tab, GridSpec::default_for(tab.meta.dim));
}

} // namespace gegen
