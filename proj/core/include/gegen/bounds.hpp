#ifndef GEGEN_BOUNDS_HPP
#define GEGEN_BOUNDS_HPP

#include "gegen/analyticity.hpp"
#include "gegen/family.hpp"
#include "gegen/multi_index.hpp"
#include "gegen/target_function.hpp"

#include <functional>
#include <span>
#include <vector>

namespace gegen {

/// n-independent constants of the Cauchy-transform bound on E_rho.
double qn_dbar(double rho, double lambda);   // bound at n = 0
double qn_dconst(double rho, double lambda); // prefactor for n >= 1

/// sup over E_rho of |Q_n^(lambda)|: qn_dbar at n = 0, qn_dconst n^(1-lambda)/rho^n
/// for n >= 1; at lambda = 1 the sharp closed form 1/rho^(n+1) for all n.
/// lambda = 0 has its own closed form (cheb_closed_form); rejected here.
double qn_bound(double rho, double lambda, int n);

/// Coefficient bound under polyellipse analyticity:
/// B L(E_rho) / (pi^d rho^k) * prod_{k_i=0} Dbar_i * prod_{k_j!=0} k_j^(1-lambda) D_j,
/// evaluated in log space. Requires lambda > 0 and ctx.B_f.
double coeff_bound_a1(const AnalyticityContext& ctx, double lambda, const MultiIndex& k);

/// Direction-dependent radii rho_hat_j = sqrt((c_j h)^2 + eps) + sqrt(1 + (c_j h)^2 + eps),
/// c_j = k_j / ||k||_2. Rejects the zero multi-index.
std::vector<double> rho_hat(double h, double epsilon, const MultiIndex& k);

/// Coefficient bound under region analyticity:
/// B L(E_rho_hat) / (pi^d rho^||k||_2) * prod Dbar / D factors at rho_hat_j;
/// lambda = 1 sharpens to B L(E_rho_hat) / (pi^d rho^(||k||_2+1)).
/// Requires lambda > 0, ctx.B_f, and epsilon > 0 when 0 < lambda < 1.
double coeff_bound_a2(const AnalyticityContext& ctx, double lambda, const MultiIndex& k);

/// Chebyshev corollaries. T: 2^(d-aleph(k)) B / rho^k (resp. rho^||k||_2);
/// U: B L / (pi^d rho^(k+1)) (resp. rho^(||k||_2+1)).
double cheb_t_bound_a1(const AnalyticityContext& ctx, const MultiIndex& k);
double cheb_t_bound_a2(const AnalyticityContext& ctx, const MultiIndex& k);
double cheb_u_bound_a1(const AnalyticityContext& ctx, const MultiIndex& k);
double cheb_u_bound_a2(const AnalyticityContext& ctx, const MultiIndex& k);

/// lambda = 1/2 specialization; the normalized variant carries 2^(aleph/2)
/// and drops the sqrt(k_j) factors.
double legendre_bound_a1(const AnalyticityContext& ctx, const MultiIndex& k, bool normalized);
double legendre_bound_a2(const AnalyticityContext& ctx, const MultiIndex& k, bool normalized);

/// gamma of the l^q truncation rate: 1 for q >= 2, d^(1/q-1/2) for 0 < q < 2.
double gamma_factor(double q, int dim);

/// Smallest integer m with m >= b (b itself when integral).
int m_b(double b);

/// Closed-form upper bound for int_M^inf e^(-ax) x^b dx:
/// e^(-aM) sum_{j=1..m_b+1} M^(b-j+1)/a^j prod_{i=0..j-2}(b-i).
double int_bound(double a, double b, double M);

/// Upsilon_k^{a,b} with Gamma(k+a)/Gamma(k+b) <= Upsilon k^(a-b)
/// (valid in the regime the error bound uses, b = 1; see tests for the
/// small-k corner where the general inequality fails).
double upsilon(double k, double a, double b);

/// Spherical-sector constant: 1 for d = 1, (pi/2)^floor(d/2) / (d-2)!! else,
/// with 0!! = (-1)!! = 1.
double c_d(int dim);

/// kappa of the uniform-error constant (verbatim; not independently
/// cross-checkable). Needs epsilon > 0 when 0 < lambda < 1.
double kappa_thm41(double lambda, double epsilon);

/// Uniform-error bound K rho^(-N/gamma) for the l^q-ball projection,
/// evaluated at N (K is algebraic in N through the (N/gamma) powers).
/// Region-mode ctx with B_f = sup over D of |f| required; for lambda > 0
/// the side condition N > lambda gamma d / ln rho applies.
double error_bound_thm41(const AnalyticityContext& ctx, double lambda, double q, int dim, double N);

/// Sobolev data for the finite-regularity bounds: the order multi-index m
/// and the weighted derivative norms V_{k,m} as a function of k.
struct FiniteRegularitySpec {
    MultiIndex m;
    std::function<double(const MultiIndex&)> V_km;

    /// Theorem 5.2 applies only when every m_j > lambda + 1.
    bool rate_applicable(double lambda) const;
};

/// Coefficient bound for f in H^m:
/// (V_{k,m}/h_k) prod_j [ sqrt(h^(lambda+n_j)_(k_j-n_j)) prod_{s<n_j} 2(lambda+s)/((k_j-s)(k_j+2lambda+s)) ],
/// n_j = min(k_j, m_j). Requires lambda > 0.
double finite_reg_coeff_bound(const FamilyParam& fam, const MultiIndex& k,
                              const FiniteRegularitySpec& spec);

/// Predicted full-grid uniform error exponent r = min_j (m_j - lambda - 1):
/// error = O(N^-r). Requires every m_j > lambda + 1.
double finite_reg_error_rate(double lambda, const MultiIndex& m);

/// Sampled sup of |f| over the boundary torus of the polyellipse
/// (theta grid per dimension, times a 1.01 safety factor). Needs f.complex_eval.
double sample_b_polyellipse(const TargetFunction& f, std::span<const double> rho,
                            int theta_samples = 256);

/// Sampled sup of |f| over the region with parameters (h, epsilon), via the
/// isotropic profile g on the boundary ellipse of N_{d, h^2+d eps}.
double sample_b_region(const TargetFunction& f, double h, double epsilon,
                       int theta_samples = 4096);

/// Region context a built-in can certify bounds on: the limit h is shrunk by
/// 1% (plus the epsilon budget) so the closure stays inside the analyticity
/// domain, and B_f is sampled on the shrunk boundary. epsilon is forced to 0
/// unless 0 < lambda < 1.
AnalyticityContext bound_region_context(const TargetFunction& f, double lambda,
                                        double epsilon = 1e-3);

} // namespace gegen

#endif
