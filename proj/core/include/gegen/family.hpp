#ifndef GEGEN_FAMILY_HPP
#define GEGEN_FAMILY_HPP

#include <vector>

namespace gegen {

/// Parameter of the Gegenbauer family C_n^(lambda), orthogonal on [-1,1]
/// under the weight (1-x^2)^(lambda-1/2).
///
/// lambda = 0 selects the Chebyshev-T convention (the lambda -> 0 limit
/// member of the family), lambda = 1/2 Legendre, lambda = 1 Chebyshev-U.
class FamilyParam {
public:
    explicit FamilyParam(double lambda);

    double lambda() const { return lambda_; }
    bool is_chebyshev_t() const { return lambda_ == 0.0; }

    static FamilyParam chebyshev_t() { return FamilyParam(0.0); }
    static FamilyParam legendre() { return FamilyParam(0.5); }
    static FamilyParam chebyshev_u() { return FamilyParam(1.0); }

private:
    double lambda_;
};

/// C_n^(lambda)(x) for x in [-1,1]; T_n(x) when lambda = 0.
/// Throws std::domain_error for |x| > 1.
double eval_poly(const FamilyParam& fam, int n, double x);

/// C_0..C_K at one point, via the three-term recurrence.
/// The long double overload is the extended-precision path used when
/// applying quadrature rules (keeps degree-amplified rounding out of
/// computed coefficients).
std::vector<double> eval_poly_sequence(const FamilyParam& fam, int max_degree, double x);
std::vector<long double> eval_poly_sequence(const FamilyParam& fam, int max_degree, long double x);

/// C_n^(lambda)(1), computed through log-gamma; 2/n for lambda = 0, n >= 1.
double eval_at_one(const FamilyParam& fam, int n);

/// Normalization constant h_n^(lambda) = integral of C_n^2 w_lambda over [-1,1].
double norm_constant(const FamilyParam& fam, int n);

/// Zeroth moment of the weight: integral of (1-x^2)^(lambda-1/2) over [-1,1].
/// Equals h_0^(lambda) for lambda > 0 and pi for lambda = 0.
double weight_integral(double lambda);

} // namespace gegen

#endif
