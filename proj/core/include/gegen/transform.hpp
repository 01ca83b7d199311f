#ifndef GEGEN_TRANSFORM_HPP
#define GEGEN_TRANSFORM_HPP

#include "gegen/coefficients.hpp"
#include "gegen/family.hpp"
#include "gegen/index_set.hpp"
#include "gegen/target_function.hpp"

#include <cstdint>
#include <span>

namespace gegen {

inline constexpr std::uint64_t kDefaultGridCap = 100'000'000;
inline constexpr int kDefaultDimCap = 4;
/// Guard nodes past the max degree; Gauss error for analytic integrands
/// decays geometrically, so this pushes aliasing below the coefficient floor.
inline constexpr int kQuadGuard = 17;

/// Error-measurement grid: tensor Chebyshev points for d <= 2 (default 501
/// per dimension, endpoints included), uniform random points for d >= 3.
struct GridSpec {
    enum class Kind { tensor_chebyshev, random_uniform };
    Kind kind = Kind::tensor_chebyshev;
    int points_per_dim = 501;
    int n_random = 100'000;
    std::uint64_t seed = 0x5EED;

    static GridSpec default_for(int dim);
};

struct TransformOptions {
    int quad_order = 0;                          // 0: max degree + kQuadGuard
    std::uint64_t grid_cap = kDefaultGridCap;    // tensor evaluation points
    int dim_cap = kDefaultDimCap;
};

/// Expansion coefficients a_k = (1/h_k) int f C_k w over the hypercube for
/// every k in the set, by tensor-product Gauss quadrature.
///
/// f is evaluated once on the n^d tensor grid; the grid is then contracted
/// one dimension at a time against the 1D weighted polynomial-value matrix,
/// so the cost is O(d * K_max * n^d) rather than O(|set| * n^d). Summation
/// order is fixed (dimension sweep, ascending node index, long double
/// accumulators), so results are bit-stable run to run.
CoefficientTable compute_coefficients(const TargetFunction& f, const FamilyParam& fam,
                                      const IndexSet& set, const TransformOptions& opt = {});

/// Same, with the natural normalization replaced by normalized Legendre
/// (requires lambda = 1/2).
CoefficientTable compute_coefficients_normalized(const TargetFunction& f, const IndexSet& set,
                                                 const TransformOptions& opt = {});

/// (Pi_N f)(x) = sum a_k C_k(x): per-dimension recurrence evaluation of the
/// sparse sum. Exact (to rounding) when f is a polynomial inside the set.
double evaluate_projection(const CoefficientTable& tab, std::span<const double> x);

/// max over the grid of |f(x) - (Pi f)(x)|. Tensor grids contract the dense
/// coefficient tensor against per-dimension value matrices; random grids go
/// point by point through evaluate_projection.
double sup_error(const TargetFunction& f, const CoefficientTable& tab, const GridSpec& grid);
double sup_error(const TargetFunction& f, const CoefficientTable& tab);

} // namespace gegen

#endif
