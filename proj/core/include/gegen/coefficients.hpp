#ifndef GEGEN_COEFFICIENTS_HPP
#define GEGEN_COEFFICIENTS_HPP

#include "gegen/multi_index.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace gegen {

enum class Normalization { gegenbauer, chebyshev_t, legendre, legendre_normalized };

std::string to_string(Normalization n);

/// Natural normalization for a family parameter: chebyshev_t at lambda = 0,
/// legendre at lambda = 1/2, gegenbauer otherwise.
Normalization natural_normalization(double lambda);

/// Sparse table of expansion coefficients over one index set.
/// std::map keys give lexicographic (deterministic) iteration order.
struct CoefficientTable {
    double lambda = 0.5;
    Normalization normalization = Normalization::legendre;
    std::map<MultiIndex, double> entries;

    struct Meta {
        std::string function_name;
        int quad_order = 0;
        double q = 2.0;
        double radius = 0.0;
        int dim = 1;
    } meta;

    int dim() const { return meta.dim; }
    std::size_t size() const { return entries.size(); }

    /// Coefficient at k, 0 if absent.
    double at(const MultiIndex& k) const;

    std::vector<int> max_degree_per_dim() const;

    /// Values with |a_k| below this are at the double noise floor; the CSV
    /// log10abs column clamps there.
    static constexpr double kNoiseFloor = 1e-16;

    /// Columns k_1..k_d,value,log10abs after '#'-metadata.
    void write_csv(std::ostream& os) const;
};

/// Convert between legendre and legendre_normalized entries
/// (abar_k = a_k / prod_j sqrt(k_j + 1/2)). Identity if target matches.
CoefficientTable convert(const CoefficientTable& tab, Normalization target);

} // namespace gegen

#endif
