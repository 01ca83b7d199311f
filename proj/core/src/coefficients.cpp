#include "gegen/coefficients.hpp"

#include "gegen/csv.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace gegen {

std::string to_string(Normalization n) {
    switch (n) {
        case Normalization::gegenbauer: return "gegenbauer";
        case Normalization::chebyshev_t: return "chebyshev_T";
        case Normalization::legendre: return "legendre";
        case Normalization::legendre_normalized: return "legendre_normalized";
    }
    return "?";
}

Normalization natural_normalization(double lambda) {
    if (lambda == 0.0) return Normalization::chebyshev_t;
    if (lambda == 0.5) return Normalization::legendre;
    return Normalization::gegenbauer;
}

double CoefficientTable::at(const MultiIndex& k) const {
    const auto it = entries.find(k);
    return it == entries.end() ? 0.0 : it->second;
}

std::vector<int> CoefficientTable::max_degree_per_dim() const {
    std::vector<int> m(static_cast<std::size_t>(meta.dim), 0);
    for (const auto& [k, v] : entries)
        for (int j = 0; j < meta.dim; ++j) m[j] = std::max(m[j], k[j]);
    return m;
}

void CoefficientTable::write_csv(std::ostream& os) const {
    csv::metadata(os, {{"function", meta.function_name},
                       {"lambda", csv::num(lambda)},
                       {"normalization", to_string(normalization)},
                       {"q", csv::num(meta.q)},
                       {"N", csv::num(meta.radius)},
                       {"dim", csv::num(meta.dim)},
                       {"quad_order", csv::num(meta.quad_order)},
                       {"count", std::to_string(entries.size())}});
    for (int j = 0; j < meta.dim; ++j) os << "k_" << (j + 1) << ",";
    os << "value,log10abs\n";
    for (const auto& [k, v] : entries) {
        for (int j = 0; j < meta.dim; ++j) os << k[j] << ",";
        const double mag = std::max(std::abs(v), kNoiseFloor);
        os << csv::num(v) << "," << csv::num(std::log10(mag)) << "\n";
    }
}

CoefficientTable convert(const CoefficientTable& tab, Normalization target) {
    if (tab.normalization == target) return tab;
    const bool from_leg = tab.normalization == Normalization::legendre
                          && target == Normalization::legendre_normalized;
    const bool to_leg = tab.normalization == Normalization::legendre_normalized
                        && target == Normalization::legendre;
    if (!from_leg && !to_leg)
        throw std::domain_error("convert: only legendre <-> legendre_normalized is defined");

    CoefficientTable out = tab;
    out.normalization = target;
    for (auto& [k, v] : out.entries) {
        double fac = 1.0;
        for (int j = 0; j < k.dim(); ++j) fac *= std::sqrt(k[j] + 0.5);
        v = from_leg ? v / fac : v * fac;
    }
    return out;
}

} // namespace gegen
