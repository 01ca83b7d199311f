#include "gegen/index_set.hpp"

#include "gegen/errors.hpp"
#include "gegen/csv.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gegen {

bool IndexSet::contains(const MultiIndex& k) const {
    if (k.dim() != dim) return false;
    return lq_norm(k, q) <= radius;
}

std::vector<int> IndexSet::max_degree_per_dim() const {
    std::vector<int> m(static_cast<std::size_t>(dim), 0);
    for (const auto& k : members)
        for (int j = 0; j < dim; ++j) m[j] = std::max(m[j], k[j]);
    return m;
}

int IndexSet::max_degree() const {
    int m = 0;
    for (const auto& k : members) m = std::max(m, k.max_entry());
    return m;
}

namespace {

struct Enumerator {
    double q;
    double radius;
    int dim;
    std::uint64_t cap;
    double budget;            // radius^q, finite q only
    std::vector<int> current;
    std::vector<MultiIndex>* out;

    void descend(int j, double partial) {
        if (j == dim) {
            MultiIndex k(current);
            if (lq_norm(k, q) <= radius) {
                if (out->size() >= cap)
                    throw resource_error("enumerate_ball: index set exceeds cap of " + std::to_string(cap));
                out->push_back(std::move(k));
            }
            return;
        }
        const int vmax = static_cast<int>(std::floor(radius));
        for (int v = 0; v <= vmax; ++v) {
            double next = partial;
            if (!std::isinf(q)) {
                next += std::pow(static_cast<double>(v), q);
                // conservative prune: the leaf check is the exact membership test
                if (next > budget * (1.0 + 1e-12)) break;
            }
            current[static_cast<std::size_t>(j)] = v;
            descend(j + 1, next);
        }
        current[static_cast<std::size_t>(j)] = 0;
    }
};

} // namespace

IndexSet enumerate_ball(double q, double radius, int dim, std::uint64_t cap) {
    if (!is_valid_q(q)) throw std::domain_error("enumerate_ball: q must be >= 1e-3 (or infinity)");
    if (radius < 0.0) throw std::domain_error("enumerate_ball: N must be >= 0");
    if (dim < 1) throw std::domain_error("enumerate_ball: dimension must be >= 1");

    IndexSet set;
    set.q = q;
    set.radius = radius;
    set.dim = dim;

    Enumerator en;
    en.q = q;
    en.radius = radius;
    en.dim = dim;
    en.cap = cap;
    en.budget = std::isinf(q) ? 0.0 : std::pow(radius, q);
    en.current.assign(static_cast<std::size_t>(dim), 0);
    en.out = &set.members;
    en.descend(0, 0.0);
    return set;
}

double ball_volume(double q, int dim) {
    if (dim < 1) throw std::domain_error("ball_volume: dimension must be >= 1");
    if (std::isinf(q)) return 1.0;
    if (!is_valid_q(q)) throw std::domain_error("ball_volume: q must be >= 1e-3 (or infinity)");
    return std::exp(dim * std::lgamma(1.0 / q + 1.0) - std::lgamma(dim / q + 1.0));
}

double cardinality_estimate(double q, double radius, int dim) {
    return std::pow(radius, dim) * ball_volume(q, dim);
}

double efficiency_ratio(double q, int dim) {
    if (dim < 1) throw std::domain_error("efficiency_ratio: dimension must be >= 1");
    if (!(q > 0.0) || !(q < 2.0)) throw std::domain_error("efficiency_ratio: requires 0 < q < 2");
    if (!is_valid_q(q)) throw std::domain_error("efficiency_ratio: q must be >= 1e-3");
    const double d = dim;
    return std::exp((d / q - d / 2.0) * std::log(d)
                    + d * (std::lgamma(1.0 / q + 1.0) - std::lgamma(1.5))
                    + std::lgamma(d / 2.0 + 1.0) - std::lgamma(d / q + 1.0));
}

void IndexSet::write_csv(std::ostream& os) const {
    csv::metadata(os, {{"q", csv::num(q)},
                       {"N", csv::num(radius)},
                       {"dim", csv::num(dim)},
                       {"count", std::to_string(members.size())}});
    for (int j = 0; j < dim; ++j) {
        os << (j ? "," : "") << "k_" << (j + 1);
    }
    os << "\n";
    for (const auto& k : members) {
        for (int j = 0; j < dim; ++j) os << (j ? "," : "") << k[j];
        os << "\n";
    }
}

} // namespace gegen
