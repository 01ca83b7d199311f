#ifndef GEGEN_INDEX_SET_HPP
#define GEGEN_INDEX_SET_HPP

#include "gegen/multi_index.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace gegen {

/// The l^q ball index set { k in N_0^d : ||k||_q <= N }, ties included,
/// enumerated in lexicographic order.
struct IndexSet {
    double q = 2.0;
    double radius = 0.0; // N; any non-negative real
    int dim = 1;
    std::vector<MultiIndex> members;

    std::size_t size() const { return members.size(); }
    bool contains(const MultiIndex& k) const;

    /// Largest k_j appearing in dimension j over all members.
    std::vector<int> max_degree_per_dim() const;
    int max_degree() const;

    /// One row per multi-index, after '#'-prefixed metadata lines.
    void write_csv(std::ostream& os) const;
};

inline constexpr std::uint64_t kDefaultIndexSetCap = 100'000'000;

/// Enumerate the ball by dimension-recursive descent with per-coordinate
/// budget pruning; cost O(|set| * d). Throws resource_error past cap.
IndexSet enumerate_ball(double q, double radius, int dim,
                        std::uint64_t cap = kDefaultIndexSetCap);

/// Volume of the unit l^q ball restricted to the positive orthant:
/// Gamma(1/q+1)^d / Gamma(d/q+1); 1 for q = infinity.
double ball_volume(double q, int dim);

/// Continuum estimate of |Lambda_N^q|: N^d * V_q.
double cardinality_estimate(double q, double radius, int dim);

/// Cost ratio of matching the q<2 rate with an l^q set instead of l^2:
/// d^(d/q-d/2) (Gamma(1/q+1)/Gamma(3/2))^d Gamma(d/2+1)/Gamma(d/q+1).
double efficiency_ratio(double q, int dim);

} // namespace gegen

#endif
