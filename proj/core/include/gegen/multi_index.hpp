#ifndef GEGEN_MULTI_INDEX_HPP
#define GEGEN_MULTI_INDEX_HPP

#include <compare>
#include <initializer_list>
#include <vector>

namespace gegen {

/// d-tuple of non-negative integers k = (k_1, ..., k_d), d >= 1.
/// Ordered lexicographically, so std::map<MultiIndex, T> iterates in the
/// deterministic order the CSV outputs promise.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries);

    static MultiIndex zeros(int dim);

    int dim() const { return static_cast<int>(entries_.size()); }
    int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// |k| = k_1 + ... + k_d
    long long total_degree() const;
    /// max_j k_j
    int max_entry() const;
    bool is_zero() const;

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
};

/// q = infinity is std::numeric_limits<double>::infinity(); q below 1e-3 is
/// rejected as degenerate.
constexpr double kMinQ = 1e-3;
bool is_valid_q(double q);

/// (sum k_i^q)^(1/q), or max k_i for q = infinity.
double lq_norm(const MultiIndex& k, double q);

/// aleph(k): number of zero entries.
int aleph(const MultiIndex& k);

} // namespace gegen

#endif
