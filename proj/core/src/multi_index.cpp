#include "gegen/multi_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gegen {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::domain_error("MultiIndex: dimension must be >= 1");
    for (int e : entries_) {
        if (e < 0) throw std::domain_error("MultiIndex: entries must be non-negative");
    }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zeros(int dim) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0));
}

long long MultiIndex::total_degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

int MultiIndex::max_entry() const {
    return *std::max_element(entries_.begin(), entries_.end());
}

bool MultiIndex::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

bool is_valid_q(double q) {
    return q >= kMinQ; // infinity passes
}

double lq_norm(const MultiIndex& k, double q) {
    if (!is_valid_q(q)) throw std::domain_error("lq_norm: q must be >= 1e-3 (or infinity)");
    if (std::isinf(q)) return k.max_entry();
    double s = 0.0;
    for (int e : k) s += std::pow(static_cast<double>(e), q);
    return std::pow(s, 1.0 / q);
}

int aleph(const MultiIndex& k) {
    return static_cast<int>(std::count(k.begin(), k.end(), 0));
}

} // namespace gegen
