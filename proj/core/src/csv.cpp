#include "gegen/csv.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace gegen::csv {

std::string num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string num(int v) {
    return std::to_string(v);
}

void metadata(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& kv) {
    for (const auto& [k, v] : kv) os << "# " << k << "=" << v << "\n";
}

} // namespace gegen::csv
