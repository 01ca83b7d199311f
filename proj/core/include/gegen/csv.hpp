#ifndef GEGEN_CSV_HPP
#define GEGEN_CSV_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gegen::csv {

/// Shortest round-trip decimal form ("%.17g" trimmed), locale-independent.
std::string num(double v);
std::string num(int v);

/// '#'-prefixed key=value header lines; every output file opens with these
/// so a CSV is self-describing.
void metadata(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& kv);

} // namespace gegen::csv

#endif
