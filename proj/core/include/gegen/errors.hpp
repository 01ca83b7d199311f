#ifndef GEGEN_ERRORS_HPP
#define GEGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gegen {

/// Requested computation would exceed a configured size cap.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative numerical procedure failed to converge.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad experiment configuration (unknown function name, malformed range, ...).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gegen

#endif
