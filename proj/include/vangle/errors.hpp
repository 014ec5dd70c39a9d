#ifndef VANGLE_ERRORS_HPP
#define VANGLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vangle {

/// Input outside the domain of an operation (point on the boundary,
/// coincident vertices, out-of-range parameter).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Geometric degeneracy, e.g. three collinear points asked for a circle.
class DegenerateError : public std::runtime_error {
public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration or domain description.
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace vangle

#endif  // VANGLE_ERRORS_HPP
