#ifndef HBLAB_TYPES_HPP
#define HBLAB_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace hblab {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846;

// Thrown when an adaptive rule exhausts its subdivision budget without
// meeting the requested tolerance.
struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a truncated series cannot honor the requested tolerance at the
// evaluation point (tail bound too large).
struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-facing configuration (CLI configs, malformed operator rules, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hblab

#endif
