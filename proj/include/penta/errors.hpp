#pragma once

#include <stdexcept>
#include <string>

namespace penta {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an inverse is requested of a singular matrix.  In the map
/// dynamics this signals a degenerate polygon / weight configuration.
struct SingularMatrix : std::domain_error {
    explicit SingularMatrix(const std::string& what) : std::domain_error(what) {}
};

/// Classical map denominators x_i + y_{i+1} vanished.
struct ZeroDenominator : std::domain_error {
    explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

/// A subspace intersection did not have the expected dimension.
struct DegenerateIntersection : std::domain_error {
    explicit DegenerateIntersection(const std::string& what) : std::domain_error(what) {}
};

/// A local rewrite was requested at a site that does not match its pattern.
struct PatternMismatch : std::invalid_argument {
    explicit PatternMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace penta
