#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cauchy_jump {

enum class ErrorKind {
    domain,          // argument outside its admissible range
    unsupported,     // operation undefined for this kind of contour
    precision,       // geometric query too close to call
    corner,          // parameter sits on a declared corner
    endpoint,        // parameter sits on a true endpoint of an open contour
    singularity,     // non-finite integrand at a quadrature node
    convergence,     // refinement or extrapolation did not settle
    division_by_zero,
    degenerate_map,  // exterior map with vanishing leading coefficient
    annulus,         // extraction radius outside the analyticity annulus
    probe_region,    // probe lies in the wrong region
    parse,           // malformed user input
};

std::string_view to_string(ErrorKind kind);

/// Numerical errors (convergence, precision) map to CLI exit code 3,
/// everything else is an input error.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    bool is_numerical() const noexcept {
        return kind_ == ErrorKind::convergence || kind_ == ErrorKind::precision;
    }

private:
    ErrorKind kind_;
};

}  // namespace cauchy_jump
