#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cauchy_jump/cauchy.hpp"

namespace cauchy_jump {

/// phi = Phi+ - Phi- on C, with Phi+ restricted to the closure of D+ and
/// Phi- to the closure of D- (Phi-(inf) = 0). Both sides share one
/// CauchyIntegral.
class JumpPair {
public:
    JumpPair(CauchyIntegral integral, std::optional<Contour> original = std::nullopt);

    const CauchyIntegral& integral() const noexcept { return integral_; }
    /// Contour the integral runs over: the input itself, or the input plus
    /// a closing arc carrying zero density.
    const Contour& contour() const noexcept { return integral_.contour(); }
    bool closed_by_arc() const noexcept { return original_.has_value(); }
    const std::optional<Contour>& original() const noexcept { return original_; }

    /// Phi+(z) for z in D+, or its boundary value for z on C. Throws
    /// Error(probe_region) for z in D-.
    cplx plus(cplx z) const;
    /// Phi-(z) for z in D-, or its boundary value for z on C. Throws
    /// Error(probe_region) for z in D+.
    cplx minus(cplx z) const;
    cplx minus_at_infinity() const noexcept { return 0.0; }

    /// Boundary values at a parameter of contour().
    BoundaryTriple boundary(double t) const { return integral_.boundary_values(t); }
    /// Parameter of contour() closest to the image of t on the original
    /// (open) contour; identity when no arc was added.
    double closed_parameter(double original_t) const;

private:
    Region region(cplx z) const;

    CauchyIntegral integral_;
    std::optional<Contour> original_;
};

/// Circular arc from the end of an open contour back to its start, chosen so
/// that the closed curve runs counterclockwise (D+ on the left of the open
/// contour). Prefers the shortest of a family of arcs staying outside the
/// contour's convex hull, then any arc that misses the contour.
Contour closing_arc(const Contour& open);

/// Open contours are closed by closing_arc with zero density on the arc.
JumpPair decompose(const Contour& contour, const Density& density, const CauchyConfig& config = {});

struct BvpWitness {
    cplx probe{};
    double modulus = 0.0;  // |Phi-(probe)|
};

struct BvpOptions {
    double tolerance = -1.0;  // negative: 1e-7 times the data scale
    std::size_t series_terms = 4;
    std::size_t boundary_grid = 64;
};

struct BvpVerdict {
    bool solvable = false;
    double tolerance = 0.0;
    std::vector<cplx> probes;
    std::vector<double> minus_moduli;
    double max_minus = 0.0;
    std::optional<BvpWitness> witness;  // set when not solvable
    std::vector<cplx> series;           // a_1.. of Phi- at infinity
    bool series_small = true;
    std::optional<JumpPair> solution;   // Phi+ when solvable
    double boundary_residual = 0.0;     // max |Phi+ - u| on the boundary grid, when solvable
    std::vector<std::string> notes;
};

/// Default exterior probes: 16 points on each of the circles of radius 2R
/// and 3R about the centroid, R the largest distance from it to the curve.
std::vector<cplx> default_exterior_probes(const Contour& contour);

/// Solvable iff Phi- vanishes: max |Phi-| over the probes and the scaled
/// series coefficients |a_k| / R^k are all within tolerance.
BvpVerdict solve_holomorphic_bvp(const Contour& contour, const Density& u, std::span<const cplx> probes,
                                 const CauchyConfig& config = {}, const BvpOptions& options = {});

}  // namespace cauchy_jump
