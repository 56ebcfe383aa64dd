#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cauchy_jump {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

struct ContourPoint {
    double t;
    cplx z;
    cplx dz;
};

enum class Side { interior, exterior };

struct Region {
    enum class Kind { interior, exterior, on_contour };
    Kind kind;
    double t = 0.0;  // nearest parameter, meaningful for on_contour

    static Region interior() { return {Kind::interior, 0.0}; }
    static Region exterior() { return {Kind::exterior, 0.0}; }
    static Region on_contour(double t) { return {Kind::on_contour, t}; }
};

std::string to_string(Region::Kind kind);

/// Oriented, piecewise-smooth plane contour parameterized over [0,1].
///
/// Closed contours are normalized to counterclockwise orientation at
/// construction. Corners are declared, never detected; joins between the
/// pieces of a piecewise contour are always corners. Instances are immutable
/// and cheap to copy (the geometry is shared).
class Contour {
public:
    /// Fourier term c * exp(2 pi i k t).
    struct FourierTerm {
        int k;
        cplx c;
    };

    static Contour circle(cplx center, double radius);
    static Contour ellipse(cplx center, double semi_x, double semi_y);
    static Contour segment(cplx a, cplx b);
    /// Circular arc center + r e^{i theta}, theta running from theta0 to theta1.
    static Contour arc(cplx center, double radius, double theta0, double theta1);
    static Contour fourier(std::vector<FourierTerm> terms);
    /// Open pieces joined end to end. Parameter share is proportional to
    /// piece length. `closed` requires the last endpoint to meet the first.
    static Contour piecewise(const std::vector<Contour>& pieces, bool closed);

    ContourPoint evaluate(double t) const;
    /// Second derivative by central differences on the analytic first
    /// derivative; used for curvature only.
    cplx second_derivative(double t) const;

    bool closed() const noexcept;
    std::span<const double> corners() const noexcept;
    bool is_corner(double t, double tol = 1e-12) const noexcept;
    /// Sub-intervals of [0,1] between consecutive corners (and the ends).
    std::vector<std::pair<double, double>> smooth_intervals() const;

    double length() const;
    double diameter() const noexcept;
    /// Default on-contour tolerance: 1e-9 times the diameter.
    double on_contour_tolerance() const noexcept;

    Region classify(cplx z, double tol = -1.0) const;
    /// Winding number of the contour around z as a real number, from the
    /// exact integral of dtau/(tau - z) over an adaptive inscribed polygon fine enough
    /// that the polygon and the curve are homotopic in the plane minus z.
    double winding(cplx z) const;

    /// Nearest sampled-and-polished parameter and its distance to z.
    std::pair<double, double> nearest(cplx z) const;

    cplx normal_offset(double t, double eps, Side side) const;

    /// Smallest of the radius of curvature at t, the distance to the
    /// nearest corner or endpoint, and half the diameter.
    double local_feature_size(double t) const;

    /// Maps a parameter of the contour as the user specified it to the
    /// canonical (counterclockwise) parameter. Identity unless the contour
    /// was reversed during normalization.
    double canonical_parameter(double user_t) const noexcept;

    /// For piecewise contours: index of the piece containing t and the
    /// piece-local parameter in the piece's own orientation.
    std::pair<std::size_t, double> locate(double t) const;
    std::size_t piece_count() const noexcept;

    /// Sample points on an n-point grid (open: endpoints included, closed:
    /// t = j/n).
    std::vector<ContourPoint> sample(std::size_t n) const;

    cplx centroid() const;
    /// Largest distance from the centroid to the sampled curve.
    double radius_about_centroid() const;

    const std::string& kind() const noexcept;

    /// Geometric validation on an n-point grid: closure, non-vanishing
    /// tangent, sampled simplicity. Throws Error(domain) on failure.
    void validate(std::size_t n = 256) const;

    struct Impl;

private:
    explicit Contour(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

}  // namespace cauchy_jump
