#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cauchy_jump/series.hpp"

namespace cauchy_jump {

/// Annulus inner < |z| < outer on which the exterior map is analytic and its
/// Laurent expansion at infinity converges.
struct Annulus {
    double inner = 0.0;
    double outer = std::numeric_limits<double>::infinity();

    bool contains(double r) const noexcept { return r > inner && r < outer; }
    bool finite() const noexcept { return outer < std::numeric_limits<double>::infinity(); }
};

/// Conformal map g of the exterior of a domain onto |w| > 1 with g(inf) = inf,
/// g(z) = c1 z + c0 + c-1/z + ...
class ExteriorMap {
public:
    /// g(z) = z / R.
    static ExteriorMap disk(const Rational& radius);
    /// Ellipse with semi-axes a >= b > 0 centred at 0:
    /// g(z) = (z + sqrt(z^2 - c^2)) / (a + b), c^2 = a^2 - b^2.
    static ExteriorMap ellipse(const Rational& a, const Rational& b);
    /// Segment [-s, s]: g(z) = (z + sqrt(z^2 - s^2)) / s.
    static ExteriorMap segment(const Rational& half_length);
    /// User Laurent data at infinity (exponents <= 1). Numeric g evaluates
    /// the series; the inverse is found by Newton iteration.
    static ExteriorMap from_laurent(LaurentPoly laurent, Annulus annulus);
    /// "disk:2", "segment:2", "ellipse:2,1". Numbers may be integers,
    /// fractions or decimals and are kept exact.
    static ExteriorMap parse(std::string_view spec);

    const std::string& kind() const noexcept { return kind_; }
    const std::string& description() const noexcept { return description_; }
    const Annulus& annulus() const noexcept { return annulus_; }

    /// Expansion of g at infinity tracked down to exponent 1 - depth.
    LaurentPoly laurent(int depth) const;
    std::complex<double> leading() const;

    std::complex<double> forward(std::complex<double> z) const;
    /// g^-1(w) for |w| >= 1.
    std::complex<double> inverse(std::complex<double> w) const;

    /// Closure of the domain D+ bounded by g^-1(|w| = 1).
    bool contains(std::complex<double> z) const;
    /// max |g^-1(w)| over the unit circle.
    double domain_size() const;
    /// Annulus midpoint when finite, else 1.5 times the domain size.
    double default_radius() const;
    /// g^-1 applied to n equally spaced points e^{2 pi i (j + 1/2) / n}, scaled.
    std::vector<std::complex<double>> boundary_probes(std::size_t n, double scale = 1.0) const;

private:
    std::string kind_;
    std::string description_;
    Annulus annulus_;
    std::function<LaurentPoly(int)> laurent_;
    std::function<std::complex<double>(std::complex<double>)> forward_;
    std::function<std::complex<double>(std::complex<double>)> inverse_;
};

enum class FaberSource { formal, quadrature };
std::string to_string(FaberSource source);

/// Coefficient vectors of Psi_0..Psi_N, index = power of z.
struct FaberBasis {
    std::vector<std::vector<Coefficient>> polynomials;
    FaberSource source = FaberSource::formal;

    std::size_t size() const noexcept { return polynomials.size(); }
    std::complex<double> evaluate(std::size_t n, std::complex<double> z) const;
};

/// Psi_n = polynomial part of g^n, n = 0..N. Exact when g is rational.
FaberBasis faber_polynomials(const ExteriorMap& g, int count);

/// d_k = (1/2 pi i) * integral over |zeta| = radius of g^n zeta^(-k-1),
/// by the periodic trapezoid rule with `nodes` points.
FaberBasis faber_polynomials_quadrature(const ExteriorMap& g, double radius, int count, std::size_t nodes = 512);

struct VanishingReport {
    int n = 0;
    double radius = 0.0;
    std::vector<std::complex<double>> probes;
    std::vector<double> moduli;
    double max_modulus = 0.0;
};

/// Evaluates L+(g^n)(z) = (1/2 pi i) * integral over |zeta| = radius of
/// g(zeta)^n / (zeta - z) at each probe, for n < 0. Empty probes: 16 points
/// at a quarter of the boundary.
VanishingReport verify_vanishing(const ExteriorMap& g, int n, std::span<const std::complex<double>> probes,
                                 std::optional<double> radius = std::nullopt, std::size_t nodes = 512);

struct FaberSeriesResult {
    std::vector<std::complex<double>> coefficients;  // a_0..a_N
    std::vector<std::complex<double>> probes;
    std::vector<double> errors;
    double max_error = 0.0;
};

/// a_n = (1/2 pi i) * integral over |w| = 1 of f(g^-1(w)) w^(-n-1), then
/// compares sum a_n Psi_n(z) with f(z) at the probes (64 boundary points
/// when empty).
FaberSeriesResult faber_series(const std::function<std::complex<double>(std::complex<double>)>& f,
                               const ExteriorMap& g, int count, std::span<const std::complex<double>> probes,
                               std::size_t nodes = 512);

}  // namespace cauchy_jump
