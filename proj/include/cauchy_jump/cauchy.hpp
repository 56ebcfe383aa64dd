#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cauchy_jump/contour.hpp"
#include "cauchy_jump/density.hpp"
#include "cauchy_jump/expr.hpp"
#include "cauchy_jump/quadrature.hpp"

namespace cauchy_jump {

struct CauchyConfig {
    QuadratureConfig quadrature{};
    double on_contour_tol = -1.0;  // negative: 1e-9 times the diameter
    std::size_t max_nodes = std::size_t{1} << 20;
    // Side limits: eps_k = eps0_factor * local_feature_size * 2^-k, k = 0..levels.
    double eps0_factor = 0.1;
    int levels = 6;
    double extrapolation_tol = 1e-5;
};

struct BoundaryTriple {
    cplx plus{};
    cplx minus{};
    cplx principal{};
    double error_estimate = 0.0;
    std::vector<std::string> warnings;
};

struct Evaluation {
    cplx value{};
    double error_estimate = 0.0;
    std::size_t nodes_used = 0;
    Region region = Region::exterior();
};

struct SideLimit {
    cplx value{};
    double residual = 0.0;  // gap between the two highest-order extrapolants
    std::vector<double> eps;
    std::vector<cplx> samples;
};

/// Phi(z) = (1/2 pi i) * integral of phi(tau)/(tau - z) dtau, aware of
/// which side of the contour z lies on.
class CauchyIntegral {
public:
    CauchyIntegral(Contour contour, Density density, CauchyConfig config = {});

    const Contour& contour() const noexcept { return contour_; }
    const Density& density() const noexcept { return density_; }
    const CauchyConfig& config() const noexcept { return config_; }
    double on_contour_tol() const noexcept { return on_tol_; }

    cplx eval(cplx z) const { return evaluate(z).value; }
    /// Off the contour: quadrature, refined automatically when z is within
    /// five grid spacings of the curve; on closed contours such points also
    /// subtract phi at the nearest curve point. On the contour: the principal
    /// value divided by 2 pi i.
    Evaluation evaluate(cplx z) const;
    /// Quadrature only, no region test; z must be off the contour.
    Evaluation evaluate_off_contour(cplx z) const;

    /// Phi^pm(tau0) = principal +- phi(tau0)/2.
    BoundaryTriple boundary_values(double t0) const;

    /// Limit of Phi along the normal through gamma(t0), extrapolated from
    /// offsets eps_k -> 0. Independent of boundary_values.
    SideLimit limit_from_side(double t0, Side side) const;

    /// a_n = -(1/2 pi i) * integral of tau^(n-1) phi(tau) dtau, n = 1..count,
    /// so that Phi(z) = sum a_n z^-n for large |z|.
    std::vector<cplx> series_at_infinity(std::size_t count) const;

private:
    Evaluation quadrature_eval(cplx z, std::optional<bool> interior) const;

    Contour contour_;
    Density density_;
    CauchyConfig config_;
    double on_tol_;
    double length_;
};

/// Sum a_n z^-n.
cplx evaluate_series_at_infinity(std::span<const cplx> coefficients, cplx z);

/// Analytic function given by an expression, with an optional value at
/// infinity for exterior use.
struct AnalyticFunction {
    Expression f;
    std::optional<cplx> at_infinity;

    cplx operator()(cplx z) const { return f(z); }
};

enum class CifKind { interior, exterior };  // Cauchy integral formula I / II

struct CifEntry {
    cplx probe{};
    Region::Kind region = Region::Kind::interior;
    cplx value{};
    cplx expected{};
    double deviation = 0.0;
};

struct CifReport {
    std::vector<CifEntry> entries;
    double max_deviation = 0.0;
    std::vector<std::string> notes;  // probes excluded for lying on the contour
};

/// Compares (1/2 pi i) * integral of f(tau)/(tau - z) dtau at each probe
/// with the Cauchy integral formula: kind I gives f(z) inside and 0
/// outside; kind II gives f(inf) inside and f(inf) - f(z) outside.
CifReport verify_cif(const Contour& contour, const AnalyticFunction& f, CifKind kind, std::span<const cplx> probes,
                     const CauchyConfig& config = {});

}  // namespace cauchy_jump
