#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cauchy_jump/contour.hpp"
#include "cauchy_jump/density.hpp"

namespace cauchy_jump {

enum class RuleKind { automatic, trapezoid, gauss };

RuleKind parse_rule_kind(const std::string& name);
std::string to_string(RuleKind kind);

struct QuadratureConfig {
    RuleKind kind = RuleKind::automatic;
    std::size_t nodes = 128;  // trapezoid node count
    std::size_t panels = 16;  // Gauss-Legendre panel count (16 nodes each)
};

/// Nodes t_j in [0,1] and positive weights w_j with sum w_j = 1.
struct QuadratureRule {
    RuleKind kind;
    std::vector<double> t;
    std::vector<double> w;

    std::size_t size() const noexcept { return t.size(); }
};

inline constexpr std::size_t kGaussOrder = 16;

/// Periodic trapezoid for closed corner-free contours, panel Gauss otherwise
/// (corners are panel breaks). With an anchor, no node lands on the anchor:
/// the trapezoid grid is shifted by half a step from it, and the anchor
/// becomes a Gauss panel break with geometric grading next to it.
QuadratureRule make_rule(const Contour& contour, const QuadratureConfig& config,
                         std::optional<double> anchor = std::nullopt);

/// Same config with twice the nodes (or panels).
QuadratureConfig doubled(const QuadratureConfig& config);

RuleKind resolve_kind(const Contour& contour, RuleKind requested);

struct PVResult {
    cplx value{};
    double error_estimate = 0.0;  // |I_2N - I_N|
    std::size_t nodes_used = 0;
    std::vector<std::string> warnings;
};

/// Integrand f(tau) evaluated at a contour point; the rule supplies dtau.
using ContourIntegrand = std::function<cplx(const ContourPoint&)>;

/// Sum_j f(gamma(t_j)) gamma'(t_j) w_j for one rule. Throws
/// Error(singularity) naming the node if the integrand is not finite.
cplx apply_rule(const Contour& contour, const ContourIntegrand& f, const QuadratureRule& rule);

/// Integral of f(tau) dtau over the contour with a node-doubling error
/// estimate; the value is the finer of the two results.
PVResult integrate(const Contour& contour, const ContourIntegrand& f, const QuadratureConfig& config = {},
                   std::optional<double> anchor = std::nullopt);

/// PV of the integral of dtau/(tau - tau0), tau0 = gamma(t0). Exactly i pi
/// on closed contours; log(b - tau0) - log(a - tau0) + i pi on open ones,
/// with the logarithm branch cut leaving tau0 on the right of travel.
PVResult pv_unit(const Contour& contour, double t0);

/// PV of the integral of phi(tau)/(tau - tau0) dtau by subtraction: the
/// bounded remainder (phi - phi(tau0))/(tau - tau0) by quadrature on a grid
/// avoiding tau0, plus phi(tau0) times pv_unit.
PVResult pv_cauchy(const Contour& contour, const Density& density, double t0, const QuadratureConfig& config = {});

}  // namespace cauchy_jump
