#include "cauchy_jump/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "cauchy_jump/error.hpp"

namespace cauchy_jump {

namespace {

constexpr int kGradingLevels = 24;
constexpr double kParamTol = 1e-12;

struct GaussNodes {
    std::vector<double> x, w;  // on [-1, 1]
};

const GaussNodes& gauss_nodes() {
    static const GaussNodes nodes = [] {
        using G = boost::math::quadrature::gauss<double, kGaussOrder>;
        GaussNodes g;
        const auto& a = G::abscissa();
        const auto& w = G::weights();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0.0) {
                g.x.push_back(0.0);
                g.w.push_back(w[i]);
                continue;
            }
            g.x.push_back(-a[i]);
            g.w.push_back(w[i]);
            g.x.push_back(a[i]);
            g.w.push_back(w[i]);
        }
        return g;
    }();
    return nodes;
}

void add_panel(QuadratureRule& rule, double a, double b) {
    const auto& g = gauss_nodes();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        rule.t.push_back(mid + half * g.x[i]);
        rule.w.push_back(half * g.w[i]);
    }
}

// Splits [a, b] into geometrically shrinking panels toward `toward` (a or b).
void add_graded_panel(QuadratureRule& rule, double a, double b, bool toward_left) {
    double len = b - a;
    double prev = 0.0;
    for (int k = kGradingLevels; k >= 0; --k) {
        double cur = k == 0 ? len : len * std::ldexp(1.0, -k);
        if (toward_left) add_panel(rule, a + prev, a + cur);
        else add_panel(rule, b - cur, b - prev);
        prev = cur;
    }
}

QuadratureRule trapezoid_rule(const Contour& contour, std::size_t n, std::optional<double> anchor) {
    QuadratureRule rule{RuleKind::trapezoid, {}, {}};
    if (contour.closed()) {
        if (n < 1) throw Error(ErrorKind::domain, "trapezoid rule needs at least one node");
        double shift = anchor ? *anchor + 0.5 / n : 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double t = shift + double(j) / n;
            t -= std::floor(t);
            rule.t.push_back(t);
            rule.w.push_back(1.0 / n);
        }
        return rule;
    }
    if (n < 2) throw Error(ErrorKind::domain, "trapezoid rule on an open contour needs at least two nodes");
    if (!anchor) {
        double h = 1.0 / (n - 1);
        for (std::size_t j = 0; j < n; ++j) {
            rule.t.push_back(j * h);
            rule.w.push_back(j == 0 || j + 1 == n ? 0.5 * h : h);
        }
        return rule;
    }
    // Midpoint cells on either side of the anchor.
    double a = *anchor;
    auto cells = [&](double lo, double hi) {
        std::size_t m = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(n * (hi - lo))));
        double h = (hi - lo) / m;
        for (std::size_t k = 0; k < m; ++k) {
            rule.t.push_back(lo + (k + 0.5) * h);
            rule.w.push_back(h);
        }
    };
    cells(0.0, a);
    cells(a, 1.0);
    return rule;
}

QuadratureRule gauss_rule(const Contour& contour, std::size_t panels, std::optional<double> anchor) {
    if (panels < 1) throw Error(ErrorKind::domain, "Gauss rule needs at least one panel");
    std::vector<double> breaks{0.0, 1.0};
    for (double c : contour.corners()) breaks.push_back(c);
    if (anchor) breaks.push_back(*anchor);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(), [](double x, double y) { return std::abs(x - y) < kParamTol; }),
                 breaks.end());

    auto touches_anchor = [&](double x) {
        if (!anchor) return false;
        if (std::abs(x - *anchor) < kParamTol) return true;
        if (contour.closed() && (*anchor < kParamTol || *anchor > 1.0 - kParamTol))
            return x < kParamTol || x > 1.0 - kParamTol;
        return false;
    };

    QuadratureRule rule{RuleKind::gauss, {}, {}};
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double lo = breaks[i], hi = breaks[i + 1];
        std::size_t m = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(panels * (hi - lo))));
        double h = (hi - lo) / m;
        for (std::size_t k = 0; k < m; ++k) {
            double a = lo + k * h, b = k + 1 == m ? hi : lo + (k + 1) * h;
            bool left = k == 0 && touches_anchor(lo);
            bool right = k + 1 == m && touches_anchor(hi);
            if (left && right) {
                double mid = 0.5 * (a + b);
                add_graded_panel(rule, a, mid, true);
                add_graded_panel(rule, mid, b, false);
            } else if (left) {
                add_graded_panel(rule, a, b, true);
            } else if (right) {
                add_graded_panel(rule, a, b, false);
            } else {
                add_panel(rule, a, b);
            }
        }
    }
    return rule;
}

}  // namespace

RuleKind parse_rule_kind(const std::string& name) {
    if (name == "auto" || name == "automatic") return RuleKind::automatic;
    if (name == "trapezoid") return RuleKind::trapezoid;
    if (name == "gauss") return RuleKind::gauss;
    throw Error(ErrorKind::parse, "unknown quadrature rule '" + name + "' (expected trapezoid, gauss or auto)");
}

std::string to_string(RuleKind kind) {
    switch (kind) {
    case RuleKind::automatic: return "auto";
    case RuleKind::trapezoid: return "trapezoid";
    case RuleKind::gauss: return "gauss";
    }
    return "unknown";
}

RuleKind resolve_kind(const Contour& contour, RuleKind requested) {
    if (requested != RuleKind::automatic) return requested;
    return contour.closed() && contour.corners().empty() ? RuleKind::trapezoid : RuleKind::gauss;
}

QuadratureRule make_rule(const Contour& contour, const QuadratureConfig& config, std::optional<double> anchor) {
    if (resolve_kind(contour, config.kind) == RuleKind::trapezoid) return trapezoid_rule(contour, config.nodes, anchor);
    return gauss_rule(contour, config.panels, anchor);
}

QuadratureConfig doubled(const QuadratureConfig& config) {
    QuadratureConfig c = config;
    c.nodes *= 2;
    c.panels *= 2;
    return c;
}

cplx apply_rule(const Contour& contour, const ContourIntegrand& f, const QuadratureRule& rule) {
    cplx acc{};
    for (std::size_t j = 0; j < rule.size(); ++j) {
        ContourPoint p = contour.evaluate(rule.t[j]);
        cplx v = f(p);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "integrand is not finite at node t=" << rule.t[j] << " (tau=" << p.z.real() << "+" << p.z.imag()
                << "i)";
            throw Error(ErrorKind::singularity, msg.str());
        }
        acc += v * p.dz * rule.w[j];
    }
    return acc;
}

PVResult integrate(const Contour& contour, const ContourIntegrand& f, const QuadratureConfig& config,
                   std::optional<double> anchor) {
    QuadratureRule coarse = make_rule(contour, config, anchor);
    QuadratureRule fine = make_rule(contour, doubled(config), anchor);
    cplx a = apply_rule(contour, f, coarse);
    cplx b = apply_rule(contour, f, fine);
    PVResult r;
    r.value = b;
    r.error_estimate = std::abs(b - a);
    r.nodes_used = fine.size();
    return r;
}

namespace {

void check_singular_point(const Contour& contour, double t0) {
    if (!(t0 >= 0.0 && t0 <= 1.0)) throw Error(ErrorKind::domain, "parameter " + std::to_string(t0) + " outside [0,1]");
    if (!contour.closed() && (t0 < kParamTol || t0 > 1.0 - kParamTol))
        throw Error(ErrorKind::endpoint, "principal value undefined at a true endpoint of an open contour");
    if (contour.is_corner(t0))
        throw Error(ErrorKind::corner, "principal value at a corner is outside the smooth-contour setting");
}

// Continuous change of arg(gamma(t) - tau0) along a sampled path, with the
// path's first or last direction replaced by a tangent limit.
double unwrap(const std::vector<cplx>& v) {
    double total = 0.0;
    for (std::size_t k = 1; k < v.size(); ++k) {
        double step = std::arg(v[k] / v[k - 1]);
        if (std::abs(step) > 0.9 * pi)
            throw Error(ErrorKind::precision, "contour turns too fast around tau0 to track the logarithm branch");
        total += step;
    }
    return total;
}

}  // namespace

PVResult pv_unit(const Contour& contour, double t0) {
    check_singular_point(contour, t0);
    PVResult r;
    if (contour.closed()) {
        r.value = cplx(0.0, pi);
        return r;
    }
    constexpr std::size_t m = 4096;
    constexpr int levels = 20;
    const ContourPoint p0 = contour.evaluate(t0);
    const cplx tau0 = p0.z;

    std::vector<cplx> left;
    double dl = t0 / m;
    for (std::size_t k = 0; k < m; ++k) left.push_back(contour.evaluate(k * dl).z - tau0);
    for (int k = 0; k <= levels; ++k) left.push_back(contour.evaluate(t0 - dl * std::ldexp(1.0, -k)).z - tau0);
    left.push_back(-p0.dz);

    std::vector<cplx> right{p0.dz};
    double dr = (1.0 - t0) / m;
    for (int k = levels; k >= 0; --k) right.push_back(contour.evaluate(t0 + dr * std::ldexp(1.0, -k)).z - tau0);
    for (std::size_t k = 2; k <= m; ++k) right.push_back(contour.evaluate(k == m ? 1.0 : t0 + k * dr).z - tau0);

    const cplx a = contour.evaluate(0.0).z, b = contour.evaluate(1.0).z;
    r.value = cplx(std::log(std::abs(b - tau0) / std::abs(a - tau0)), unwrap(left) + unwrap(right));
    return r;
}

PVResult pv_cauchy(const Contour& contour, const Density& density, double t0, const QuadratureConfig& config) {
    PVResult unit = pv_unit(contour, t0);
    const ContourPoint p0 = contour.evaluate(t0);
    const cplx h0 = density(t0);
    ContourIntegrand remainder = [&](const ContourPoint& p) { return (density(p.t) - h0) / (p.z - p0.z); };
    PVResult r = integrate(contour, remainder, config, t0);
    r.value += h0 * unit.value;
    if (density.regularity() == Regularity::non_holder)
        r.warnings.push_back("density '" + density.label() +
                             "' is declared non-Hölder; the principal value need not exist");
    return r;
}

}  // namespace cauchy_jump
