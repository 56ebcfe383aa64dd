#include "cauchy_jump/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cauchy_jump/error.hpp"

namespace cauchy_jump {

namespace {

const cplx two_pi_i(0.0, 2.0 * pi);

std::size_t next_pow2(double x) {
    std::size_t n = 1;
    while (double(n) < x) n <<= 1;
    return n;
}

// Neville's scheme evaluated at x = 0.
cplx extrapolate_to_zero(std::span<const double> x, std::span<const cplx> y) {
    std::vector<cplx> p(y.begin(), y.end());
    const std::size_t n = p.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i) p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
    return p[0];
}

std::string format_point(cplx z) {
    std::ostringstream s;
    s.precision(15);
    s << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return s.str();
}

}  // namespace

CauchyIntegral::CauchyIntegral(Contour contour, Density density, CauchyConfig config)
    : contour_(std::move(contour)), density_(std::move(density)), config_(config) {
    on_tol_ = config_.on_contour_tol >= 0.0 ? config_.on_contour_tol : contour_.on_contour_tolerance();
    length_ = contour_.length();
    density_.check_closure(contour_);
}

Evaluation CauchyIntegral::evaluate_off_contour(cplx z) const { return quadrature_eval(z, std::nullopt); }

Evaluation CauchyIntegral::quadrature_eval(cplx z, std::optional<bool> interior) const {
    auto [t_near, dist] = contour_.nearest(z);
    if (dist == 0.0) throw Error(ErrorKind::domain, "point " + format_point(z) + " lies on the contour");
    QuadratureConfig q = config_.quadrature;
    const std::size_t cap = std::max<std::size_t>(config_.max_nodes / 2, 1);
    bool near = false;
    if (resolve_kind(contour_, q.kind) == RuleKind::trapezoid) {
        // Closer than five grid spacings: refine to six spacings per distance.
        near = dist < 5.0 * length_ / double(q.nodes);
        if (near) q.nodes = std::clamp<std::size_t>(next_pow2(6.0 * length_ / dist), q.nodes, cap);
    } else {
        double spacing = length_ / double(q.panels * kGaussOrder);
        near = dist < 5.0 * spacing;
        if (near)
            q.panels = std::clamp<std::size_t>(next_pow2(length_ / dist), q.panels, std::max<std::size_t>(cap / kGaussOrder, 1));
    }
    const Density& h = density_;
    // With the side known, subtract the linear Taylor part of phi at the
    // nearest point tau*: the integrals of 1/(tau - z) and (tau - tau*)/(tau - z)
    // are 2 pi i and 2 pi i (z - tau*) inside, 0 outside, whatever the slope.
    cplx h0{}, slope{}, tau_star{};
    const bool subtract = near && interior.has_value();
    if (subtract) {
        ContourPoint p = contour_.evaluate(t_near);
        tau_star = p.z;
        h0 = h(t_near);
        const double dt = 1e-6;
        double a = t_near - dt, b = t_near + dt;
        if (!contour_.is_corner(t_near) && a >= 0.0 && b <= 1.0) slope = (h(b) - h(a)) / (2.0 * dt) / p.dz;
    }
    PVResult r = integrate(
        contour_, [&](const ContourPoint& p) { return (h(p.t) - h0 - slope * (p.z - tau_star)) / (p.z - z); }, q);
    Evaluation e;
    e.value = r.value / two_pi_i + (subtract && *interior ? h0 + slope * (z - tau_star) : cplx(0.0));
    e.error_estimate = r.error_estimate / (2.0 * pi);
    e.nodes_used = r.nodes_used;
    return e;
}

Evaluation CauchyIntegral::evaluate(cplx z) const {
    Region region = Region::exterior();
    if (contour_.closed()) {
        region = contour_.classify(z, on_tol_);
    } else {
        auto [t, d] = contour_.nearest(z);
        if (d < on_tol_) region = Region::on_contour(t);
    }
    if (region.kind == Region::Kind::on_contour) {
        PVResult pv = pv_cauchy(contour_, density_, region.t, config_.quadrature);
        Evaluation e;
        e.value = pv.value / two_pi_i;
        e.error_estimate = pv.error_estimate / (2.0 * pi);
        e.nodes_used = pv.nodes_used;
        e.region = region;
        return e;
    }
    std::optional<bool> side;
    if (contour_.closed()) side = region.kind == Region::Kind::interior;
    Evaluation e = quadrature_eval(z, side);
    e.region = region;
    return e;
}

BoundaryTriple CauchyIntegral::boundary_values(double t0) const {
    PVResult pv = pv_cauchy(contour_, density_, t0, config_.quadrature);
    BoundaryTriple b;
    b.principal = pv.value / two_pi_i;
    cplx h0 = density_(t0);
    b.plus = b.principal + 0.5 * h0;
    b.minus = b.principal - 0.5 * h0;
    b.error_estimate = pv.error_estimate / (2.0 * pi);
    b.warnings = pv.warnings;
    return b;
}

SideLimit CauchyIntegral::limit_from_side(double t0, Side side) const {
    if (!(t0 >= 0.0 && t0 <= 1.0)) throw Error(ErrorKind::domain, "parameter outside [0,1]");
    if (!contour_.closed() && (t0 < 1e-12 || t0 > 1.0 - 1e-12))
        throw Error(ErrorKind::endpoint, "no side limit at a true endpoint");
    if (contour_.is_corner(t0)) throw Error(ErrorKind::corner, "no normal approach at a corner");
    if (config_.levels < 1) throw Error(ErrorKind::domain, "side limit needs at least two offsets");

    const double eps0 = config_.eps0_factor * contour_.local_feature_size(t0);
    SideLimit out;
    for (int k = 0; k <= config_.levels; ++k) {
        double eps = eps0 * std::ldexp(1.0, -k);
        cplx z = contour_.normal_offset(t0, eps, side);
        if (contour_.closed()) {
            Region r = contour_.classify(z, on_tol_);
            Region::Kind want = side == Side::interior ? Region::Kind::interior : Region::Kind::exterior;
            if (r.kind != want)
                throw Error(ErrorKind::convergence, "normal offset " + format_point(z) + " left the requested side");
        }
        out.eps.push_back(eps);
        out.samples.push_back(evaluate_off_contour(z).value);
    }
    out.value = extrapolate_to_zero(out.eps, out.samples);
    cplx lower = extrapolate_to_zero(std::span(out.eps).subspan(1), std::span(out.samples).subspan(1));
    out.residual = std::abs(out.value - lower);
    if (out.residual > config_.extrapolation_tol * std::max(1.0, std::abs(out.value)))
        throw Error(ErrorKind::convergence, "side-limit extrapolation residual " + std::to_string(out.residual) +
                                                " above tolerance");
    return out;
}

std::vector<cplx> CauchyIntegral::series_at_infinity(std::size_t count) const {
    if (!contour_.closed()) throw Error(ErrorKind::unsupported, "series at infinity needs a closed contour");
    std::vector<cplx> a;
    a.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        const int power = static_cast<int>(n) - 1;
        const Density& h = density_;
        PVResult r = integrate(
            contour_, [&](const ContourPoint& p) { return std::pow(p.z, power) * h(p.t); }, config_.quadrature);
        a.push_back(-r.value / two_pi_i);
    }
    return a;
}

cplx evaluate_series_at_infinity(std::span<const cplx> coefficients, cplx z) {
    // Horner in w = 1/z.
    cplx w = 1.0 / z, acc{};
    for (std::size_t k = coefficients.size(); k-- > 0;) acc = (acc + coefficients[k]) * w;
    return acc;
}

CifReport verify_cif(const Contour& contour, const AnalyticFunction& f, CifKind kind, std::span<const cplx> probes,
                     const CauchyConfig& config) {
    if (!contour.closed()) throw Error(ErrorKind::unsupported, "Cauchy integral formula needs a closed contour");
    if (kind == CifKind::exterior && !f.at_infinity)
        throw Error(ErrorKind::domain, "exterior Cauchy integral formula needs the value at infinity");
    CauchyIntegral ci(contour, Density::from_expression(contour, f.f), config);
    CifReport report;
    for (cplx z : probes) {
        Region r = contour.classify(z, ci.on_contour_tol());
        if (r.kind == Region::Kind::on_contour) {
            report.notes.push_back("probe " + format_point(z) + " lies on the contour and was excluded");
            continue;
        }
        CifEntry e;
        e.probe = z;
        e.region = r.kind;
        e.value = ci.evaluate_off_contour(z).value;
        bool inside = r.kind == Region::Kind::interior;
        if (kind == CifKind::interior) e.expected = inside ? f(z) : cplx(0.0);
        else e.expected = inside ? *f.at_infinity : *f.at_infinity - f(z);
        e.deviation = std::abs(e.value - e.expected);
        report.max_deviation = std::max(report.max_deviation, e.deviation);
        report.entries.push_back(e);
    }
    return report;
}

}  // namespace cauchy_jump
