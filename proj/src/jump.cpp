#include "cauchy_jump/jump.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cauchy_jump/error.hpp"

namespace cauchy_jump {

namespace {

std::string format_point(cplx z) {
    std::ostringstream s;
    s.precision(15);
    s << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return s.str();
}

double cross(cplx o, cplx a, cplx b) { return std::imag(std::conj(a - o) * (b - o)); }

// Andrew's monotone chain, counter-clockwise.
std::vector<cplx> convex_hull(std::vector<cplx> p) {
    std::sort(p.begin(), p.end(), [](cplx a, cplx b) { return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()); });
    if (p.size() < 3) return p;
    std::vector<cplx> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

double segment_distance(cplx z, cplx a, cplx b) {
    cplx d = b - a;
    double len2 = std::norm(d);
    double s = len2 > 0.0 ? std::clamp(std::real(std::conj(d) * (z - a)) / len2, 0.0, 1.0) : 0.0;
    return std::abs(z - (a + s * d));
}

bool inside_hull(const std::vector<cplx>& hull, cplx z, double tol) {
    if (hull.size() < 3) {
        if (hull.empty()) return false;
        return segment_distance(z, hull.front(), hull.back()) <= tol;
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        cplx a = hull[i], b = hull[(i + 1) % hull.size()];
        if (cross(a, b, z) < -tol * std::abs(b - a)) return false;
    }
    return true;
}

// Arc from b to a whose apex sits at signed sagitta h off the chord.
Contour chord_arc(cplx b, cplx a, double h) {
    cplx d = a - b;
    double len = std::abs(d);
    cplx n = cplx(0.0, 1.0) * d / len;
    cplx mid = 0.5 * (a + b);
    double side = h > 0 ? 1.0 : -1.0;
    double s = std::abs(h);
    double radius = (0.25 * len * len + s * s) / (2.0 * s);
    cplx apex = mid + side * s * n;
    cplx center = apex - side * radius * n;
    double tb = std::arg(b - center), ta = std::arg(a - center), tp = std::arg(apex - center);
    auto wrap = [](double x) {
        x = std::fmod(x, 2.0 * pi);
        return x < 0 ? x + 2.0 * pi : x;
    };
    double ccw = wrap(ta - tb);
    double sweep = wrap(tp - tb) < ccw ? ccw : ccw - 2.0 * pi;
    return Contour::arc(center, radius, tb, tb + sweep);
}

}  // namespace

Contour closing_arc(const Contour& open) {
    if (open.closed()) throw Error(ErrorKind::domain, "contour is already closed");
    const cplx a = open.evaluate(0.0).z, b = open.evaluate(1.0).z;
    const double len = std::abs(a - b);
    const double scale = open.diameter();
    if (len <= 1e-9 * scale) throw Error(ErrorKind::domain, "open contour ends where it starts; declare it closed");

    std::vector<cplx> pts;
    for (const auto& p : open.sample(512)) pts.push_back(p.z);
    const auto hull = convex_hull(pts);
    const double tol = 1e-9 * scale;

    std::optional<Contour> fallback;
    for (double ratio : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        for (double side : {1.0, -1.0}) {
            Contour arc = chord_arc(b, a, side * ratio * len);
            // The closed curve must keep the open contour's direction, so
            // that D+ lies on its left.
            bool keeps_direction = false;
            try {
                keeps_direction = Contour::piecewise({open, arc}, true).canonical_parameter(0.25) == 0.25;
            } catch (const Error&) {
            }
            if (!keeps_direction) continue;
            bool outside = true, clear = true;
            for (const auto& p : arc.sample(129)) {
                if (std::min(std::abs(p.z - a), std::abs(p.z - b)) < 1e-3 * len) continue;
                if (inside_hull(hull, p.z, tol)) outside = false;
                if (open.nearest(p.z).second < 1e-6 * scale) clear = false;
            }
            if (outside) return arc;
            if (clear && !fallback) fallback = arc;
        }
    }
    if (fallback) return *fallback;
    throw Error(ErrorKind::domain, "no circular arc closes the open contour counterclockwise without crossing it");
}

JumpPair::JumpPair(CauchyIntegral integral, std::optional<Contour> original)
    : integral_(std::move(integral)), original_(std::move(original)) {}

Region JumpPair::region(cplx z) const { return contour().classify(z, integral_.on_contour_tol()); }

cplx JumpPair::plus(cplx z) const {
    Region r = region(z);
    if (r.kind == Region::Kind::exterior)
        throw Error(ErrorKind::probe_region, "Phi+ is only defined on D+ and the contour; " + format_point(z) + " lies in D-");
    if (r.kind == Region::Kind::on_contour) return integral_.boundary_values(r.t).plus;
    return integral_.evaluate_off_contour(z).value;
}

cplx JumpPair::minus(cplx z) const {
    Region r = region(z);
    if (r.kind == Region::Kind::interior)
        throw Error(ErrorKind::probe_region, "Phi- is only defined on D- and the contour; " + format_point(z) + " lies in D+");
    if (r.kind == Region::Kind::on_contour) return integral_.boundary_values(r.t).minus;
    return integral_.evaluate_off_contour(z).value;
}

double JumpPair::closed_parameter(double original_t) const {
    if (!original_) return original_t;
    return contour().nearest(original_->evaluate(original_t).z).first;
}

JumpPair decompose(const Contour& contour, const Density& density, const CauchyConfig& config) {
    if (contour.closed()) return JumpPair(CauchyIntegral(contour, density, config));
    Contour closed = Contour::piecewise({contour, closing_arc(contour)}, true);
    Density extended(
        [closed, density](double t) {
            auto [piece, s] = closed.locate(t);
            return piece == 0 ? density(s) : cplx(0.0);
        },
        density.label() + " (zero on closing arc)");
    if (density.regularity() == Regularity::non_holder) extended = extended.declared_non_holder();
    return JumpPair(CauchyIntegral(closed, extended, config), contour);
}

std::vector<cplx> default_exterior_probes(const Contour& contour) {
    const cplx c = contour.centroid();
    const double r = contour.radius_about_centroid();
    std::vector<cplx> probes;
    for (double ring : {2.0, 3.0})
        for (int j = 0; j < 16; ++j) probes.push_back(c + std::polar(ring * r, 2.0 * pi * j / 16.0));
    return probes;
}

BvpVerdict solve_holomorphic_bvp(const Contour& contour, const Density& u, std::span<const cplx> probes,
                                 const CauchyConfig& config, const BvpOptions& options) {
    if (!contour.closed()) throw Error(ErrorKind::unsupported, "the holomorphic boundary value problem needs a closed contour");
    BvpVerdict v;
    v.tolerance = options.tolerance >= 0.0 ? options.tolerance : 1e-7 * u.data_scale(contour);
    if (probes.empty()) v.probes = default_exterior_probes(contour);
    else v.probes.assign(probes.begin(), probes.end());

    JumpPair pair = decompose(contour, u, config);
    for (cplx z : v.probes) {
        Region r = contour.classify(z, pair.integral().on_contour_tol());
        if (r.kind != Region::Kind::exterior)
            throw Error(ErrorKind::probe_region, "probe " + format_point(z) + " is not in the exterior domain D-");
    }
    for (cplx z : v.probes) {
        double m = std::abs(pair.integral().evaluate_off_contour(z).value);
        v.minus_moduli.push_back(m);
        v.max_minus = std::max(v.max_minus, m);
    }

    const double radius = contour.radius_about_centroid();
    v.series = pair.integral().series_at_infinity(options.series_terms);
    for (std::size_t k = 0; k < v.series.size(); ++k)
        if (std::abs(v.series[k]) > v.tolerance * std::pow(radius, double(k + 1))) v.series_small = false;

    v.solvable = v.max_minus <= v.tolerance && v.series_small;
    if (!v.solvable) {
        // Earliest probe attaining the maximum, so the witness is stable.
        for (std::size_t i = 0; i < v.probes.size(); ++i)
            if (v.minus_moduli[i] >= v.max_minus * (1.0 - 1e-9)) {
                v.witness = BvpWitness{v.probes[i], v.minus_moduli[i]};
                break;
            }
        if (v.max_minus <= v.tolerance)
            v.notes.push_back("Phi- is small on the probes but its expansion at infinity is not");
        return v;
    }

    std::size_t n = std::max<std::size_t>(options.boundary_grid, 1);
    for (std::size_t j = 0; j < n; ++j) {
        double t = (double(j) + 0.5) / double(n);
        if (contour.is_corner(t)) continue;
        v.boundary_residual = std::max(v.boundary_residual, std::abs(pair.boundary(t).plus - u(t)));
    }
    v.solution = std::move(pair);
    return v;
}

}  // namespace cauchy_jump
