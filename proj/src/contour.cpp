#include "cauchy_jump/contour.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include "cauchy_jump/error.hpp"

namespace cauchy_jump {

namespace {

using RawEval = std::function<std::pair<cplx, cplx>(double)>;

constexpr double kCornerTol = 1e-12;
constexpr std::size_t kDiameterGrid = 512;
constexpr std::size_t kNearestGrid = 2048;
constexpr std::size_t kMaxWindingVertices = std::size_t{1} << 22;

double wrap_unit(double t) {
    double w = t - std::floor(t);
    return w >= 1.0 ? 0.0 : w;
}

}  // namespace

std::string to_string(Region::Kind kind) {
    switch (kind) {
    case Region::Kind::interior: return "interior";
    case Region::Kind::exterior: return "exterior";
    case Region::Kind::on_contour: return "on_contour";
    }
    return "unknown";
}

struct Contour::Impl {
    std::string kind;
    bool closed = false;
    bool reversed = false;

    // Elementary shapes: evaluation in the user's orientation.
    RawEval raw;

    // Piecewise shapes: pieces in user order, breaks[i]..breaks[i+1] in the
    // user parameter.
    std::vector<Contour> pieces;
    std::vector<double> breaks;

    std::vector<double> corners;  // canonical parameters, sorted
    double diameter = 0.0;

    // (z, dz/du) in the user parameter u. `from_left` picks the piece ending
    // at u when u is a break.
    std::pair<cplx, cplx> eval_user(double u, bool from_left) const {
        if (pieces.empty()) return raw(u);
        std::size_t i = piece_index(u, from_left);
        double a = breaks[i], b = breaks[i + 1];
        double s = std::clamp((u - a) / (b - a), 0.0, 1.0);
        ContourPoint p = pieces[i].evaluate(s);
        return {p.z, p.dz / (b - a)};
    }

    std::size_t piece_index(double u, bool from_left) const {
        auto n = pieces.size();
        if (from_left) {
            auto it = std::lower_bound(breaks.begin() + 1, breaks.end() - 1, u);
            return std::min<std::size_t>(static_cast<std::size_t>(it - breaks.begin()) - 1, n - 1);
        }
        auto it = std::upper_bound(breaks.begin() + 1, breaks.end() - 1, u);
        return std::min<std::size_t>(static_cast<std::size_t>(it - breaks.begin()) - 1, n - 1);
    }

    ContourPoint eval(double t) const {
        if (!reversed) {
            auto [z, dz] = eval_user(t, false);
            return {t, z, dz};
        }
        auto [z, dz] = eval_user(1.0 - t, true);
        return {t, z, -dz};
    }
};

Contour::Contour(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

double sampled_diameter(const std::function<cplx(double)>& f, bool closed) {
    std::vector<cplx> pts(kDiameterGrid);
    for (std::size_t j = 0; j < kDiameterGrid; ++j) {
        double t = closed ? double(j) / kDiameterGrid : double(j) / (kDiameterGrid - 1);
        pts[j] = f(t);
    }
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, std::abs(pts[i] - pts[j]));
    return d;
}

// Twice the signed area, (1/2) Im of the closed integral of conj(z) dz, by a
// composite rule fine enough for orientation purposes.
double signed_area(const Contour::Impl& impl) {
    constexpr std::size_t n = 4096;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double t = (j + 0.5) / n;
        auto p = impl.eval(t);
        acc += (std::conj(p.z) * p.dz).imag();
    }
    return 0.5 * acc / n;
}

std::shared_ptr<Contour::Impl> finish(std::shared_ptr<Contour::Impl> impl) {
    impl->diameter = sampled_diameter([&](double t) { return impl->eval(t).z; }, impl->closed);
    if (impl->closed && signed_area(*impl) < 0.0) {
        impl->reversed = true;
        for (double& c : impl->corners) c = c == 0.0 ? 0.0 : 1.0 - c;
        std::sort(impl->corners.begin(), impl->corners.end());
    }
    return impl;
}

}  // namespace

Contour Contour::circle(cplx center, double radius) {
    if (!(radius > 0.0)) throw Error(ErrorKind::domain, "circle radius must be positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = "circle";
    impl->closed = true;
    impl->raw = [center, radius](double t) {
        cplx e = std::polar(1.0, 2.0 * pi * t);
        return std::pair{center + radius * e, cplx(0.0, 2.0 * pi * radius) * e};
    };
    Contour c(finish(impl));
    c.validate();
    return c;
}

Contour Contour::ellipse(cplx center, double semi_x, double semi_y) {
    if (!(semi_x > 0.0) || !(semi_y > 0.0)) throw Error(ErrorKind::domain, "ellipse semi-axes must be positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = "ellipse";
    impl->closed = true;
    impl->raw = [center, semi_x, semi_y](double t) {
        double c = std::cos(2.0 * pi * t), s = std::sin(2.0 * pi * t);
        return std::pair{center + cplx(semi_x * c, semi_y * s), 2.0 * pi * cplx(-semi_x * s, semi_y * c)};
    };
    Contour c(finish(impl));
    c.validate();
    return c;
}

Contour Contour::segment(cplx a, cplx b) {
    if (a == b) throw Error(ErrorKind::domain, "segment endpoints coincide");
    auto impl = std::make_shared<Impl>();
    impl->kind = "segment";
    impl->raw = [a, b](double t) { return std::pair{a + (b - a) * t, b - a}; };
    return Contour(finish(impl));
}

Contour Contour::arc(cplx center, double radius, double theta0, double theta1) {
    if (!(radius > 0.0)) throw Error(ErrorKind::domain, "arc radius must be positive");
    if (theta0 == theta1) throw Error(ErrorKind::domain, "arc has zero sweep");
    if (std::abs(theta1 - theta0) >= 2.0 * pi) throw Error(ErrorKind::domain, "arc sweep must be below 2 pi; use a circle");
    auto impl = std::make_shared<Impl>();
    impl->kind = "arc";
    impl->raw = [=](double t) {
        cplx e = std::polar(radius, theta0 + (theta1 - theta0) * t);
        return std::pair{center + e, cplx(0.0, theta1 - theta0) * e};
    };
    Contour c(finish(impl));
    c.validate();
    return c;
}

Contour Contour::fourier(std::vector<FourierTerm> terms) {
    if (terms.empty()) throw Error(ErrorKind::domain, "fourier contour needs at least one term");
    auto impl = std::make_shared<Impl>();
    impl->kind = "fourier";
    impl->closed = true;
    impl->raw = [terms = std::move(terms)](double t) {
        cplx z{}, dz{};
        for (const auto& [k, c] : terms) {
            cplx e = std::polar(1.0, 2.0 * pi * k * t);
            z += c * e;
            dz += cplx(0.0, 2.0 * pi * k) * c * e;
        }
        return std::pair{z, dz};
    };
    Contour c(finish(impl));
    c.validate();
    return c;
}

Contour Contour::piecewise(const std::vector<Contour>& pieces, bool closed) {
    if (pieces.empty()) throw Error(ErrorKind::domain, "piecewise contour needs at least one piece");
    double scale = 0.0;
    for (const auto& p : pieces) {
        if (p.closed()) throw Error(ErrorKind::domain, "pieces of a piecewise contour must be open");
        scale = std::max(scale, p.diameter());
    }
    const double join_tol = 1e-9 * scale;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        if (std::abs(pieces[i].evaluate(1.0).z - pieces[i + 1].evaluate(0.0).z) > join_tol)
            throw Error(ErrorKind::domain, "piece " + std::to_string(i) + " does not end where piece " +
                                               std::to_string(i + 1) + " starts");
    }
    if (closed && std::abs(pieces.back().evaluate(1.0).z - pieces.front().evaluate(0.0).z) > join_tol)
        throw Error(ErrorKind::domain, "closed piecewise contour does not return to its start");

    auto impl = std::make_shared<Impl>();
    impl->kind = "piecewise";
    impl->closed = closed;
    impl->pieces = pieces;
    std::vector<double> lengths;
    for (const auto& p : pieces) lengths.push_back(p.length());
    double total = std::accumulate(lengths.begin(), lengths.end(), 0.0);
    impl->breaks.push_back(0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        acc += lengths[i];
        impl->breaks.push_back(i + 1 == pieces.size() ? 1.0 : acc / total);
    }
    for (std::size_t i = 1; i + 1 < impl->breaks.size(); ++i) impl->corners.push_back(impl->breaks[i]);
    // Nested corners of the pieces themselves.
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (double c : pieces[i].corners())
            impl->corners.push_back(impl->breaks[i] + c * (impl->breaks[i + 1] - impl->breaks[i]));
    if (closed) impl->corners.push_back(0.0);
    std::sort(impl->corners.begin(), impl->corners.end());
    impl->corners.erase(std::unique(impl->corners.begin(), impl->corners.end()), impl->corners.end());
    Contour c(finish(impl));
    c.validate();
    return c;
}

ContourPoint Contour::evaluate(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::domain, "parameter " + std::to_string(t) + " outside [0,1]");
    return impl_->eval(t);
}

cplx Contour::second_derivative(double t) const {
    constexpr double h = 1e-5;
    double lo = 0.0, hi = 1.0;
    for (auto [a, b] : smooth_intervals())
        if (t >= a && t <= b) {
            lo = a;
            hi = b;
            break;
        }
    auto d = [&](double s) {
        if (closed() && corners().empty()) s = wrap_unit(s);
        return impl_->eval(s).dz;
    };
    bool periodic = closed() && corners().empty();
    if (periodic || (t - h >= lo && t + h <= hi)) return (d(t + h) - d(t - h)) / (2.0 * h);
    if (t - h < lo) return (-3.0 * d(t) + 4.0 * d(t + h) - d(t + 2 * h)) / (2.0 * h);
    return (3.0 * d(t) - 4.0 * d(t - h) + d(t - 2 * h)) / (2.0 * h);
}

bool Contour::closed() const noexcept { return impl_->closed; }

std::span<const double> Contour::corners() const noexcept { return impl_->corners; }

bool Contour::is_corner(double t, double tol) const noexcept {
    for (double c : impl_->corners) {
        if (std::abs(t - c) <= tol) return true;
        if (closed() && c == 0.0 && std::abs(t - 1.0) <= tol) return true;
    }
    return false;
}

std::vector<std::pair<double, double>> Contour::smooth_intervals() const {
    std::vector<double> pts{0.0};
    for (double c : impl_->corners)
        if (c > 0.0 && c < 1.0) pts.push_back(c);
    pts.push_back(1.0);
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) out.emplace_back(pts[i], pts[i + 1]);
    return out;
}

double Contour::length() const {
    using boost::math::quadrature::gauss_kronrod;
    double total = 0.0;
    for (auto [a, b] : smooth_intervals()) {
        auto speed = [this](double t) { return std::abs(impl_->eval(t).dz); };
        total += gauss_kronrod<double, 61>::integrate(speed, a, b, 20, 1e-13);
    }
    return total;
}

double Contour::diameter() const noexcept { return impl_->diameter; }

double Contour::on_contour_tolerance() const noexcept { return 1e-9 * impl_->diameter; }

std::pair<double, double> Contour::nearest(cplx z) const {
    const std::size_t n = kNearestGrid;
    double best_t = 0.0, best_d = std::numeric_limits<double>::infinity();
    auto consider = [&](double t) {
        double d = std::abs(impl_->eval(t).z - z);
        if (d < best_d) {
            best_d = d;
            best_t = t;
        }
    };
    for (std::size_t j = 0; j <= n; ++j) consider(double(j) / n);
    for (double c : impl_->corners) consider(c);

    const double h = 1.0 / n;
    const bool periodic = closed();
    auto dist = [&](double t) {
        double s = periodic ? wrap_unit(t) : std::clamp(t, 0.0, 1.0);
        return std::abs(impl_->eval(s).z - z);
    };
    double lo = best_t - h, hi = best_t + h;
    if (!periodic) {
        lo = std::max(lo, 0.0);
        hi = std::min(hi, 1.0);
    }
    auto [t, d] = boost::math::tools::brent_find_minima(dist, lo, hi, 52);
    if (d < best_d) {
        best_d = d;
        best_t = periodic ? wrap_unit(t) : std::clamp(t, 0.0, 1.0);
    }
    // Brent pins a minimum only to sqrt(eps); Newton on the orthogonality
    // condition Re(conj(gamma') (gamma - z)) = 0 recovers full precision.
    if (!is_corner(best_t)) {
        double u = best_t;
        for (int it = 0; it < 4; ++it) {
            double s = periodic ? wrap_unit(u) : std::clamp(u, 0.0, 1.0);
            if (is_corner(s)) break;
            ContourPoint p = impl_->eval(s);
            cplx d2 = second_derivative(s);
            double f = (std::conj(p.dz) * (p.z - z)).real();
            double df = std::norm(p.dz) + (std::conj(d2) * (p.z - z)).real();
            if (!(df > 0.0)) break;
            u = s - f / df;
            if (std::abs(u - s) > h) break;
        }
        double s = periodic ? wrap_unit(u) : std::clamp(u, 0.0, 1.0);
        double ds = dist(s);
        if (ds < best_d) {
            best_d = ds;
            best_t = s;
        }
    }
    return {best_t, best_d};
}

double Contour::winding(cplx z) const {
    if (!closed()) throw Error(ErrorKind::unsupported, "winding number needs a closed contour");
    auto [t0, dist] = nearest(z);
    if (dist == 0.0) throw Error(ErrorKind::precision, "point lies on the contour");
    double max_speed = 0.0;
    for (const auto& p : sample(1024)) max_speed = std::max(max_speed, std::abs(p.dz));
    max_speed *= 1.25;  // sampled maximum, with margin
    // Adaptive inscribed polygon: each arc is shorter than half the distance
    // from its start to z, so it stays in a disk excluding z and the chord
    // turns by the same angle as the arc.
    double total = 0.0, t = 0.0;
    cplx prev = impl_->eval(0.0).z - z;
    std::size_t steps = 0;
    while (t < 1.0) {
        double step = std::min(1.0 / 64.0, 0.5 * std::abs(prev) / max_speed);
        if (++steps > kMaxWindingVertices || !(step > 0.0))
            throw Error(ErrorKind::precision, "point too close to the contour to resolve its winding number");
        t = std::min(1.0, t + step);
        cplx cur = impl_->eval(t >= 1.0 ? 0.0 : t).z - z;
        total += std::arg(cur / prev);
        prev = cur;
    }
    return total / (2.0 * pi);
}

Region Contour::classify(cplx z, double tol) const {
    if (!closed()) throw Error(ErrorKind::unsupported, "classify needs a closed contour");
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error(ErrorKind::domain, "point must be finite");
    if (tol < 0.0) tol = on_contour_tolerance();
    auto [t, d] = nearest(z);
    if (d < tol) return Region::on_contour(t);
    double w = winding(z);
    double n = std::round(w);
    if (std::abs(w - n) > 0.25)
        throw Error(ErrorKind::precision, "winding estimate " + std::to_string(w) + " is not near an integer");
    if (n == 1.0) return Region::interior();
    if (n == 0.0) return Region::exterior();
    throw Error(ErrorKind::domain, "winding number " + std::to_string(n) + " indicates a non-simple contour");
}

cplx Contour::normal_offset(double t, double eps, Side side) const {
    if (!(eps > 0.0)) throw Error(ErrorKind::domain, "offset distance must be positive");
    if (is_corner(t)) throw Error(ErrorKind::corner, "no normal at corner parameter " + std::to_string(t));
    ContourPoint p = evaluate(t);
    cplx n = cplx(0.0, 1.0) * p.dz / std::abs(p.dz);
    double s = side == Side::interior ? 1.0 : -1.0;
    return p.z + s * eps * n;
}

double Contour::local_feature_size(double t) const {
    ContourPoint p = evaluate(t);
    double lfs = 0.5 * diameter();
    if (!is_corner(t)) {
        cplx d2 = second_derivative(t);
        double speed = std::abs(p.dz);
        double kappa = std::abs((std::conj(p.dz) * d2).imag()) / (speed * speed * speed);
        if (kappa > 0.0) lfs = std::min(lfs, 1.0 / kappa);
    }
    for (double c : impl_->corners)
        if (!is_corner(t) || std::abs(c - t) > kCornerTol) lfs = std::min(lfs, std::abs(impl_->eval(c).z - p.z));
    if (!closed()) {
        lfs = std::min(lfs, std::abs(impl_->eval(0.0).z - p.z));
        lfs = std::min(lfs, std::abs(impl_->eval(1.0).z - p.z));
    }
    return lfs;
}

double Contour::canonical_parameter(double user_t) const noexcept {
    return impl_->reversed ? 1.0 - user_t : user_t;
}

std::pair<std::size_t, double> Contour::locate(double t) const {
    if (impl_->pieces.empty()) return {0, canonical_parameter(t)};
    double u = canonical_parameter(t);
    std::size_t i = impl_->piece_index(u, impl_->reversed);
    double a = impl_->breaks[i], b = impl_->breaks[i + 1];
    return {i, std::clamp((u - a) / (b - a), 0.0, 1.0)};
}

std::size_t Contour::piece_count() const noexcept {
    return impl_->pieces.empty() ? 1 : impl_->pieces.size();
}

std::vector<ContourPoint> Contour::sample(std::size_t n) const {
    std::vector<ContourPoint> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        double t = closed() ? double(j) / n : (n == 1 ? 0.0 : double(j) / (n - 1));
        out.push_back(impl_->eval(t));
    }
    return out;
}

cplx Contour::centroid() const {
    auto pts = sample(256);
    cplx acc{};
    for (const auto& p : pts) acc += p.z;
    return acc / double(pts.size());
}

double Contour::radius_about_centroid() const {
    cplx c = centroid();
    double r = 0.0;
    for (const auto& p : sample(1024)) r = std::max(r, std::abs(p.z - c));
    return r;
}

const std::string& Contour::kind() const noexcept { return impl_->kind; }

void Contour::validate(std::size_t n) const {
    const double scale = std::max(diameter(), std::numeric_limits<double>::min());
    if (diameter() == 0.0) throw Error(ErrorKind::domain, "contour degenerates to a point");
    if (closed() && std::abs(impl_->eval(0.0).z - impl_->eval(1.0).z) > 1e-12 * scale)
        throw Error(ErrorKind::domain, "closed contour does not return to its start");
    auto pts = sample(n);
    for (const auto& p : pts)
        if (!is_corner(p.t) && !(std::abs(p.dz) > 1e-14 * scale))
            throw Error(ErrorKind::domain, "tangent vanishes at t=" + std::to_string(p.t));
    const double tol = 1e-9 * scale;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 2; j < pts.size(); ++j) {
            if (closed() && i == 0 && j + 1 == pts.size()) continue;
            if (std::abs(pts[i].z - pts[j].z) <= tol)
                throw Error(ErrorKind::domain, "contour is not simple: samples t=" + std::to_string(pts[i].t) +
                                                   " and t=" + std::to_string(pts[j].t) + " coincide");
        }
}

}  // namespace cauchy_jump
