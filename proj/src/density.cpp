#include "cauchy_jump/density.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "cauchy_jump/error.hpp"

namespace cauchy_jump {

Density::Density(Pullback pullback, std::string label) : pullback_(std::move(pullback)), label_(std::move(label)) {}

Density Density::constant(cplx value) {
    Density d([value](double) { return value; }, "constant");
    d.regularity_ = Regularity::holder;
    d.holder_ = HolderBound{1.0, std::numeric_limits<double>::min()};
    return d;
}

Density Density::from_function(const Contour& contour, std::function<cplx(cplx)> phi, std::string label) {
    return Density([contour, phi = std::move(phi)](double t) { return phi(contour.evaluate(t).z); }, std::move(label));
}

Density Density::from_expression(const Contour& contour, const Expression& expr) {
    return from_function(contour, [expr](cplx z) { return expr(z); }, expr.text());
}

Density Density::preset(const Contour& contour, std::string_view name) {
    if (name == "one") return constant(1.0);
    if (name == "zero") return constant(0.0);
    if (name == "re") return from_function(contour, [](cplx z) { return cplx(z.real()); }, "re");
    if (name == "im") return from_function(contour, [](cplx z) { return cplx(z.imag()); }, "im");
    if (name == "conj") return from_function(contour, [](cplx z) { return std::conj(z); }, "conj");
    if (name == "inv") return from_function(contour, [](cplx z) { return 1.0 / z; }, "inv");
    if (name == "sq") return from_function(contour, [](cplx z) { return z * z; }, "sq");
    if (name == "sqrt") return from_function(contour, [](cplx z) { return std::sqrt(z); }, "sqrt");
    if (name == "inv_ln") {
        Density d = from_function(
            contour, [](cplx z) { return z == cplx(0.0) ? cplx(0.0) : 1.0 / std::log(z); }, "inv_ln");
        d.regularity_ = Regularity::non_holder;
        return d;
    }
    if (name == "sqrt_pullback") {
        Density d([](double t) { return cplx(std::sqrt(t * (1.0 - t))); }, "sqrt_pullback");
        return d.with_holder({0.5, 1.0});
    }
    Density d = from_expression(contour, Expression::parse(name));
    return d;
}

Density Density::tabulated(const Contour& contour, std::vector<double> t, std::vector<cplx> values) {
    if (t.size() != values.size()) throw Error(ErrorKind::domain, "tabulated density: length mismatch");
    if (t.size() < 2) throw Error(ErrorKind::domain, "tabulated density needs at least two samples");
    std::vector<std::size_t> order(t.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return t[a] < t[b]; });
    std::vector<double> ts;
    std::vector<cplx> vs;
    for (auto i : order) {
        if (!(t[i] >= 0.0 && t[i] <= 1.0)) throw Error(ErrorKind::domain, "tabulated parameter outside [0,1]");
        if (!ts.empty() && t[i] == ts.back()) throw Error(ErrorKind::domain, "duplicate tabulated parameter");
        ts.push_back(t[i]);
        vs.push_back(values[i]);
    }
    return Density(
        [contour, ts = std::move(ts), vs = std::move(vs)](double canonical) {
            double u = contour.canonical_parameter(canonical);
            if (u <= ts.front()) return vs.front();
            if (u >= ts.back()) return vs.back();
            auto it = std::upper_bound(ts.begin(), ts.end(), u);
            std::size_t j = static_cast<std::size_t>(it - ts.begin());
            double w = (u - ts[j - 1]) / (ts[j] - ts[j - 1]);
            return (1.0 - w) * vs[j - 1] + w * vs[j];
        },
        "tabulated");
}

Density Density::from_csv(const Contour& contour, std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorKind::parse, "density CSV is empty");
    std::vector<double> t;
    std::vector<cplx> v;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> cells;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                cells.push_back(std::stod(cell, &used));
            } catch (const std::exception&) {
                throw Error(ErrorKind::parse, "density CSV row " + std::to_string(row) + ": bad number '" + cell + "'");
            }
        }
        if (cells.size() != 3)
            throw Error(ErrorKind::parse, "density CSV row " + std::to_string(row) + ": expected columns t,re,im");
        t.push_back(cells[0]);
        v.emplace_back(cells[1], cells[2]);
    }
    return tabulated(contour, std::move(t), std::move(v));
}

Density Density::with_holder(HolderBound bound) const {
    if (!(bound.index > 0.0 && bound.index <= 1.0)) throw Error(ErrorKind::domain, "Hölder index must lie in (0,1]");
    if (!(bound.constant > 0.0)) throw Error(ErrorKind::domain, "Hölder constant must be positive");
    Density d = *this;
    d.regularity_ = Regularity::holder;
    d.holder_ = bound;
    return d;
}

Density Density::declared_non_holder() const {
    Density d = *this;
    d.regularity_ = Regularity::non_holder;
    d.holder_.reset();
    return d;
}

double Density::data_scale(const Contour& contour, std::size_t n) const {
    double s = 0.0;
    for (const auto& p : contour.sample(n)) s = std::max(s, std::abs(pullback_(p.t)));
    return s > 0.0 ? s : 1.0;
}

void Density::check_closure(const Contour& contour) const {
    // A jump at a corner is left to the corner-aware callers.
    if (!contour.closed() || contour.is_corner(0.0)) return;
    double gap = std::abs(pullback_(0.0) - pullback_(1.0));
    if (gap > 1e-10 * data_scale(contour))
        throw Error(ErrorKind::domain, "density '" + label_ + "' is discontinuous across t=0 on a closed contour");
}

Density operator+(const Density& a, const Density& b) {
    Density d([pa = a.pullback_, pb = b.pullback_](double t) { return pa(t) + pb(t); },
              "(" + a.label_ + ")+(" + b.label_ + ")");
    // The sum's Hölder constant depends on the contour length, so declared
    // bounds are not carried over.
    return d;
}

Density operator*(cplx s, const Density& d) {
    Density out([s, p = d.pullback_](double t) { return s * p(t); }, d.label_);
    out.regularity_ = d.regularity_;
    if (d.holder_ && s != cplx(0.0))
        out.holder_ = HolderBound{d.holder_->index, std::abs(s) * d.holder_->constant};
    return out;
}

namespace {

std::vector<double> parameter_grid(const Contour& contour, std::size_t n) {
    std::vector<double> t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = contour.closed() ? double(j) / n : double(j) / (n - 1);
    return t;
}

}  // namespace

HolderReport check_holder(const Density& density, const Contour& contour, double lambda, double constant,
                          std::span<const double> params, double slack) {
    if (!(lambda > 0.0 && lambda <= 1.0)) throw Error(ErrorKind::domain, "Hölder index must lie in (0,1]");
    if (!(constant > 0.0)) throw Error(ErrorKind::domain, "Hölder constant must be positive");
    struct Sample {
        double t;
        cplx z, v;
    };
    std::vector<Sample> s;
    s.reserve(params.size());
    for (double t : params) s.push_back({t, contour.evaluate(t).z, density(t)});

    HolderReport r;
    r.estimated_index = lambda;
    bool have_pair = false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            double d = std::abs(s[i].z - s[j].z);
            if (d == 0.0) continue;
            double ratio = std::abs(s[i].v - s[j].v) / std::pow(d, lambda);
            std::pair<double, double> pair = std::minmax(s[i].t, s[j].t);
            if (!have_pair || ratio > r.worst_ratio || (ratio == r.worst_ratio && pair < r.worst_pair)) {
                r.worst_ratio = ratio;
                r.worst_pair = pair;
                have_pair = true;
            }
        }
    r.pass = r.worst_ratio <= constant * (1.0 + slack);
    r.estimated_constant = r.worst_ratio;
    return r;
}

HolderReport check_holder(const Density& density, const Contour& contour, double lambda, double constant,
                          std::size_t grid_size, double slack) {
    if (grid_size < 16) throw Error(ErrorKind::domain, "Hölder grid needs at least 16 points");
    auto t = parameter_grid(contour, grid_size);
    return check_holder(density, contour, lambda, constant, t, slack);
}

namespace {

struct Fit {
    double slope, intercept;
};

Fit least_squares(std::span<const std::pair<double, double>> pts) {
    double n = double(pts.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double den = n * sxx - sx * sx;
    if (den == 0.0) return {0.0, sy / n};
    double slope = (n * sxy - sx * sy) / den;
    return {slope, (sy - slope * sx) / n};
}

constexpr double kNonHolderSlope = 0.05;
constexpr int kGradingLevels = 48;
constexpr std::size_t kLocalWindow = 6;

}  // namespace

HolderReport estimate_holder(const Density& density, const Contour& contour, std::size_t grid_size) {
    if (grid_size < 64) throw Error(ErrorKind::domain, "Hölder estimation needs at least 64 grid points");
    std::vector<double> t = parameter_grid(contour, grid_size);

    // Grade the grid geometrically toward both ends of the interval with the
    // largest jump, where the modulus of continuity is decided.
    const double h = contour.closed() ? 1.0 / grid_size : 1.0 / (grid_size - 1);
    std::size_t worst = 0;
    double worst_jump = -1.0;
    std::size_t intervals = contour.closed() ? t.size() : t.size() - 1;
    for (std::size_t j = 0; j < intervals; ++j) {
        double a = t[j], b = j + 1 < t.size() ? t[j + 1] : 1.0;
        double jump = std::abs(density(a) - density(b));
        if (jump > worst_jump) {
            worst_jump = jump;
            worst = j;
        }
    }
    double ends[2] = {t[worst], worst + 1 < t.size() ? t[worst + 1] : 1.0};
    for (double e : ends)
        for (int k = 1; k <= kGradingLevels; ++k)
            for (double sign : {-1.0, 1.0}) {
                double s = e + sign * h * std::ldexp(1.0, -k);
                if (contour.closed()) s -= std::floor(s);
                if (s >= 0.0 && s <= 1.0) t.push_back(s);
            }
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());

    struct Sample {
        double t;
        cplx z, v;
    };
    std::vector<Sample> s;
    for (double p : t) s.push_back({p, contour.evaluate(p).z, density(p)});

    // Modulus of continuity per octave of separation: the largest difference
    // and the separation where it occurs.
    struct Bucket {
        double dist = 0.0, diff = 0.0;
        std::pair<double, double> pair;
    };
    std::map<int, Bucket> buckets;
    std::vector<double> all_dist;
    double max_diff = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            double d = std::abs(s[i].z - s[j].z);
            if (d == 0.0) continue;
            double diff = std::abs(s[i].v - s[j].v);
            all_dist.push_back(d);
            max_diff = std::max(max_diff, diff);
            if (diff == 0.0) continue;
            auto& b = buckets[static_cast<int>(std::floor(std::log2(d)))];
            if (diff > b.diff) b = {d, diff, std::minmax(s[i].t, s[j].t)};
        }

    HolderReport r;
    if (max_diff == 0.0 || buckets.empty()) {
        r.pass = true;
        r.estimated_index = 1.0;
        r.estimated_constant = std::numeric_limits<double>::min();
        return r;
    }
    std::nth_element(all_dist.begin(), all_dist.begin() + all_dist.size() / 2, all_dist.end());
    const double median = all_dist[all_dist.size() / 2];

    std::vector<std::pair<double, double>> pts;  // (log d, log omega), ascending d
    std::vector<const Bucket*> used;
    for (const auto& [key, b] : buckets)
        if (b.dist < median) {
            pts.emplace_back(std::log(b.dist), std::log(b.diff));
            used.push_back(&b);
        }
    if (pts.size() < 2) {
        for (const auto& [key, b] : buckets) {
            pts.emplace_back(std::log(b.dist), std::log(b.diff));
            used.push_back(&b);
        }
    }
    Fit fit = least_squares(pts);
    double index = std::clamp(fit.slope, 1e-6, 1.0);
    double max_resid = -std::numeric_limits<double>::infinity();
    for (auto [x, y] : pts) max_resid = std::max(max_resid, y - (fit.intercept + index * x));
    r.estimated_index = index;
    r.estimated_constant = std::exp(fit.intercept + max_resid);

    std::size_t w = std::min(kLocalWindow, pts.size());
    Fit local = w >= 2 ? least_squares(std::span(pts).first(w)) : fit;
    r.pass = local.slope >= kNonHolderSlope;

    r.worst_ratio = 0.0;
    for (const Bucket* b : used) {
        double ratio = b->diff / std::pow(b->dist, index);
        if (ratio > r.worst_ratio) {
            r.worst_ratio = ratio;
            r.worst_pair = b->pair;
        }
    }
    return r;
}

}  // namespace cauchy_jump
