#include "cauchy_jump/faber.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cauchy_jump/contour.hpp"
#include "cauchy_jump/error.hpp"

namespace cauchy_jump {

namespace {

using boost::multiprecision::cpp_int;

double to_double(const Rational& q) { return q.convert_to<double>(); }

// (z + sqrt(z^2 - c^2)) / d at infinity, down to exponent 1 - depth. Uses
// sqrt(1 - x) = sum_k -C(2k, k) / ((2k - 1) 4^k) x^k.
LaurentPoly joukowski_laurent(const Rational& c2, const Rational& d, int depth) {
    std::map<int, Rational> terms;
    terms[1] = Rational(2) / d;
    Rational c2k(1);
    cpp_int binom(1);  // C(2k, k)
    cpp_int four(1);
    for (int k = 1; 1 - 2 * k >= 1 - depth; ++k) {
        binom = binom * (2 * k) * (2 * k - 1) / (k * k);
        four *= 4;
        c2k *= c2;
        Rational beta = -Rational(binom, cpp_int(2 * k - 1) * four);
        if (c2k != 0) terms[1 - 2 * k] = beta * c2k / d;
    }
    return LaurentPoly::from_terms(terms, depth, Expansion::at_infinity);
}

// Branch of sqrt(z^2 - c^2) that behaves like z at infinity, cut on [-c, c].
std::complex<double> outer_sqrt(std::complex<double> z, double c) {
    return std::sqrt(z - c) * std::sqrt(z + c);
}

std::string fmt(const Rational& q) { return q.str(); }

std::vector<std::complex<double>> numeric_coefficients(const std::vector<Coefficient>& p) {
    std::vector<std::complex<double>> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c.numeric());
    return out;
}

std::complex<double> horner(const std::vector<std::complex<double>>& p, std::complex<double> z) {
    std::complex<double> acc{};
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
    return acc;
}

std::complex<double> unit_root(std::size_t j, std::size_t m, double shift = 0.0) {
    return std::polar(1.0, 2.0 * pi * (double(j) + shift) / double(m));
}

}  // namespace

ExteriorMap ExteriorMap::disk(const Rational& radius) {
    if (radius <= 0) throw Error(ErrorKind::domain, "disk radius must be positive");
    ExteriorMap g;
    g.kind_ = "disk";
    g.description_ = "disk:" + fmt(radius);
    g.annulus_ = {0.0, std::numeric_limits<double>::infinity()};
    Rational inv = Rational(1) / radius;
    g.laurent_ = [inv](int depth) {
        return LaurentPoly::from_terms(std::map<int, Rational>{{1, inv}}, std::max(depth, 0));
    };
    double r = to_double(radius);
    g.forward_ = [r](std::complex<double> z) { return z / r; };
    g.inverse_ = [r](std::complex<double> w) { return r * w; };
    return g;
}

ExteriorMap ExteriorMap::ellipse(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw Error(ErrorKind::domain, "ellipse semi-axes must be positive");
    if (a < b) throw Error(ErrorKind::domain, "ellipse map expects a >= b (major axis along the real line)");
    if (a == b) {
        ExteriorMap g = disk(a);
        g.description_ = "ellipse:" + fmt(a) + "," + fmt(b);
        return g;
    }
    ExteriorMap g;
    g.kind_ = "ellipse";
    g.description_ = "ellipse:" + fmt(a) + "," + fmt(b);
    Rational c2 = a * a - b * b;
    Rational d = a + b;
    double c = std::sqrt(to_double(c2));
    g.annulus_ = {c, std::numeric_limits<double>::infinity()};
    g.laurent_ = [c2, d](int depth) { return joukowski_laurent(c2, d, std::max(depth, 0)); };
    double dd = to_double(d), half_sum = to_double(d) / 2.0, half_diff = to_double(a - b) / 2.0;
    g.forward_ = [c, dd](std::complex<double> z) { return (z + outer_sqrt(z, c)) / dd; };
    g.inverse_ = [half_sum, half_diff](std::complex<double> w) { return half_sum * w + half_diff / w; };
    return g;
}

ExteriorMap ExteriorMap::segment(const Rational& half_length) {
    if (half_length <= 0) throw Error(ErrorKind::domain, "segment half-length must be positive");
    ExteriorMap g;
    g.kind_ = "segment";
    g.description_ = "segment:" + fmt(half_length);
    Rational s = half_length;
    double sd = to_double(s);
    g.annulus_ = {sd, std::numeric_limits<double>::infinity()};
    g.laurent_ = [s](int depth) { return joukowski_laurent(s * s, s, std::max(depth, 0)); };
    g.forward_ = [sd](std::complex<double> z) { return (z + outer_sqrt(z, sd)) / sd; };
    g.inverse_ = [sd](std::complex<double> w) { return 0.5 * sd * (w + 1.0 / w); };
    return g;
}

ExteriorMap ExteriorMap::from_laurent(LaurentPoly laurent, Annulus annulus) {
    if (laurent.expansion() != Expansion::at_infinity)
        throw Error(ErrorKind::degenerate_map, "exterior map data must be an expansion at infinity");
    if (laurent.is_zero() || laurent.order() < 1 || !laurent.tracks(1) || laurent.coefficient(1).is_zero())
        throw Error(ErrorKind::degenerate_map, "exterior map needs a nonzero z coefficient c1");
    if (laurent.order() > 1)
        throw Error(ErrorKind::degenerate_map, "exterior map has a pole of order " + std::to_string(laurent.order()) +
                                                   " at infinity; expected a simple pole");
    if (!(annulus.inner >= 0.0) || !(annulus.outer > annulus.inner))
        throw Error(ErrorKind::annulus, "analyticity annulus must satisfy 0 <= inner < outer");
    ExteriorMap g;
    g.kind_ = "laurent";
    g.description_ = "laurent:" + laurent.to_text();
    g.annulus_ = annulus;
    g.laurent_ = [laurent](int) { return laurent; };

    std::vector<std::pair<int, std::complex<double>>> terms;
    for (const auto& [e, c] : laurent.terms()) terms.emplace_back(e, c.numeric());
    auto eval = [terms](std::complex<double> z) {
        std::complex<double> v{};
        for (const auto& [e, c] : terms) v += c * std::pow(z, e);
        return v;
    };
    auto deriv = [terms](std::complex<double> z) {
        std::complex<double> v{};
        for (const auto& [e, c] : terms)
            if (e != 0) v += c * double(e) * std::pow(z, e - 1);
        return v;
    };
    std::complex<double> c1 = laurent.coefficient(1).numeric();
    std::complex<double> c0 = laurent.coefficient(0).numeric();
    g.forward_ = eval;
    g.inverse_ = [eval, deriv, c1, c0](std::complex<double> w) {
        std::complex<double> z = (w - c0) / c1;
        for (int it = 0; it < 100; ++it) {
            std::complex<double> step = (eval(z) - w) / deriv(z);
            z -= step;
            if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) return z;
        }
        throw Error(ErrorKind::convergence, "Newton iteration for the inverse exterior map did not converge");
    };
    return g;
}

ExteriorMap ExteriorMap::parse(std::string_view spec) {
    std::string s(spec);
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::parse, "map spec '" + s + "' should look like disk:R, segment:S or ellipse:A,B");
    std::string name = s.substr(0, colon), args = s.substr(colon + 1);
    if (name == "disk") return disk(parse_rational(args));
    if (name == "segment") return segment(parse_rational(args));
    if (name == "ellipse") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::parse, "ellipse map needs two semi-axes: ellipse:A,B");
        return ellipse(parse_rational(args.substr(0, comma)), parse_rational(args.substr(comma + 1)));
    }
    throw Error(ErrorKind::parse, "unknown map kind '" + name + "'");
}

LaurentPoly ExteriorMap::laurent(int depth) const { return laurent_(depth); }

std::complex<double> ExteriorMap::leading() const { return laurent_(0).coefficient(1).numeric(); }

std::complex<double> ExteriorMap::forward(std::complex<double> z) const { return forward_(z); }

std::complex<double> ExteriorMap::inverse(std::complex<double> w) const { return inverse_(w); }

bool ExteriorMap::contains(std::complex<double> z) const {
    if (kind_ == "laurent" && std::abs(z) <= annulus_.inner) return true;
    return std::abs(forward_(z)) <= 1.0 + 1e-9;
}

double ExteriorMap::domain_size() const {
    double m = 0.0;
    for (std::size_t j = 0; j < 256; ++j) m = std::max(m, std::abs(inverse_(unit_root(j, 256))));
    return m;
}

double ExteriorMap::default_radius() const {
    if (annulus_.finite()) return 0.5 * (annulus_.inner + annulus_.outer);
    return 1.5 * std::max(domain_size(), annulus_.inner);
}

std::vector<std::complex<double>> ExteriorMap::boundary_probes(std::size_t n, double scale) const {
    std::vector<std::complex<double>> out;
    for (std::size_t j = 0; j < n; ++j) out.push_back(scale * inverse_(unit_root(j, n, 0.5)));
    return out;
}

std::string to_string(FaberSource source) { return source == FaberSource::formal ? "formal" : "quadrature"; }

std::complex<double> FaberBasis::evaluate(std::size_t n, std::complex<double> z) const {
    return horner(numeric_coefficients(polynomials.at(n)), z);
}

FaberBasis faber_polynomials(const ExteriorMap& g, int count) {
    if (count < 0) throw Error(ErrorKind::domain, "number of Faber polynomials must be nonnegative");
    FaberBasis basis;
    basis.source = FaberSource::formal;
    for (int n = 0; n <= count; ++n) {
        LaurentPoly gn = power(g.laurent(n), n);
        auto p = polynomial_part(gn);
        if (static_cast<int>(p.size()) != n + 1)
            throw Error(ErrorKind::degenerate_map, "Psi_" + std::to_string(n) + " does not have degree " +
                                                       std::to_string(n));
        basis.polynomials.push_back(std::move(p));
    }
    return basis;
}

namespace {

void check_radius(const ExteriorMap& g, double radius) {
    if (!g.annulus().contains(radius)) {
        std::ostringstream msg;
        msg << "extraction radius " << radius << " lies outside the analyticity annulus (" << g.annulus().inner
            << ", " << g.annulus().outer << ") of " << g.description();
        throw Error(ErrorKind::annulus, msg.str());
    }
}

}  // namespace

FaberBasis faber_polynomials_quadrature(const ExteriorMap& g, double radius, int count, std::size_t nodes) {
    if (count < 0) throw Error(ErrorKind::domain, "number of Faber polynomials must be nonnegative");
    check_radius(g, radius);
    const std::size_t m = std::max<std::size_t>(nodes, 4 * static_cast<std::size_t>(count + 1));
    std::vector<std::complex<double>> zeta(m), gz(m);
    for (std::size_t j = 0; j < m; ++j) {
        zeta[j] = radius * unit_root(j, m);
        gz[j] = g.forward(zeta[j]);
    }
    FaberBasis basis;
    basis.source = FaberSource::quadrature;
    std::vector<std::complex<double>> gn(m, 1.0);
    for (int n = 0; n <= count; ++n) {
        std::vector<Coefficient> p;
        for (int k = 0; k <= n; ++k) {
            std::complex<double> acc{};
            for (std::size_t j = 0; j < m; ++j) acc += gn[j] * std::pow(zeta[j], -k);
            p.push_back(Coefficient::complex(acc / double(m)));
        }
        basis.polynomials.push_back(std::move(p));
        for (std::size_t j = 0; j < m; ++j) gn[j] *= gz[j];
    }
    return basis;
}

VanishingReport verify_vanishing(const ExteriorMap& g, int n, std::span<const std::complex<double>> probes,
                                 std::optional<double> radius, std::size_t nodes) {
    if (n >= 0) throw Error(ErrorKind::domain, "the vanishing law concerns negative powers only");
    VanishingReport report;
    report.n = n;
    report.radius = radius ? *radius : g.default_radius();
    check_radius(g, report.radius);
    if (probes.empty()) report.probes = g.boundary_probes(16, 0.25);
    else report.probes.assign(probes.begin(), probes.end());
    for (auto z : report.probes)
        if (!(std::abs(z) < report.radius)) {
            std::ostringstream msg;
            msg << "probe " << z << " is not inside the extraction circle of radius " << report.radius;
            throw Error(ErrorKind::probe_region, msg.str());
        }
    std::vector<std::complex<double>> zeta(nodes), gn(nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
        zeta[j] = report.radius * unit_root(j, nodes);
        gn[j] = std::pow(g.forward(zeta[j]), n);
    }
    for (auto z : report.probes) {
        // (1/2 pi i) dzeta = zeta dtheta / (2 pi), trapezoid weights 1/nodes.
        std::complex<double> acc{};
        for (std::size_t j = 0; j < nodes; ++j) acc += gn[j] * zeta[j] / (zeta[j] - z);
        double mod = std::abs(acc / double(nodes));
        report.moduli.push_back(mod);
        report.max_modulus = std::max(report.max_modulus, mod);
    }
    return report;
}

FaberSeriesResult faber_series(const std::function<std::complex<double>(std::complex<double>)>& f,
                               const ExteriorMap& g, int count, std::span<const std::complex<double>> probes,
                               std::size_t nodes) {
    if (count < 0) throw Error(ErrorKind::domain, "series length must be nonnegative");
    FaberSeriesResult result;
    if (probes.empty()) result.probes = g.boundary_probes(64);
    else result.probes.assign(probes.begin(), probes.end());
    for (auto z : result.probes)
        if (!g.contains(z)) {
            std::ostringstream msg;
            msg << "probe " << z << " lies outside the closed domain of " << g.description();
            throw Error(ErrorKind::probe_region, msg.str());
        }

    const std::size_t m = std::max<std::size_t>(nodes, 4 * static_cast<std::size_t>(count + 1));
    std::vector<std::complex<double>> w(m), fw(m);
    for (std::size_t j = 0; j < m; ++j) {
        w[j] = unit_root(j, m);
        fw[j] = f(g.inverse(w[j]));
        if (!std::isfinite(fw[j].real()) || !std::isfinite(fw[j].imag()))
            throw Error(ErrorKind::singularity, "f is not finite on the boundary of the domain");
    }
    for (int n = 0; n <= count; ++n) {
        std::complex<double> acc{};
        for (std::size_t j = 0; j < m; ++j) acc += fw[j] * std::pow(w[j], -n);
        result.coefficients.push_back(acc / double(m));
    }

    FaberBasis basis = faber_polynomials(g, count);
    std::vector<std::vector<std::complex<double>>> psi;
    for (const auto& p : basis.polynomials) psi.push_back(numeric_coefficients(p));
    for (auto z : result.probes) {
        std::complex<double> sum{};
        for (int n = 0; n <= count; ++n) sum += result.coefficients[static_cast<std::size_t>(n)] * horner(psi[n], z);
        double err = std::abs(sum - f(z));
        result.errors.push_back(err);
        result.max_error = std::max(result.max_error, err);
    }
    return result;
}

}  // namespace cauchy_jump
