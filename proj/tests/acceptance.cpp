// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cauchy_jump/cauchy.hpp"
#include "cauchy_jump/density.hpp"
#include "cauchy_jump/faber.hpp"
#include "cauchy_jump/jump.hpp"
#include "cauchy_jump/quadrature.hpp"

using namespace cauchy_jump;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

const Contour& circle() {
    static const Contour c = Contour::circle(0.0, 1.0);
    return c;
}

Outcome pv_unit_density() {
    double worst = 0.0;
    for (int j = 0; j < 16; ++j) {
        double t = j / 16.0;
        worst = std::max(worst, std::abs(pv_cauchy(circle(), Density::constant(1.0), t).value - cplx(0.0, pi)));
        worst = std::max(worst, std::abs(pv_unit(circle(), t).value - cplx(0.0, pi)));
    }
    return {worst <= 1e-12, fmt("max |PV - i pi| = %.2e", worst)};
}

Outcome step_function() {
    CauchyIntegral ci(circle(), Density::constant(1.0));
    double e = std::max({std::abs(ci.eval(0.0) - 1.0), std::abs(ci.eval(2.0)), std::abs(ci.eval(1.0) - 0.5)});
    return {e <= 1e-10, fmt("max deviation from 1, 0, 1/2 = %.2e", e)};
}

Outcome jump_identity() {
    auto ellipse = Contour::ellipse(0.0, 2.0, 1.0);
    double worst = 0.0;
    for (const Contour* c : std::initializer_list<const Contour*>{&circle(), &ellipse})
        for (auto name : {"one", "re", "im", "sq", "inv", "sqrt_pullback"}) {
            Density d = Density::preset(*c, name);
            CauchyIntegral ci(*c, d);
            for (int j = 0; j < 32; ++j) {
                double t = j / 32.0;
                auto b = ci.boundary_values(t);
                worst = std::max(worst, std::abs(b.plus - b.minus - d(t)));
            }
        }
    return {worst < 1e-8, fmt("max |plus - minus - phi| = %.2e over 384 points", worst)};
}

Outcome sokhotski() {
    CauchyIntegral ci(circle(), Density::preset(circle(), "re"));
    double worst = 0.0;
    for (double t : {0.0, 0.25, 0.125}) {
        auto b = ci.boundary_values(t);
        worst = std::max(worst, std::abs(ci.limit_from_side(t, Side::interior).value - b.plus));
        worst = std::max(worst, std::abs(ci.limit_from_side(t, Side::exterior).value - b.minus));
    }
    return {worst <= 1e-6, fmt("max side-limit gap = %.2e", worst)};
}

Outcome cif_two() {
    AnalyticFunction f{Expression::parse("1/z"), cplx(0.0)};
    std::vector<cplx> probes;
    for (int j = 0; j < 8; ++j) probes.push_back(std::polar(0.3 + 0.08 * j, 2.0 * pi * j / 8.0));
    for (int j = 0; j < 8; ++j) probes.push_back(std::polar(1.5 + 0.5 * j, 2.0 * pi * (j + 0.5) / 8.0));
    auto r = verify_cif(circle(), f, CifKind::exterior, probes);
    double worst = 0.0;
    std::size_t inside = 0, outside = 0;
    for (const auto& e : r.entries) {
        // Oracle: 0 inside, -1/z outside.
        bool in = std::abs(e.probe) < 1.0;
        (in ? inside : outside)++;
        worst = std::max(worst, std::abs(e.value - (in ? cplx(0.0) : -1.0 / e.probe)));
    }
    bool ok = worst <= 1e-9 && inside == 8 && outside == 8;
    return {ok, fmt("max deviation = %.2e at 16 probes", worst)};
}

Outcome bvp() {
    std::vector<cplx> two{2.0};
    auto inv = solve_holomorphic_bvp(circle(), Density::preset(circle(), "inv"), two);
    double wit = inv.witness ? inv.witness->modulus : -1.0;
    auto sq = solve_holomorphic_bvp(circle(), Density::preset(circle(), "sq"), default_exterior_probes(circle()));
    bool ok = !inv.solvable && inv.witness && std::abs(inv.witness->probe - 2.0) <= 1e-12 &&
              std::abs(wit - 0.5) <= 1e-9 && sq.solvable && sq.boundary_residual <= 1e-8;
    return {ok, fmt("|Phi-(2)| = %.12f; tau^2 residual = %.2e", wit, sq.boundary_residual)};
}

Outcome series() {
    CauchyIntegral ci(circle(), Density::preset(circle(), "re"));
    auto a = ci.series_at_infinity(16);
    double worst = 0.0;
    for (int j = 0; j < 16; ++j) {
        cplx z = std::polar(8.0, 2.0 * pi * j / 16.0);
        worst = std::max(worst, std::abs(evaluate_series_at_infinity(a, z) - ci.eval(z)));
        // Residue oracle Phi-(z) = -1/(2z).
        worst = std::max(worst, std::abs(evaluate_series_at_infinity(a, z) + 0.5 / z));
    }
    double a1 = std::abs(a[0] + 0.5);
    return {a1 <= 1e-10 && worst <= 1e-8, fmt("|a1 + 1/2| = %.2e; reconstruction error = %.2e", a1, worst)};
}

Outcome faber_exact() {
    bool ok = true;
    auto disk = faber_polynomials(ExteriorMap::disk(2), 8);
    for (int n = 0; n <= 8; ++n) {
        const auto& p = disk.polynomials[n];
        ok = ok && p.size() == std::size_t(n + 1);
        for (int k = 0; k <= n && ok; ++k)
            ok = p[k].is_exact && p[k].exact == (k == n ? Rational(1, 1 << n) : Rational(0));
    }
    auto seg = faber_polynomials(ExteriorMap::segment(2), 2).polynomials[2];
    ok = ok && seg.size() == 3 && seg[0].exact == -2 && seg[1].exact == 0 && seg[2].exact == 1;
    double worst = 0.0;
    for (const auto& g : {ExteriorMap::disk(2), ExteriorMap::segment(2)}) {
        auto formal = faber_polynomials(g, 8);
        auto quad = faber_polynomials_quadrature(g, 3.0, 8);
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= n; ++k)
                worst = std::max(worst, std::abs(formal.polynomials[n][k].numeric() - quad.polynomials[n][k].numeric()));
    }
    return {ok && worst <= 1e-8, std::string("exact identities ") + (ok ? "hold" : "broken") + fmt("; route gap = %.2e", worst)};
}

Outcome vanishing() {
    double worst = 0.0;
    for (const auto& g : {ExteriorMap::disk(2), ExteriorMap::segment(2)}) {
        std::vector<cplx> probes;
        for (int j = 0; j < 16; ++j) probes.push_back(0.5 * g.inverse(std::polar(1.0, 2.0 * pi * (j + 0.25) / 16.0)));
        for (int n : {-1, -2, -3}) worst = std::max(worst, verify_vanishing(g, n, probes).max_modulus);
    }
    return {worst <= 1e-8, fmt("max |L+(g^n)| = %.2e", worst)};
}

Outcome faber_series_convergence() {
    auto g = ExteriorMap::segment(2);
    auto f = [](cplx z) { return 1.0 / (z - 3.0); };
    // Independent check: reconstruct on 64 points of the segment and compare with f.
    std::vector<cplx> probes;
    for (int j = 0; j < 64; ++j) probes.push_back(2.0 * std::cos(pi * (j + 0.5) / 64.0));
    auto basis = faber_polynomials(g, 30);
    auto max_error = [&](int n) {
        auto a = faber_series(f, g, n, probes).coefficients;
        double e = 0.0;
        for (cplx z : probes) {
            cplx s{};
            for (int k = 0; k <= n; ++k) s += a[k] * basis.evaluate(k, z);
            e = std::max(e, std::abs(s - f(z)));
        }
        return e;
    };
    bool monotone = true;
    double prev = max_error(10), at30 = 0.0;
    for (int n = 11; n <= 30; ++n) {
        double e = max_error(n);
        monotone = monotone && e <= prev;
        prev = e;
        if (n == 30) at30 = e;
    }
    return {monotone && at30 <= 1e-6, fmt("error at N=30 = %.2e", at30) + (monotone ? "; monotone from N=10" : "; not monotone from N=10")};
}

Outcome holder_suite() {
    auto seg = Contour::segment(0.0, 1.0);
    Density s = Density::preset(seg, "sqrt(re(t))");
    bool pass_half = check_holder(s, seg, 0.5, 1.0, 256).pass;
    bool fail_34 = !check_holder(s, seg, 0.75, 1.0, 256).pass;
    double idx = estimate_holder(s, seg, 256).estimated_index;
    auto half = Contour::segment(0.0, 0.5);
    Density l = Density::preset(half, "inv_ln");
    bool flagged = !estimate_holder(l, half, 256).pass && l.regularity() == Regularity::non_holder;
    bool ok = pass_half && fail_34 && idx >= 0.45 && idx <= 0.55 && flagged;
    return {ok, fmt("estimated index of sqrt = %.4f", idx) + (pass_half && fail_34 ? "; certificates as expected" : "; certificate mismatch") + (flagged ? "; 1/ln flagged" : "; 1/ln not flagged")};
}

Outcome spectral() {
    // 1/(tau (tau - 1.2)) on |tau| = 1; residue oracle 2 pi i / (0 - 1.2).
    ContourIntegrand f = [](const ContourPoint& p) { return 1.0 / (p.z * (p.z - 1.2)); };
    cplx exact = cplx(0.0, 2.0 * pi) / -1.2;
    std::vector<double> err;
    for (std::size_t n : {32, 64, 128})
        err.push_back(std::abs(apply_rule(circle(), f, make_rule(circle(), {RuleKind::trapezoid, n, 1})) - exact));
    bool ok = err[0] >= 10.0 * err[1] && err[1] >= 10.0 * err[2];
    char buf[160];
    std::snprintf(buf, sizeof buf, "errors %.2e, %.2e, %.2e", err[0], err[1], err[2]);
    return {ok, buf};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"PV of the unit density on the unit circle is i pi", pv_unit_density},
        {"step function 1 / 0 / 1/2", step_function},
        {"jump identity on circle and ellipse", jump_identity},
        {"side limits match boundary values", sokhotski},
        {"CIF II for 1/z", cif_two},
        {"BVP verdicts", bvp},
        {"series at infinity for Re tau", series},
        {"Faber exactness and route agreement", faber_exact},
        {"vanishing of L+(g^n) for n < 0", vanishing},
        {"Faber series of 1/(z - 3) on the segment", faber_series_convergence},
        {"Hölder suite", holder_suite},
        {"spectral convergence of the trapezoid rule", spectral},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("[%s] criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
