#include "cauchy_jump/cauchy.hpp"
#include "cauchy_jump/faber.hpp"
#include "support.hpp"

using namespace cauchy_jump;
using test_support::near;

namespace {

std::vector<Rational> exact(const std::vector<Coefficient>& v) {
    std::vector<Rational> out;
    for (const auto& c : v) {
        REQUIRE(c.is_exact);
        out.push_back(c.exact);
    }
    return out;
}

std::vector<ExteriorMap> presets() {
    return {ExteriorMap::parse("disk:2"), ExteriorMap::parse("segment:2"), ExteriorMap::parse("ellipse:2,1"),
            ExteriorMap::parse("ellipse:3/2,1/2")};
}

}  // namespace

TEST_SUITE("faber") {

TEST_CASE("formal route examples") {
    auto disk = faber_polynomials(ExteriorMap::disk(2), 8);
    REQUIRE(disk.size() == 9);
    CHECK(disk.source == FaberSource::formal);
    for (int n = 0; n <= 8; ++n) {
        std::vector<Rational> expected(n + 1, 0);
        expected[n] = Rational(1, 1 << n);
        CHECK(exact(disk.polynomials[n]) == expected);
    }
    auto seg = faber_polynomials(ExteriorMap::segment(2), 4);
    CHECK(exact(seg.polynomials[2]) == std::vector<Rational>{-2, 0, 1});
    // 2 T_4(z/2) = z^4 - 4 z^2 + 2.
    CHECK(exact(seg.polynomials[4]) == std::vector<Rational>{2, 0, -4, 0, 1});
    for (const auto& g : presets()) CHECK(exact(faber_polynomials(g, 0).polynomials[0]) == std::vector<Rational>{1});
}

TEST_CASE("segment Faber polynomials are scaled Chebyshev polynomials") {
    auto seg = faber_polynomials(ExteriorMap::segment(2), 10);
    for (int n = 1; n <= 10; ++n)
        for (double x : {-1.7, -0.3, 0.9, 1.95}) {
            double oracle = 2.0 * std::cos(n * std::acos(x / 2.0));
            CHECK(std::abs(seg.evaluate(n, x) - oracle) <= 1e-11 * std::pow(2.0, n));
        }
}

TEST_CASE("degree law") {
    for (const auto& g : presets()) {
        auto basis = faber_polynomials(g, 10);
        auto c1 = g.laurent(1).coefficient(1).exact;
        Rational lead = 1;
        for (int n = 0; n <= 10; ++n, lead *= c1) {
            const auto& p = basis.polynomials[n];
            REQUIRE(p.size() == static_cast<std::size_t>(n + 1));
            CHECK(p.back().exact == lead);
        }
    }
}

TEST_CASE("quadrature route examples") {
    auto disk = faber_polynomials_quadrature(ExteriorMap::disk(2), 3.0, 3);
    CHECK(disk.source == FaberSource::quadrature);
    std::vector<double> psi3{0, 0, 0, 0.125};
    for (int k = 0; k <= 3; ++k) CHECK(near(disk.polynomials[3][k].numeric(), psi3[k], 1e-10));
    auto seg = faber_polynomials_quadrature(ExteriorMap::segment(2), 3.0, 2);
    std::vector<double> psi2{-2, 0, 1};
    for (int k = 0; k <= 2; ++k) CHECK(near(seg.polynomials[2][k].numeric(), psi2[k], 1e-8));
    auto zero = faber_polynomials_quadrature(ExteriorMap::disk(2), 3.0, 0);
    REQUIRE(zero.size() == 1);
    CHECK(near(zero.polynomials[0][0].numeric(), 1.0, 1e-14));
}

TEST_CASE("route equivalence") {
    for (const auto& g : presets()) {
        auto formal = faber_polynomials(g, 10);
        auto quad = faber_polynomials_quadrature(g, g.default_radius(), 10);
        for (int n = 0; n <= 10; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK_MESSAGE(near(formal.polynomials[n][k].numeric(), quad.polynomials[n][k].numeric(), 1e-8),
                              g.description(), " n=", n, " k=", k);
    }
}

TEST_CASE("annulus and degenerate maps") {
    CHECK_ERROR_KIND(faber_polynomials_quadrature(ExteriorMap::segment(2), 1.5, 3), ErrorKind::annulus);
    CHECK_ERROR_KIND(faber_polynomials_quadrature(ExteriorMap::ellipse(2, 1), 1.0, 3), ErrorKind::annulus);
    CHECK_ERROR_KIND(
        ExteriorMap::from_laurent(LaurentPoly::from_terms(std::map<int, Rational>{{0, 1}, {-1, 1}}, 8), {}),
        ErrorKind::degenerate_map);
    CHECK_ERROR_KIND(ExteriorMap::parse("disk:0"), ErrorKind::domain);
    CHECK_ERROR_KIND(ExteriorMap::parse("square:2"), ErrorKind::parse);
}

TEST_CASE("forward and inverse compose to the identity") {
    // |w| = 1 is excluded: the segment map folds the unit circle onto the slit.
    for (const auto& g : presets()) {
        for (double r : {1.01, 1.3, 4.0})
            for (int j = 0; j < 16; ++j) {
                auto w = std::polar(r, 2.0 * pi * (j + 0.1) / 16.0);
                CHECK(near(g.forward(g.inverse(w)), w, 1e-10 * r));
            }
    }
}

TEST_CASE("vanishing law") {
    for (const auto& g : presets())
        for (int n : {-1, -2, -3}) {
            auto r = verify_vanishing(g, n, {});
            CHECK(r.probes.size() == 16);
            CHECK_MESSAGE(r.max_modulus <= 1e-9, g.description(), " n=", n);
        }
    std::vector<cplx> half;
    for (int j = 0; j < 8; ++j) half.push_back(std::polar(0.5, 2.0 * pi * j / 8.0));
    CHECK(verify_vanishing(ExteriorMap::disk(2), -1, half).max_modulus <= 1e-9);
    CHECK(verify_vanishing(ExteriorMap::disk(1), -1, half).max_modulus <= 1e-12);
    CHECK_ERROR_KIND(verify_vanishing(ExteriorMap::disk(2), 1, half), ErrorKind::domain);
    std::vector<cplx> far{10.0};
    CHECK_ERROR_KIND(verify_vanishing(ExteriorMap::disk(2), -1, far), ErrorKind::probe_region);
}

TEST_CASE("jump consistency of g^n on a circle") {
    // On |zeta| = r the Cauchy integral of g^n splits into L+ = Psi_n (zero
    // for n < 0) and L- = Psi_n - g^n.
    for (const auto& g : {ExteriorMap::disk(2), ExteriorMap::segment(2)}) {
        double r = 3.0;
        auto circle = Contour::circle(0.0, r);
        auto basis = faber_polynomials(g, 3);
        for (int n = -3; n <= 3; ++n) {
            Density d = Density::from_function(circle, [&](cplx z) { return std::pow(g.forward(z), n); }, "g^n");
            CauchyIntegral ci(circle, d);
            for (int j = 0; j < 16; ++j) {
                double t = (j + 0.5) / 16.0;
                cplx zeta = circle.evaluate(t).z;
                auto b = ci.boundary_values(t);
                cplx psi = n >= 0 ? basis.evaluate(n, zeta) : cplx(0.0);
                CHECK(near(b.plus, psi, 1e-7));
                CHECK(near(b.minus, psi - d(t), 1e-7));
                CHECK(near(b.plus - b.minus, d(t), 1e-7));
            }
        }
    }
}

TEST_CASE("Faber series examples") {
    auto disk = ExteriorMap::disk(2);
    auto id = faber_series([](cplx z) { return z; }, disk, 6, {});
    for (int n = 0; n <= 6; ++n) CHECK(near(id.coefficients[n], n == 1 ? 2.0 : 0.0, 1e-13));
    CHECK(id.max_error <= 1e-13);

    auto seven = faber_series([](cplx) { return cplx(7.0); }, ExteriorMap::segment(2), 6, {});
    for (int n = 0; n <= 6; ++n) CHECK(near(seven.coefficients[n], n == 0 ? 7.0 : 0.0, 1e-13));

    std::vector<cplx> outside{cplx(5.0)};
    CHECK_ERROR_KIND(faber_series([](cplx z) { return z; }, disk, 4, outside), ErrorKind::probe_region);
}

TEST_CASE("Faber series of 1/(z - 3) on the segment") {
    auto g = ExteriorMap::segment(2);
    auto f = [](cplx z) { return 1.0 / (z - 3.0); };
    auto r = faber_series(f, g, 30, {});
    CHECK(r.probes.size() == 64);
    CHECK(r.max_error <= 1e-6);
    // Geometric decay at rate 1/|g(3)|.
    double rho = 1.0 / std::abs(g.forward(3.0));
    for (int n = 5; n <= 30; ++n) CHECK(std::abs(r.coefficients[n]) <= 2.0 * std::pow(rho, n - 1));
    double prev = faber_series(f, g, 10, {}).max_error;
    for (int n = 15; n <= 40; n += 5) {
        double e = faber_series(f, g, n, {}).max_error;
        CHECK(e <= prev);
        prev = e;
    }
}

TEST_CASE("Laurent maps round trip through from_laurent") {
    auto disk = ExteriorMap::disk(2);
    auto custom = ExteriorMap::from_laurent(disk.laurent(12), {0.0, std::numeric_limits<double>::infinity()});
    auto a = faber_polynomials(disk, 5), b = faber_polynomials(custom, 5);
    for (int n = 0; n <= 5; ++n) CHECK(exact(a.polynomials[n]) == exact(b.polynomials[n]));
    CHECK(near(custom.inverse(cplx(0.0, 2.0)), cplx(0.0, 4.0), 1e-12));
}

}  // TEST_SUITE
