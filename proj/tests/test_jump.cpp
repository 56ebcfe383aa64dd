#include "cauchy_jump/jump.hpp"
#include "support.hpp"

using namespace cauchy_jump;
using test_support::near;

namespace {

const Contour& unit_circle() {
    static const Contour c = Contour::circle(0.0, 1.0);
    return c;
}

const std::vector<cplx> interior_probes{cplx(0.0), cplx(0.4, 0.1), cplx(-0.3, -0.5), cplx(0.0, 0.8)};
const std::vector<cplx> exterior_probes{cplx(1.5), cplx(-2.0, 0.5), cplx(0.3, -3.0), cplx(10.0, 10.0)};

}  // namespace

TEST_SUITE("jump") {

TEST_CASE("decompose examples") {
    auto re = decompose(unit_circle(), Density::preset(unit_circle(), "re"));
    auto one = decompose(unit_circle(), Density::constant(1.0));
    auto inv = decompose(unit_circle(), Density::preset(unit_circle(), "inv"));
    CHECK_FALSE(re.closed_by_arc());
    for (cplx z : interior_probes) {
        CHECK(near(re.plus(z), z / 2.0, 1e-9));
        CHECK(near(one.plus(z), 1.0, 1e-9));
        CHECK(near(inv.plus(z), 0.0, 1e-9));
    }
    for (cplx z : exterior_probes) {
        CHECK(near(re.minus(z), -0.5 / z, 1e-9));
        CHECK(near(one.minus(z), 0.0, 1e-9));
        CHECK(near(inv.minus(z), -1.0 / z, 1e-9));
    }
    CHECK(re.minus_at_infinity() == cplx(0.0));
}

TEST_CASE("plus and minus are region restricted") {
    auto re = decompose(unit_circle(), Density::preset(unit_circle(), "re"));
    CHECK_ERROR_KIND(re.plus(2.0), ErrorKind::probe_region);
    CHECK_ERROR_KIND(re.minus(0.0), ErrorKind::probe_region);
    // On the contour both sides give boundary values.
    CHECK(near(re.plus(1.0), 0.5, 1e-9));
    CHECK(near(re.minus(1.0), -0.5, 1e-9));
}

TEST_CASE("boundary jump equals the density") {
    auto ellipse = Contour::ellipse(cplx(0.5, -0.5), 2.0, 1.0);
    Density d = Density::preset(ellipse, "conj");
    auto pair = decompose(ellipse, d);
    for (int j = 0; j < 32; ++j) {
        double t = (j + 0.5) / 32.0;
        auto b = pair.boundary(t);
        CHECK(std::abs(b.plus - b.minus - d(t)) <= 1e-7);
    }
}

TEST_CASE("reconstruction of an analytic pair") {
    // f+ = exp(z) on the closed disk, f- = 1/(z - 0.2) + 1/z^2 outside.
    auto fp = [](cplx z) { return std::exp(z); };
    auto fm = [](cplx z) { return 1.0 / (z - 0.2) + 1.0 / (z * z); };
    auto ellipse = Contour::ellipse(0.0, 1.5, 1.0);
    for (const Contour* c : std::initializer_list<const Contour*>{&unit_circle(), &ellipse}) {
        Density phi = Density::from_function(*c, [&](cplx z) { return fp(z) - fm(z); }, "pair");
        auto pair = decompose(*c, phi);
        for (cplx z : interior_probes) CHECK(near(pair.plus(z), fp(z), 1e-7));
        for (cplx z : exterior_probes) CHECK(near(pair.minus(z), fm(z), 1e-7));
    }
}

TEST_CASE("linearity") {
    Density d1 = Density::preset(unit_circle(), "re");
    Density d2 = Density::preset(unit_circle(), "sqrt_pullback");
    cplx alpha(2.0, -1.0), beta(-0.5, 3.0);
    auto p1 = decompose(unit_circle(), d1);
    auto p2 = decompose(unit_circle(), d2);
    auto pc = decompose(unit_circle(), alpha * d1 + beta * d2);
    auto rel = [](cplx a, cplx b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };
    for (cplx z : interior_probes) CHECK(rel(pc.plus(z), alpha * p1.plus(z) + beta * p2.plus(z)));
    for (cplx z : exterior_probes) CHECK(rel(pc.minus(z), alpha * p1.minus(z) + beta * p2.minus(z)));
}

TEST_CASE("zero density gives zero functions") {
    auto pair = decompose(unit_circle(), Density::constant(0.0));
    for (cplx z : interior_probes) CHECK(std::abs(pair.plus(z)) <= 1e-10);
    for (cplx z : exterior_probes) CHECK(std::abs(pair.minus(z)) <= 1e-10);
    for (double t : {0.0, 0.4}) {
        auto b = pair.boundary(t);
        CHECK(std::abs(b.plus) <= 1e-10);
        CHECK(std::abs(b.minus) <= 1e-10);
    }
}

TEST_CASE("open contours are closed by an arc") {
    auto seg = Contour::segment(-1.0, 1.0);
    auto arc = closing_arc(seg);
    CHECK(near(arc.evaluate(0.0).z, 1.0, 1e-12));
    CHECK(near(arc.evaluate(1.0).z, -1.0, 1e-12));
    auto pair = decompose(seg, Density::constant(1.0));
    CHECK(pair.closed_by_arc());
    REQUIRE(pair.original().has_value());
    CHECK(pair.contour().closed());
    // Oracle: the plain Cauchy integral over the segment alone.
    CauchyIntegral direct(seg, Density::constant(1.0));
    for (cplx z : {cplx(0.3, 0.4), cplx(0.0, -2.0), cplx(3.0, 0.1)}) {
        cplx v = pair.contour().classify(z).kind == Region::Kind::interior ? pair.plus(z) : pair.minus(z);
        CHECK(near(v, direct.eval(z), 1e-9));
    }
    // Jump across the segment is the density.
    for (double t : {0.2, 0.5, 0.8}) {
        auto b = pair.boundary(pair.closed_parameter(t));
        CHECK(near(b.plus - b.minus, 1.0, 1e-8));
    }
}

TEST_CASE("closing arc keeps the direction of travel") {
    // Clockwise-looking open arc: the closure must still run counterclockwise.
    auto a = Contour::arc(0.0, 1.0, pi / 2.0, -pi / 2.0);
    auto pair = decompose(a, Density::constant(1.0));
    CHECK(pair.contour().canonical_parameter(0.25) == doctest::Approx(0.25));
}

TEST_CASE("BVP examples") {
    auto probes = default_exterior_probes(unit_circle());
    CHECK(probes.size() == 32);

    std::vector<cplx> two{2.0};
    auto inv = solve_holomorphic_bvp(unit_circle(), Density::preset(unit_circle(), "inv"), two);
    CHECK_FALSE(inv.solvable);
    REQUIRE(inv.witness.has_value());
    CHECK(near(inv.witness->probe, 2.0, 1e-12));
    CHECK(std::abs(inv.witness->modulus - 0.5) <= 1e-9);
    CHECK_FALSE(inv.solution.has_value());

    auto sq = solve_holomorphic_bvp(unit_circle(), Density::preset(unit_circle(), "sq"), probes);
    CHECK(sq.solvable);
    CHECK(sq.boundary_residual <= 1e-8);
    REQUIRE(sq.solution.has_value());
    for (cplx z : interior_probes) CHECK(near(sq.solution->plus(z), z * z, 1e-9));

    auto five = solve_holomorphic_bvp(unit_circle(), Density::constant(5.0), probes);
    CHECK(five.solvable);
    REQUIRE(five.solution.has_value());
    for (cplx z : interior_probes) CHECK(near(five.solution->plus(z), 5.0, 1e-9));
}

TEST_CASE("BVP with default probes finds the same witness magnitude") {
    auto inv = solve_holomorphic_bvp(unit_circle(), Density::preset(unit_circle(), "inv"),
                                     default_exterior_probes(unit_circle()));
    CHECK_FALSE(inv.solvable);
    REQUIRE(inv.witness.has_value());
    // |Phi-(z)| = 1/|z| is largest on the inner ring, radius 2.
    CHECK(std::abs(inv.witness->modulus - 0.5) <= 1e-9);
    CHECK(inv.max_minus == doctest::Approx(0.5));
}

TEST_CASE("BVP errors") {
    std::vector<cplx> inside{0.5};
    CHECK_ERROR_KIND(solve_holomorphic_bvp(unit_circle(), Density::constant(1.0), inside), ErrorKind::probe_region);
    std::vector<cplx> far{5.0};
    CHECK_ERROR_KIND(solve_holomorphic_bvp(Contour::segment(-1.0, 1.0), Density::constant(1.0), far),
                     ErrorKind::unsupported);
}

}  // TEST_SUITE
