import cmath
import json
import math
from fractions import Fraction

import pytest

import cauchy_jump as cj


@pytest.fixture
def circle():
    return cj.Contour.circle(0, 1)


def test_pv_unit_density(circle):
    for t in (0.0, 0.25, 0.6):
        assert abs(cj.pv_unit(circle, t)["value"] - 1j * math.pi) < 1e-12
        pv = cj.pv_cauchy(circle, cj.Density.constant(1), t)
        assert abs(pv["value"] - 1j * math.pi) < 1e-12


def test_step_function(circle):
    ci = cj.CauchyIntegral(circle, cj.Density.constant(1))
    assert abs(ci(0.0) - 1) < 1e-10
    assert abs(ci(2.0)) < 1e-10
    assert abs(ci(1.0) - 0.5) < 1e-10


def test_boundary_values_and_side_limits(circle):
    d = cj.Density.preset(circle, "re")
    ci = cj.CauchyIntegral(circle, d)
    b = ci.boundary_values(0.125)
    assert abs(b["plus"] - b["minus"] - d(0.125)) < 1e-10
    assert abs(ci.limit_from_side(0.125, "interior") - b["plus"]) < 1e-6
    assert abs(ci.limit_from_side(0.125, "exterior") - b["minus"]) < 1e-6


def test_python_density(circle):
    d = cj.Density.from_function(circle, lambda z: z * z, "square")
    ci = cj.CauchyIntegral(circle, d)
    z = 0.3 + 0.2j
    assert abs(ci(z) - z * z) < 1e-12
    assert abs(ci(2.5)) < 1e-12


def test_series_at_infinity(circle):
    ci = cj.CauchyIntegral(circle, cj.Density.preset(circle, "re"))
    a = ci.series_at_infinity(4)
    assert abs(a[0] + 0.5) < 1e-10


def test_decompose_and_bvp(circle):
    pair = cj.decompose(circle, cj.Density.preset(circle, "sq"))
    assert abs(pair.plus(0.4) - 0.16) < 1e-12
    assert abs(pair.minus(3.0)) < 1e-12
    v = cj.solve_holomorphic_bvp(circle, cj.Density.preset(circle, "inv"), [2.0])
    assert not v["solvable"]
    assert abs(v["witness"][1] - 0.5) < 1e-9


def test_faber_exact():
    disk = cj.ExteriorMap.parse("disk:2")
    polys = cj.faber_polynomials(disk, 3)
    assert polys[3] == [0, 0, 0, Fraction(1, 8)]
    seg = cj.faber_polynomials(cj.ExteriorMap.parse("segment:2"), 2)
    assert seg[2] == [-2, 0, 1]
    quad = cj.faber_polynomials(disk, 3, route="quadrature", radius=3.0)
    assert abs(quad[3][3] - 0.125) < 1e-10


def test_faber_series_and_vanishing():
    g = cj.ExteriorMap.parse("segment:2")
    r = cj.faber_series(lambda z: 1 / (z - 3), g, 30)
    assert r["max_error"] <= 1e-6
    assert cj.verify_vanishing(g, -2)["max_modulus"] <= 1e-9


def test_laurent_text():
    p = cj.LaurentPoly.parse("z + z^-1 + O(z^-9)")
    sq = p ** 2
    assert sq.coefficient(0) == 2
    assert str(cj.LaurentPoly.parse(str(sq))) == str(sq)


def test_holder():
    seg = cj.Contour.segment(0, 1)
    s = cj.Density.preset(seg, "sqrt(re(t))")
    assert cj.check_holder(s, seg, 0.5, 1.0)["pass"]
    assert not cj.check_holder(s, seg, 0.75, 1.0)["pass"]
    assert abs(cj.estimate_holder(s, seg)["estimated_index"] - 0.5) < 0.05


def test_errors_carry_kind():
    with pytest.raises(cj.Error) as info:
        cj.ExteriorMap.parse("square:2")
    assert info.value.kind == "parse"
    with pytest.raises(cj.Error) as info:
        cj.CauchyIntegral(cj.Contour.segment(-1, 1), cj.Density.constant(1))(1.0)
    assert info.value.kind == "endpoint"


def test_cli_in_process():
    code, out, _ = cj.run_cli(["faber", "--map", "disk:2", "--n", "2"])
    assert code == 0
    report = json.loads(out)
    assert report["results"]["polynomials"][2] == ["0", "0", "1/4"]
    code, _, _ = cj.run_cli(["frobnicate"])
    assert code == 2
    assert cj.run_cli(["--version"])[1].strip() == cj.__version__


def test_contour_geometry(circle):
    assert circle.classify(0.2) == "interior"
    assert circle.classify(3j) == "exterior"
    assert abs(circle.winding(0.1) - 1) < 1e-12
    z, dz = circle.evaluate(0.25)
    assert abs(z - 1j) < 1e-15
    assert abs(dz - 2 * math.pi * 1j * z) < 1e-12
    assert abs(circle.length() - 2 * math.pi) < 1e-12
