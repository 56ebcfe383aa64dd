#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cauchy_jump/cauchy.hpp"
#include "cauchy_jump/error.hpp"
#include "cauchy_jump/cli.hpp"
#include "cauchy_jump/faber.hpp"
#include "cauchy_jump/io.hpp"
#include "cauchy_jump/jump.hpp"
#include "cauchy_jump/quadrature.hpp"
#include "cauchy_jump/series.hpp"

namespace py = pybind11;
using namespace cauchy_jump;

namespace {

py::dict holder_dict(const HolderReport& r) {
    py::dict d;
    d["pass"] = r.pass;
    d["worst_pair"] = r.worst_pair;
    d["worst_ratio"] = r.worst_ratio;
    d["estimated_index"] = r.estimated_index;
    d["estimated_constant"] = r.estimated_constant;
    return d;
}

py::dict triple_dict(const BoundaryTriple& b) {
    py::dict d;
    d["plus"] = b.plus;
    d["minus"] = b.minus;
    d["principal"] = b.principal;
    d["error_estimate"] = b.error_estimate;
    d["warnings"] = b.warnings;
    return d;
}

py::dict pv_dict(const PVResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["error_estimate"] = r.error_estimate;
    d["nodes_used"] = r.nodes_used;
    d["warnings"] = r.warnings;
    return d;
}

// Exact coefficients become fractions.Fraction, floating ones complex.
py::object coefficient(const Coefficient& c) {
    if (!c.is_exact) return py::cast(c.value);
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(c.exact.str());
}

Side parse_side(const std::string& s) {
    if (s == "interior") return Side::interior;
    if (s == "exterior") return Side::exterior;
    throw Error(ErrorKind::domain, "side must be 'interior' or 'exterior'");
}

CauchyConfig config(std::size_t nodes, std::size_t panels, const std::string& rule) {
    CauchyConfig c;
    c.quadrature = {parse_rule_kind(rule), nodes, panels};
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cauchy-type integrals, jump decompositions and Faber polynomials";
    m.attr("__version__") = cli::kVersion;

    static py::exception<Error> error(m, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::handle(error.ptr())(std::string(e.what()));
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<Contour>(m, "Contour")
        .def_static("circle", &Contour::circle, py::arg("center"), py::arg("radius"))
        .def_static("ellipse", &Contour::ellipse, py::arg("center"), py::arg("a"), py::arg("b"))
        .def_static("segment", &Contour::segment, py::arg("a"), py::arg("b"))
        .def_static("arc", &Contour::arc, py::arg("center"), py::arg("radius"), py::arg("theta0"), py::arg("theta1"))
        .def_static(
            "fourier",
            [](const std::vector<std::pair<int, cplx>>& terms) {
                std::vector<Contour::FourierTerm> t;
                for (auto [k, c] : terms) t.push_back({k, c});
                return Contour::fourier(t);
            },
            py::arg("terms"), "Terms as (k, c) pairs for c exp(2 pi i k t).")
        .def_static("piecewise", &Contour::piecewise, py::arg("pieces"), py::arg("closed"))
        .def_static("from_json", &contour_from_json, py::arg("text"))
        .def("evaluate",
             [](const Contour& c, double t) {
                 auto p = c.evaluate(t);
                 return py::make_tuple(p.z, p.dz);
             },
             py::arg("t"), "(gamma(t), gamma'(t))")
        .def("classify", [](const Contour& c, cplx z) { return to_string(c.classify(z).kind); }, py::arg("z"))
        .def("winding", &Contour::winding, py::arg("z"))
        .def("nearest", &Contour::nearest, py::arg("z"))
        .def("normal_offset",
             [](const Contour& c, double t, double eps, const std::string& side) {
                 return c.normal_offset(t, eps, parse_side(side));
             },
             py::arg("t"), py::arg("eps"), py::arg("side"))
        .def_property_readonly("closed", &Contour::closed)
        .def_property_readonly("kind", &Contour::kind)
        .def_property_readonly("corners", [](const Contour& c) { return std::vector<double>(c.corners().begin(), c.corners().end()); })
        .def("length", &Contour::length)
        .def("diameter", &Contour::diameter)
        .def("__repr__", [](const Contour& c) { return "<Contour " + c.kind() + ">"; });

    py::class_<Density>(m, "Density")
        .def_static("constant", &Density::constant, py::arg("value"))
        .def_static("preset", &Density::preset, py::arg("contour"), py::arg("name"))
        .def_static(
            "from_function",
            [](const Contour& c, std::function<cplx(cplx)> f, std::string label) {
                return Density::from_function(c, std::move(f), std::move(label));
            },
            py::arg("contour"), py::arg("phi"), py::arg("label") = "python")
        .def("__call__", &Density::operator(), py::arg("t"))
        .def("__add__", [](const Density& a, const Density& b) { return a + b; })
        .def("__rmul__", [](const Density& d, cplx s) { return s * d; })
        .def_property_readonly("label", &Density::label);

    m.def("check_holder",
          [](const Density& d, const Contour& c, double lambda, double constant, std::size_t grid) {
              return holder_dict(check_holder(d, c, lambda, constant, grid));
          },
          py::arg("density"), py::arg("contour"), py::arg("index"), py::arg("constant"), py::arg("grid") = 256);
    m.def("estimate_holder",
          [](const Density& d, const Contour& c, std::size_t grid) { return holder_dict(estimate_holder(d, c, grid)); },
          py::arg("density"), py::arg("contour"), py::arg("grid") = 256);

    m.def("pv_unit", [](const Contour& c, double t0) { return pv_dict(pv_unit(c, t0)); }, py::arg("contour"), py::arg("t0"));
    m.def("pv_cauchy",
          [](const Contour& c, const Density& d, double t0, std::size_t nodes) {
              return pv_dict(pv_cauchy(c, d, t0, {RuleKind::automatic, nodes, 16}));
          },
          py::arg("contour"), py::arg("density"), py::arg("t0"), py::arg("nodes") = 128);

    py::class_<CauchyIntegral>(m, "CauchyIntegral")
        .def(py::init([](Contour c, Density d, std::size_t nodes, std::size_t panels, const std::string& rule) {
                 return CauchyIntegral(std::move(c), std::move(d), config(nodes, panels, rule));
             }),
             py::arg("contour"), py::arg("density"), py::arg("nodes") = 128, py::arg("panels") = 16,
             py::arg("rule") = "auto")
        .def("__call__", &CauchyIntegral::eval, py::arg("z"))
        .def("eval", &CauchyIntegral::eval, py::arg("z"))
        .def("boundary_values", [](const CauchyIntegral& ci, double t) { return triple_dict(ci.boundary_values(t)); },
             py::arg("t"))
        .def("limit_from_side",
             [](const CauchyIntegral& ci, double t, const std::string& side) {
                 return ci.limit_from_side(t, parse_side(side)).value;
             },
             py::arg("t"), py::arg("side"))
        .def("series_at_infinity", &CauchyIntegral::series_at_infinity, py::arg("count"));

    m.def(
        "verify_cif",
        [](const Contour& c, const std::string& f, const std::string& kind, const std::vector<cplx>& probes,
           std::optional<cplx> f_inf) {
            CifKind k = kind == "I" ? CifKind::interior : kind == "II" ? CifKind::exterior
                                                                        : throw Error(ErrorKind::parse, "kind must be I or II");
            auto r = verify_cif(c, {Expression::parse(f), f_inf}, k, probes);
            py::list entries;
            for (const auto& e : r.entries) {
                py::dict d;
                d["probe"] = e.probe;
                d["region"] = to_string(e.region);
                d["value"] = e.value;
                d["expected"] = e.expected;
                d["deviation"] = e.deviation;
                entries.append(d);
            }
            py::dict out;
            out["entries"] = entries;
            out["max_deviation"] = r.max_deviation;
            out["notes"] = r.notes;
            return out;
        },
        py::arg("contour"), py::arg("f"), py::arg("kind"), py::arg("probes"), py::arg("f_inf") = py::none());

    py::class_<JumpPair>(m, "JumpPair")
        .def("plus", &JumpPair::plus, py::arg("z"))
        .def("minus", &JumpPair::minus, py::arg("z"))
        .def("boundary", [](const JumpPair& j, double t) { return triple_dict(j.boundary(t)); }, py::arg("t"))
        .def_property_readonly("closed_by_arc", &JumpPair::closed_by_arc)
        .def_property_readonly("contour", &JumpPair::contour);
    m.def("decompose", [](const Contour& c, const Density& d) { return decompose(c, d); }, py::arg("contour"),
          py::arg("density"));
    m.def(
        "solve_holomorphic_bvp",
        [](const Contour& c, const Density& u, std::optional<std::vector<cplx>> probes, double tol) {
            BvpOptions o;
            o.tolerance = tol;
            auto ps = probes ? *probes : default_exterior_probes(c);
            auto v = solve_holomorphic_bvp(c, u, ps, {}, o);
            py::dict d;
            d["solvable"] = v.solvable;
            d["tolerance"] = v.tolerance;
            d["max_minus"] = v.max_minus;
            d["witness"] = v.witness ? py::object(py::make_tuple(v.witness->probe, v.witness->modulus)) : py::object(py::none());
            d["series"] = v.series;
            d["solution"] = v.solution ? py::cast(*v.solution) : py::object(py::none());
            d["boundary_residual"] = v.boundary_residual;
            d["notes"] = v.notes;
            return d;
        },
        py::arg("contour"), py::arg("u"), py::arg("probes") = py::none(), py::arg("tol") = -1.0);

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def_static("parse", &LaurentPoly::parse_text, py::arg("text"), py::arg("default_truncation") = 20)
        .def_static("from_json", &series_from_json, py::arg("text"))
        .def("to_json", &series_to_json)
        .def("__str__", &LaurentPoly::to_text)
        .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_text() + "')"; })
        .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
        .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
        .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
        .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
        .def("__pow__", [](const LaurentPoly& a, int n) { return power(a, n); })
        .def("invert", [](const LaurentPoly& a) { return invert(a); })
        .def("coefficient", [](const LaurentPoly& a, int e) { return coefficient(a.coefficient(e)); }, py::arg("exponent"))
        .def("polynomial_part",
             [](const LaurentPoly& a) {
                 py::list out;
                 for (const auto& c : polynomial_part(a)) out.append(coefficient(c));
                 return out;
             })
        .def_property_readonly("order", &LaurentPoly::order)
        .def_property_readonly("truncation", &LaurentPoly::truncation)
        .def("__call__", &LaurentPoly::evaluate, py::arg("z"));

    py::class_<ExteriorMap>(m, "ExteriorMap")
        .def_static("parse", &load_map, py::arg("spec"))
        .def("__call__", &ExteriorMap::forward, py::arg("z"))
        .def("inverse", &ExteriorMap::inverse, py::arg("w"))
        .def("laurent", &ExteriorMap::laurent, py::arg("depth"))
        .def("contains", &ExteriorMap::contains, py::arg("z"))
        .def("default_radius", &ExteriorMap::default_radius)
        .def_property_readonly("description", &ExteriorMap::description);

    m.def(
        "faber_polynomials",
        [](const ExteriorMap& g, int n, const std::string& route, std::optional<double> radius) {
            FaberBasis b;
            if (route == "formal") b = faber_polynomials(g, n);
            else if (route == "quadrature") b = faber_polynomials_quadrature(g, radius.value_or(g.default_radius()), n);
            else throw Error(ErrorKind::parse, "route must be 'formal' or 'quadrature'");
            py::list out;
            for (const auto& p : b.polynomials) {
                py::list row;
                for (const auto& c : p) row.append(coefficient(c));
                out.append(row);
            }
            return out;
        },
        py::arg("map"), py::arg("n"), py::arg("route") = "formal", py::arg("radius") = py::none());
    m.def(
        "verify_vanishing",
        [](const ExteriorMap& g, int n, const std::vector<cplx>& probes) {
            auto r = verify_vanishing(g, n, probes);
            py::dict d;
            d["probes"] = r.probes;
            d["moduli"] = r.moduli;
            d["max_modulus"] = r.max_modulus;
            d["radius"] = r.radius;
            return d;
        },
        py::arg("map"), py::arg("n"), py::arg("probes") = std::vector<cplx>{});
    m.def(
        "faber_series",
        [](std::function<cplx(cplx)> f, const ExteriorMap& g, int n, const std::vector<cplx>& probes) {
            auto r = faber_series(f, g, n, probes);
            py::dict d;
            d["coefficients"] = r.coefficients;
            d["probes"] = r.probes;
            d["errors"] = r.errors;
            d["max_error"] = r.max_error;
            return d;
        },
        py::arg("f"), py::arg("map"), py::arg("n"), py::arg("probes") = std::vector<cplx>{});

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
