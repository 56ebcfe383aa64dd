#include "cauchy_jump/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cauchy_jump/cauchy.hpp"
#include "cauchy_jump/error.hpp"
#include "cauchy_jump/faber.hpp"
#include "cauchy_jump/io.hpp"
#include "cauchy_jump/jump.hpp"

namespace cauchy_jump::cli {

using json = nlohmann::json;

namespace {

// 15 significant digits in JSON.
json num(double x) {
    if (!std::isfinite(x)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

json num(cplx z) { return json::array({num(z.real()), num(z.imag())}); }

json nums(std::span<const cplx> zs) {
    json a = json::array();
    for (cplx z : zs) a.push_back(num(z));
    return a;
}

json coefficient_json(const Coefficient& c) {
    if (c.is_exact) return c.exact.str();
    return num(c.value);
}

json basis_json(const FaberBasis& b) {
    json polys = json::array();
    for (const auto& p : b.polynomials) {
        json row = json::array();
        for (const auto& c : p) row.push_back(coefficient_json(c));
        polys.push_back(row);
    }
    return polys;
}

struct Options {
    std::string contour, density, u, f, f_inf, map, route = "formal", rule = "auto", kind = "I", of = "eval", format;
    std::vector<std::string> probes;
    std::vector<std::size_t> schedule;
    std::optional<std::size_t> nodes;
    std::size_t panels = 16;
    int n = -1;
    std::optional<double> tau0, radius, index, constant, tol;
    std::size_t grid = 0;
    bool side_limits = false;
};

QuadratureConfig quadrature(const Options& o) {
    QuadratureConfig q;
    q.kind = parse_rule_kind(o.rule);
    if (o.nodes) {
        q.nodes = *o.nodes;
    } else if (const char* env = std::getenv("CAUCHY_JUMP_NODES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw Error(ErrorKind::parse, std::string("CAUCHY_JUMP_NODES='") + env + "' is not a positive integer");
        q.nodes = static_cast<std::size_t>(v);
    }
    q.panels = o.panels;
    if (q.nodes == 0 || q.panels == 0) throw Error(ErrorKind::parse, "--nodes and --panels must be positive");
    return q;
}

CauchyConfig cauchy_config(const Options& o) {
    CauchyConfig c;
    c.quadrature = quadrature(o);
    return c;
}

json quadrature_json(const QuadratureConfig& q) {
    return {{"rule", to_string(q.kind)}, {"nodes", q.nodes}, {"panels", q.panels}};
}

std::vector<cplx> probes(const Options& o) {
    std::vector<cplx> p;
    for (const auto& s : o.probes) p.push_back(parse_point(s));
    return p;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorKind::parse, what);
}

Contour need_contour(const Options& o) {
    require(!o.contour.empty(), "--contour is required");
    return load_contour(o.contour);
}

Density need_density(const Contour& c, const std::string& spec, const char* flag) {
    require(!spec.empty(), std::string(flag) + " is required");
    return load_density(c, spec);
}

double canonical_tau0(const Contour& c, const Options& o) {
    require(o.tau0.has_value(), "--tau0 is required");
    if (!(*o.tau0 >= 0.0 && *o.tau0 <= 1.0)) throw Error(ErrorKind::domain, "--tau0 must lie in [0,1]");
    return c.canonical_parameter(*o.tau0);
}

struct Outcome {
    json inputs = json::object();
    json results = json::object();
    std::vector<std::vector<double>> csv;  // convergence rows
};

json region_name(Region::Kind k) { return to_string(k); }

Outcome cmd_eval(const Options& o) {
    Contour c = need_contour(o);
    Density d = need_density(c, o.density, "--density");
    auto ps = probes(o);
    require(!ps.empty(), "eval needs at least one --probe");
    CauchyConfig cfg = cauchy_config(o);
    CauchyIntegral ci(c, d, cfg);
    Outcome out;
    out.inputs = {{"contour", c.kind()}, {"density", d.label()}, {"probes", nums(ps)}, {"quadrature", quadrature_json(cfg.quadrature)}};
    json rows = json::array();
    for (cplx z : ps) {
        Evaluation e = ci.evaluate(z);
        rows.push_back({{"probe", num(z)},
                        {"region", region_name(e.region.kind)},
                        {"value", num(e.value)},
                        {"error_estimate", num(e.error_estimate)},
                        {"nodes_used", e.nodes_used}});
    }
    out.results["evaluations"] = rows;
    return out;
}

Outcome cmd_pv(const Options& o) {
    Contour c = need_contour(o);
    Density d = need_density(c, o.density, "--density");
    double t0 = canonical_tau0(c, o);
    QuadratureConfig q = quadrature(o);
    PVResult r = pv_cauchy(c, d, t0, q);
    Outcome out;
    out.inputs = {{"contour", c.kind()}, {"density", d.label()}, {"tau0", num(*o.tau0)}, {"quadrature", quadrature_json(q)}};
    out.results = {{"point", num(c.evaluate(t0).z)},
                   {"value", num(r.value)},
                   {"phi_on_contour", num(r.value / cplx(0.0, 2.0 * pi))},
                   {"error_estimate", num(r.error_estimate)},
                   {"nodes_used", r.nodes_used},
                   {"warnings", r.warnings}};
    return out;
}

Outcome cmd_jump(const Options& o) {
    Contour c = need_contour(o);
    Density d = need_density(c, o.density, "--density");
    CauchyConfig cfg = cauchy_config(o);
    JumpPair jp = decompose(c, d, cfg);
    const std::size_t n = o.grid ? o.grid : 16;
    Outcome out;
    out.inputs = {{"contour", c.kind()}, {"density", d.label()}, {"grid", n}, {"quadrature", quadrature_json(cfg.quadrature)}};
    json rows = json::array();
    double worst = 0.0, worst_gap = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double user_t = c.closed() ? double(j) / double(n) : (double(j) + 0.5) / double(n);
        double t = c.canonical_parameter(user_t);
        if (c.is_corner(t)) continue;
        double ct = jp.closed_parameter(t);
        BoundaryTriple b = jp.boundary(ct);
        cplx phi = d(t);
        double residual = std::abs(b.plus - b.minus - phi);
        worst = std::max(worst, residual);
        json row = {{"t", num(user_t)},
                    {"point", num(c.evaluate(t).z)},
                    {"plus", num(b.plus)},
                    {"minus", num(b.minus)},
                    {"principal", num(b.principal)},
                    {"density", num(phi)},
                    {"jump_residual", num(residual)}};
        if (o.side_limits) {
            cplx in = jp.integral().limit_from_side(ct, Side::interior).value;
            cplx ex = jp.integral().limit_from_side(ct, Side::exterior).value;
            double gap = std::max(std::abs(in - b.plus), std::abs(ex - b.minus));
            worst_gap = std::max(worst_gap, gap);
            row["limit_interior"] = num(in);
            row["limit_exterior"] = num(ex);
            row["sokhotski_gap"] = num(gap);
        }
        rows.push_back(row);
    }
    json probe_rows = json::array();
    for (cplx z : probes(o)) {
        Region r = jp.contour().classify(z, jp.integral().on_contour_tol());
        json row = {{"probe", num(z)}, {"region", region_name(r.kind)}};
        if (r.kind != Region::Kind::exterior) row["plus"] = num(jp.plus(z));
        if (r.kind != Region::Kind::interior) row["minus"] = num(jp.minus(z));
        probe_rows.push_back(row);
    }
    out.results = {{"closed_by_arc", jp.closed_by_arc()},
                   {"boundary", rows},
                   {"max_jump_residual", num(worst)},
                   {"minus_at_infinity", num(jp.minus_at_infinity())},
                   {"probes", probe_rows}};
    if (o.side_limits) out.results["max_sokhotski_gap"] = num(worst_gap);
    return out;
}

Outcome cmd_bvp(const Options& o) {
    Contour c = need_contour(o);
    Density u = need_density(c, o.u, "--u");
    CauchyConfig cfg = cauchy_config(o);
    BvpOptions bo;
    if (o.tol) bo.tolerance = *o.tol;
    auto ps = probes(o);
    BvpVerdict v = solve_holomorphic_bvp(c, u, ps, cfg, bo);
    Outcome out;
    out.inputs = {{"contour", c.kind()}, {"u", u.label()}, {"probes", nums(v.probes)}, {"quadrature", quadrature_json(cfg.quadrature)}};
    json witness = nullptr;
    if (v.witness) witness = {{"probe", num(v.witness->probe)}, {"modulus", num(v.witness->modulus)}};
    out.results = {{"solvable", v.solvable},
                   {"tolerance", num(v.tolerance)},
                   {"max_minus", num(v.max_minus)},
                   {"witness", witness},
                   {"series_at_infinity", nums(v.series)},
                   {"series_small", v.series_small},
                   {"notes", v.notes}};
    if (v.solvable) out.results["boundary_residual"] = num(v.boundary_residual);
    return out;
}

Outcome cmd_faber(const Options& o) {
    require(!o.map.empty(), "--map is required");
    require(o.n >= 0, "--n is required");
    ExteriorMap g = load_map(o.map);
    Outcome out;
    double radius = o.radius ? *o.radius : g.default_radius();
    out.inputs = {{"map", g.description()}, {"n", o.n}, {"route", o.route}};
    if (o.route == "formal") {
        out.results = {{"source", "formal"}, {"polynomials", basis_json(faber_polynomials(g, o.n))}};
    } else if (o.route == "quadrature") {
        out.inputs["radius"] = num(radius);
        out.results = {{"source", "quadrature"}, {"polynomials", basis_json(faber_polynomials_quadrature(g, radius, o.n))}};
    } else {
        throw Error(ErrorKind::parse, "--route must be formal or quadrature");
    }
    return out;
}

Outcome cmd_faber_series(const Options& o) {
    require(!o.map.empty(), "--map is required");
    require(!o.f.empty(), "--f is required");
    require(o.n >= 0, "--n is required");
    ExteriorMap g = load_map(o.map);
    Expression f = Expression::parse(o.f);
    auto ps = probes(o);
    FaberSeriesResult r = faber_series([&](cplx z) { return f(z); }, g, o.n, ps);
    Outcome out;
    out.inputs = {{"map", g.description()}, {"f", f.text()}, {"n", o.n}, {"probes", r.probes.size()}};
    json errs = json::array();
    for (double e : r.errors) errs.push_back(num(e));
    out.results = {{"coefficients", nums(r.coefficients)}, {"max_error", num(r.max_error)}, {"errors", errs}};
    return out;
}

Outcome cmd_holder(const Options& o) {
    Contour c = need_contour(o);
    Density d = need_density(c, o.density, "--density");
    const std::size_t grid = o.grid ? o.grid : 256;
    Outcome out;
    out.inputs = {{"contour", c.kind()}, {"density", d.label()}, {"grid", grid}};
    auto report_json = [](const HolderReport& r) {
        return json{{"pass", r.pass},
                    {"worst_pair", json::array({num(r.worst_pair.first), num(r.worst_pair.second)})},
                    {"worst_ratio", num(r.worst_ratio)},
                    {"estimated_index", num(r.estimated_index)},
                    {"estimated_constant", num(r.estimated_constant)}};
    };
    if (o.index || o.constant) {
        require(o.index && o.constant, "--index and --constant go together");
        out.inputs["index"] = num(*o.index);
        out.inputs["constant"] = num(*o.constant);
        out.results["certificate"] = report_json(check_holder(d, c, *o.index, *o.constant, grid));
    }
    HolderReport est = estimate_holder(d, c, std::max<std::size_t>(grid, 64));
    json e = report_json(est);
    e["holder"] = est.pass;
    out.results["estimate"] = e;
    out.results["declared"] = d.regularity() == Regularity::non_holder ? "non_holder"
                              : d.regularity() == Regularity::holder   ? "holder"
                                                                       : "unknown";
    return out;
}

Outcome cmd_series_inf(const Options& o) {
    Contour c = need_contour(o);
    Density d = need_density(c, o.density, "--density");
    CauchyConfig cfg = cauchy_config(o);
    CauchyIntegral ci(c, d, cfg);
    const std::size_t n = o.n > 0 ? static_cast<std::size_t>(o.n) : 8;
    auto ps = probes(o);
    if (ps.empty()) {
        double reach = 0.0;
        for (const auto& p : c.sample(512)) reach = std::max(reach, std::abs(p.z));
        for (int j = 0; j < 8; ++j) ps.push_back(std::polar(8.0 * reach, 2.0 * pi * j / 8.0));
    }
    auto a = ci.series_at_infinity(n);
    Outcome out;
    out.inputs = {{"contour", c.kind()}, {"density", d.label()}, {"n", n}, {"probes", nums(ps)}};
    json rows = json::array();
    double worst = 0.0;
    for (cplx z : ps) {
        cplx series = evaluate_series_at_infinity(a, z), direct = ci.eval(z);
        worst = std::max(worst, std::abs(series - direct));
        rows.push_back({{"probe", num(z)}, {"series", num(series)}, {"direct", num(direct)}, {"deviation", num(std::abs(series - direct))}});
    }
    out.results = {{"coefficients", nums(a)}, {"reconstruction", rows}, {"max_deviation", num(worst)}};
    return out;
}

Outcome cmd_verify_cif(const Options& o) {
    Contour c = need_contour(o);
    require(!o.f.empty(), "--f is required");
    AnalyticFunction f{Expression::parse(o.f), std::nullopt};
    if (!o.f_inf.empty()) f.at_infinity = parse_point(o.f_inf);
    CifKind kind;
    if (o.kind == "I" || o.kind == "1") kind = CifKind::interior;
    else if (o.kind == "II" || o.kind == "2") kind = CifKind::exterior;
    else throw Error(ErrorKind::parse, "--kind must be I or II");
    auto ps = probes(o);
    require(!ps.empty(), "verify-cif needs at least one --probe");
    CauchyConfig cfg = cauchy_config(o);
    CifReport r = verify_cif(c, f, kind, ps, cfg);
    Outcome out;
    out.inputs = {{"contour", c.kind()}, {"f", f.f.text()}, {"kind", kind == CifKind::interior ? "I" : "II"}, {"probes", nums(ps)}};
    if (f.at_infinity) out.inputs["f_inf"] = num(*f.at_infinity);
    json rows = json::array();
    for (const auto& e : r.entries)
        rows.push_back({{"probe", num(e.probe)},
                        {"region", region_name(e.region)},
                        {"value", num(e.value)},
                        {"expected", num(e.expected)},
                        {"deviation", num(e.deviation)}});
    out.results = {{"entries", rows}, {"max_deviation", num(r.max_deviation)}, {"notes", r.notes}};
    return out;
}

Outcome cmd_convergence(const Options& o) {
    require(!o.schedule.empty(), "--schedule is required (e.g. 32,64,128)");
    for (std::size_t i = 0; i < o.schedule.size(); ++i) {
        require(o.schedule[i] > 0, "schedule entries must be positive");
        require(i == 0 || o.schedule[i] > o.schedule[i - 1], "--schedule must be strictly increasing");
    }
    Contour c = need_contour(o);
    Outcome out;
    out.inputs = {{"contour", c.kind()}, {"of", o.of}, {"schedule", o.schedule}};
    json rows = json::array();
    for (std::size_t n : o.schedule) {
        Options step = o;
        step.nodes = n;
        step.panels = std::max<std::size_t>(1, n / kGaussOrder);
        QuadratureConfig q = quadrature(step);
        cplx value;
        double err;
        if (o.of == "eval") {
            Density d = need_density(c, o.density, "--density");
            auto ps = probes(o);
            require(ps.size() == 1, "convergence --of eval needs exactly one --probe");
            CauchyConfig cfg;
            cfg.quadrature = q;
            cfg.max_nodes = 2 * n;  // no automatic refinement beyond the schedule
            Evaluation e = CauchyIntegral(c, d, cfg).evaluate(ps[0]);
            value = e.value;
            err = e.error_estimate;
        } else if (o.of == "pv") {
            Density d = need_density(c, o.density, "--density");
            PVResult r = pv_cauchy(c, d, canonical_tau0(c, o), q);
            value = r.value;
            err = r.error_estimate;
        } else if (o.of == "length") {
            PVResult r = integrate(c, [](const ContourPoint& p) { return std::conj(p.dz) / std::abs(p.dz); }, q);
            value = r.value.real();
            err = r.error_estimate;
        } else {
            throw Error(ErrorKind::parse, "--of must be eval, pv or length");
        }
        out.csv.push_back({double(n), value.real(), value.imag(), err});
        rows.push_back({{"N", n}, {"value", num(value)}, {"error_estimate", num(err)}});
    }
    out.results["rows"] = rows;
    return out;
}

void print_table(const json& j, const std::string& prefix, std::ostream& os) {
    auto scalar = [](const json& v) {
        if (v.is_number_float()) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.8g", v.get<double>());
            return std::string(buf);
        }
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) print_table(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); })) {
        os << prefix << " = [";
        for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << scalar(j[i]);
        os << "]\n";
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) print_table(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << " = " << scalar(j) << "\n";
    }
}

void print_csv(const Outcome& o, std::ostream& os) {
    os << "N,value_re,value_im,error_estimate\n";
    for (const auto& r : o.csv) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%.0f,%.15g,%.15g,%.15g\n", r[0], r[1], r[2], r[3]);
        os << buf;
    }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cauchy-type integrals, jump decompositions and Faber polynomials", "cauchy-jump"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1, 1);
    Options o;

    auto common_quadrature = [&](CLI::App* s) {
        s->add_option("--rule", o.rule, "trapezoid, gauss or auto");
        s->add_option("--nodes", o.nodes, "trapezoid nodes (default 128 or $CAUCHY_JUMP_NODES)");
        s->add_option("--panels", o.panels, "Gauss-Legendre panels");
    };
    auto contour_opt = [&](CLI::App* s) { s->add_option("--contour", o.contour, "contour JSON file or inline JSON"); };
    auto density_opt = [&](CLI::App* s) { s->add_option("--density", o.density, "density preset, expression in t, or @file.csv"); };
    auto probe_opt = [&](CLI::App* s) { s->add_option("--probe", o.probes, "point re,im (repeatable)")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll); };
    auto format_opt = [&](CLI::App* s) {
        s->add_option("--format", o.format, "json, table or csv (default json; csv for convergence)")->check(CLI::IsMember({"json", "table", "csv"}));
    };

    std::map<std::string, std::function<Outcome(const Options&)>> handlers;
    auto add = [&](const char* name, const char* help, auto handler) {
        CLI::App* s = app.add_subcommand(name, help);
        handlers[name] = handler;
        return s;
    };

    CLI::App* s;
    s = add("eval", "evaluate the Cauchy-type integral at probe points", cmd_eval);
    contour_opt(s), density_opt(s), probe_opt(s), common_quadrature(s);
    s = add("pv", "principal value of the singular integral at a contour parameter", cmd_pv);
    contour_opt(s), density_opt(s), common_quadrature(s);
    s->add_option("--tau0", o.tau0, "contour parameter in [0,1]");
    s = add("jump", "boundary values and the jump decomposition", cmd_jump);
    contour_opt(s), density_opt(s), probe_opt(s), common_quadrature(s);
    s->add_option("--grid", o.grid, "number of boundary parameters (default 16)");
    s->add_flag("--side-limits", o.side_limits, "also approach each boundary point along the normal");
    s = add("bvp", "solvability of the holomorphic boundary value problem", cmd_bvp);
    contour_opt(s), probe_opt(s), common_quadrature(s);
    s->add_option("--u", o.u, "boundary data: preset, expression in t, or @file.csv");
    s->add_option("--tol", o.tol, "tolerance on |Phi-| (default 1e-7 times the data scale)");
    s = add("faber", "Faber polynomials of an exterior map", cmd_faber);
    s->add_option("--map", o.map, "disk:R, segment:S, ellipse:A,B or laurent:file");
    s->add_option("--n", o.n, "highest degree");
    s->add_option("--route", o.route, "formal or quadrature");
    s->add_option("--radius", o.radius, "extraction circle radius for the quadrature route");
    s = add("faber-series", "Faber series of an analytic function", cmd_faber_series);
    s->add_option("--map", o.map, "disk:R, segment:S, ellipse:A,B or laurent:file");
    s->add_option("--f", o.f, "function of z");
    s->add_option("--n", o.n, "highest index");
    probe_opt(s);
    s = add("holder", "Hölder certification and index estimate", cmd_holder);
    contour_opt(s), density_opt(s);
    s->add_option("--index", o.index, "Hölder index to certify");
    s->add_option("--constant", o.constant, "Hölder constant to certify");
    s->add_option("--grid", o.grid, "parameter grid size (default 256)");
    s = add("series-inf", "expansion of the Cauchy-type integral at infinity", cmd_series_inf);
    contour_opt(s), density_opt(s), probe_opt(s), common_quadrature(s);
    s->add_option("--n", o.n, "number of coefficients (default 8)");
    s = add("verify-cif", "check the Cauchy integral formula at probes", cmd_verify_cif);
    contour_opt(s), probe_opt(s), common_quadrature(s);
    s->add_option("--f", o.f, "function of z");
    s->add_option("--kind", o.kind, "I (interior) or II (exterior)");
    s->add_option("--f-inf", o.f_inf, "value at infinity re,im (kind II)");
    s = add("convergence", "convergence table over a node schedule", cmd_convergence);
    contour_opt(s), density_opt(s), probe_opt(s);
    s->add_option("--of", o.of, "eval, pv or length");
    s->add_option("--tau0", o.tau0, "contour parameter for --of pv");
    s->add_option("--schedule", o.schedule, "node counts, e.g. 32,64,128")->delimiter(',');
    s->add_option("--rule", o.rule, "trapezoid, gauss or auto");

    for (CLI::App* sub : app.get_subcommands({})) format_opt(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::input_error;
    }
    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    if (o.format.empty()) o.format = command == "convergence" ? "csv" : "json";
    if (o.format == "csv" && command != "convergence") {
        err << "error: --format csv is only available for convergence\n";
        return ExitCode::input_error;
    }

    auto start = std::chrono::steady_clock::now();
    json report = {{"command", command}, {"version", kVersion}};
    int code = ExitCode::ok;
    Outcome outcome;
    try {
        outcome = handlers.at(command)(o);
        report["status"] = "ok";
        report["inputs"] = outcome.inputs;
        report["results"] = outcome.results;
    } catch (const Error& e) {
        code = e.is_numerical() ? ExitCode::numerical_error : ExitCode::input_error;
        report["status"] = "error";
        report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    }
    report["wall_time"] = num(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());

    if (code == ExitCode::ok && o.format == "csv") print_csv(outcome, out);
    else if (o.format == "table") print_table(report, "", out);
    else out << report.dump(2) << "\n";
    return code;
}

bool validate_report(std::string_view text, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        return fail(std::string("not JSON: ") + e.what());
    }
    if (!j.is_object()) return fail("report is not an object");
    for (const char* k : {"command", "version", "status"})
        if (!j.contains(k) || !j[k].is_string()) return fail(std::string("missing string field '") + k + "'");
    if (!j.contains("wall_time") || !j["wall_time"].is_number()) return fail("missing wall_time");
    if (j["status"] == "ok") {
        if (!j.contains("inputs") || !j["inputs"].is_object()) return fail("missing inputs object");
        if (!j.contains("results") || !j["results"].is_object()) return fail("missing results object");
        return true;
    }
    if (j["status"] == "error") {
        if (!j.contains("error") || !j["error"].is_object() || !j["error"].contains("kind") ||
            !j["error"].contains("message"))
            return fail("error report without kind and message");
        return true;
    }
    return fail("status must be ok or error");
}

}  // namespace cauchy_jump::cli
