#include <cstdlib>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cauchy_jump/cli.hpp"
#include "support.hpp"

using json = nlohmann::json;
using namespace cauchy_jump;

namespace {

const std::string kCircle = R"({"kind":"circle","center":[0,0],"radius":1})";
const std::string kEllipse = R"({"kind":"ellipse","center":[0,0],"a":2,"b":1})";

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    Run r = run_cli(std::move(args));
    REQUIRE_MESSAGE(r.code == 0, r.err);
    std::string reason;
    CHECK_MESSAGE(cli::validate_report(r.out, &reason), reason);
    return json::parse(r.out);
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "N,value_re,value_im,error_estimate");
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        REQUIRE(row.size() == 4);
        rows.push_back(row);
    }
    return rows;
}

std::string without_wall_time(std::string report) {
    json j = json::parse(report);
    j.erase("wall_time");
    return j.dump();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pv on the unit circle") {
    json j = run_json({"pv", "--contour", kCircle, "--density", "one", "--tau0", "0.25"});
    CHECK(j["command"] == "pv");
    CHECK(j["status"] == "ok");
    CHECK(j["version"] == cli::kVersion);
    CHECK(std::abs(j["results"]["value"][0].get<double>()) <= 1e-12);
    CHECK(std::abs(j["results"]["value"][1].get<double>() - std::numbers::pi) <= 1e-12);
}

TEST_CASE("bvp with u = 1/t") {
    json j = run_json({"bvp", "--contour", kCircle, "--u", "1/t"});
    CHECK(j["results"]["solvable"] == false);
    auto w = j["results"]["witness"];
    CHECK(std::abs(w["probe"][0].get<double>() - 2.0) <= 1e-12);
    CHECK(std::abs(w["probe"][1].get<double>()) <= 1e-12);
    CHECK(std::abs(w["modulus"].get<double>() - 0.5) <= 1e-9);

    json ok = run_json({"bvp", "--contour", kCircle, "--u", "t^2"});
    CHECK(ok["results"]["solvable"] == true);
    CHECK(ok["results"]["boundary_residual"].get<double>() <= 1e-8);
}

TEST_CASE("faber for disk:2") {
    json j = run_json({"faber", "--map", "disk:2", "--n", "3"});
    json expected = json::parse(R"([["1"],["0","1/2"],["0","0","1/4"],["0","0","0","1/8"]])");
    CHECK(j["results"]["polynomials"] == expected);
    json q = run_json({"faber", "--map", "segment:2", "--n", "2", "--route", "quadrature", "--radius", "3"});
    auto psi2 = q["results"]["polynomials"][2];
    CHECK(std::abs(psi2[0][0].get<double>() + 2.0) <= 1e-8);
    CHECK(std::abs(psi2[2][0].get<double>() - 1.0) <= 1e-8);
}

TEST_CASE("convergence tables") {
    Run pv = run_cli({"convergence", "--of", "pv", "--contour", kCircle, "--density", "one", "--tau0", "0.25",
                      "--schedule", "32,64,128"});
    REQUIRE(pv.code == 0);
    auto rows = parse_csv(pv.out);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][3] <= rows[i - 1][3]);

    Run ev = run_cli({"convergence", "--of", "eval", "--contour", kCircle, "--density", "re", "--probe", "0.5",
                      "--schedule", "16,32,64"});
    REQUIRE(ev.code == 0);
    rows = parse_csv(ev.out);
    REQUIRE(rows.size() == 3);
    // Oracle Phi+(z) = z/2.
    std::vector<double> err;
    for (const auto& r : rows) err.push_back(std::abs(std::complex<double>(r[1], r[2]) - 0.25));
    CHECK(err[0] >= 10.0 * err[1]);
    CHECK((err[1] >= 10.0 * err[2] || err[2] <= 1e-15));

    Run len = run_cli({"convergence", "--of", "length", "--contour", kEllipse, "--schedule", "8,16,32,64"});
    REQUIRE(len.code == 0);
    rows = parse_csv(len.out);
    CHECK(std::abs(rows.back()[1] - 9.68844822054767) <= 1e-12);
}

TEST_CASE("input errors exit with 2") {
    Run bad_json = run_cli({"pv", "--contour", R"({"kind":"circle",)", "--density", "one", "--tau0", "0"});
    CHECK(bad_json.code == cli::input_error);
    CHECK(bad_json.err.find("byte") != std::string::npos);
    CHECK(cli::validate_report(bad_json.out));
    CHECK(json::parse(bad_json.out)["error"]["kind"] == "parse");

    CHECK(run_cli({"pv", "--bogus"}).code == cli::input_error);
    CHECK(run_cli({}).code == cli::input_error);
    CHECK(run_cli({"frobnicate"}).code == cli::input_error);
    CHECK(run_cli({"eval", "--contour", kCircle, "--density", "one"}).code == cli::input_error);
    CHECK(run_cli({"pv", "--contour", kCircle, "--density", "one", "--tau0", "0", "--format", "csv"}).code ==
          cli::input_error);
    CHECK(run_cli({"convergence", "--of", "length", "--contour", kCircle, "--schedule", "64,32"}).code ==
          cli::input_error);
    CHECK(run_cli({"faber", "--map", "square:2", "--n", "3"}).code == cli::input_error);
    CHECK(run_cli({"eval", "--contour", kCircle, "--density", "t +* 1", "--probe", "0"}).code == cli::input_error);
}

TEST_CASE("numerical failures exit with 3") {
    // sqrt(t(1-t)) has a square-root kink at the join, so normal extrapolation there fails.
    Run r = run_cli({"jump", "--contour", kCircle, "--density", "sqrt_pullback", "--grid", "8", "--side-limits"});
    CHECK(r.code == cli::numerical_error);
    CHECK(json::parse(r.out)["error"]["kind"] == "convergence");
}

TEST_CASE("jump side limits agree with the boundary values") {
    json j = run_json({"jump", "--contour", kEllipse, "--density", "re", "--grid", "8", "--side-limits"});
    CHECK(j["results"]["max_jump_residual"].get<double>() <= 1e-8);
    CHECK(j["results"]["max_sokhotski_gap"].get<double>() <= 1e-6);
}

TEST_CASE("reports validate and are deterministic") {
    std::vector<std::vector<std::string>> commands = {
        {"eval", "--contour", kCircle, "--density", "re", "--probe", "0.5", "--probe", "2,1"},
        {"jump", "--contour", R"({"kind":"segment","a":[-1,0],"b":[1,0]})", "--density", "one", "--grid", "4"},
        {"holder", "--contour", R"({"kind":"segment","a":[0,0],"b":[1,0]})", "--density", "sqrt(re(t))", "--index",
         "0.5", "--constant", "1"},
        {"series-inf", "--contour", kCircle, "--density", "re", "--n", "4"},
        {"verify-cif", "--contour", kCircle, "--f", "1/z", "--kind", "II", "--f-inf", "0", "--probe", "0.5", "--probe",
         "2"},
        {"faber-series", "--map", "segment:2", "--f", "1/(z-3)", "--n", "30"},
    };
    for (const auto& args : commands) {
        Run a = run_cli(args), b = run_cli(args);
        REQUIRE_MESSAGE(a.code == 0, args[0], ": ", a.err);
        std::string reason;
        CHECK_MESSAGE(cli::validate_report(a.out, &reason), args[0], ": ", reason);
        CHECK(without_wall_time(a.out) == without_wall_time(b.out));
        CHECK(cli::validate_report(json::parse(a.out).dump()));
    }
    CHECK_FALSE(cli::validate_report("{"));
    CHECK_FALSE(cli::validate_report(R"({"command":"pv"})"));
}

TEST_CASE("subcommand results") {
    json h = run_json({"holder", "--contour", R"({"kind":"segment","a":[0,0],"b":[1,0]})", "--density",
                       "sqrt(re(t))", "--index", "0.75", "--constant", "1"});
    CHECK(h["results"]["certificate"]["pass"] == false);
    CHECK(h["results"]["estimate"]["estimated_index"].get<double>() == doctest::Approx(0.5).epsilon(0.1));
    json c = run_json({"verify-cif", "--contour", kCircle, "--f", "z^2", "--kind", "I", "--probe", "0.3,0.1"});
    CHECK(c["results"]["max_deviation"].get<double>() <= 1e-12);
    json fs = run_json({"faber-series", "--map", "segment:2", "--f", "1/(z-3)", "--n", "30"});
    CHECK(fs["results"]["max_error"].get<double>() <= 1e-6);
}

TEST_CASE("table format") {
    Run r = run_cli({"pv", "--contour", kCircle, "--density", "one", "--tau0", "0.25", "--format", "table"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("results.value = [0, 3.1415927]") != std::string::npos);
}

TEST_CASE("CAUCHY_JUMP_NODES sets the default node count") {
    ::setenv("CAUCHY_JUMP_NODES", "64", 1);
    json j = run_json({"pv", "--contour", kCircle, "--density", "re", "--tau0", "0.1"});
    CHECK(j["inputs"]["quadrature"]["nodes"] == 64);
    json k = run_json({"pv", "--contour", kCircle, "--density", "re", "--tau0", "0.1", "--nodes", "32"});
    CHECK(k["inputs"]["quadrature"]["nodes"] == 32);
    ::setenv("CAUCHY_JUMP_NODES", "lots", 1);
    CHECK(run_cli({"pv", "--contour", kCircle, "--density", "re", "--tau0", "0.1"}).code == cli::input_error);
    ::unsetenv("CAUCHY_JUMP_NODES");
}

}  // TEST_SUITE
