#include "cauchy_jump/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cauchy_jump/error.hpp"

namespace cauchy_jump {

using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse, std::string("cannot open ") + what + " file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("malformed ") + what + " JSON at byte " + std::to_string(e.byte) +
                                          ": " + e.what());
    }
}

bool looks_inline(std::string_view s) {
    auto p = s.find_first_not_of(" \t\r\n");
    return p != std::string_view::npos && s[p] == '{';
}

const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.contains(name)) throw Error(ErrorKind::parse, where + ": missing field '" + name + "'");
    return j.at(name);
}

double number(const json& j, const char* name, const std::string& where) {
    const json& v = field(j, name, where);
    if (!v.is_number()) throw Error(ErrorKind::parse, where + ": field '" + name + "' must be a number");
    return v.get<double>();
}

cplx point(const json& v, const std::string& where) {
    if (v.is_number()) return v.get<double>();
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw Error(ErrorKind::parse, where + ": expected a point [re, im]");
    return {v[0].get<double>(), v[1].get<double>()};
}

cplx point_field(const json& j, const char* name, const std::string& where, std::optional<cplx> fallback = {}) {
    if (!j.contains(name)) {
        if (fallback) return *fallback;
        throw Error(ErrorKind::parse, where + ": missing field '" + name + "'");
    }
    return point(j.at(name), where + "." + name);
}

Contour contour_from(const json& j, const std::string& where) {
    if (!j.is_object()) throw Error(ErrorKind::parse, where + ": contour spec must be a JSON object");
    const json& kind_v = field(j, "kind", where);
    if (!kind_v.is_string()) throw Error(ErrorKind::parse, where + ": 'kind' must be a string");
    const std::string kind = kind_v.get<std::string>();
    Contour c = [&] {
        if (kind == "circle") return Contour::circle(point_field(j, "center", where, cplx{}), number(j, "radius", where));
        if (kind == "ellipse")
            return Contour::ellipse(point_field(j, "center", where, cplx{}), number(j, "a", where), number(j, "b", where));
        if (kind == "segment") return Contour::segment(point_field(j, "a", where), point_field(j, "b", where));
        if (kind == "arc")
            return Contour::arc(point_field(j, "center", where, cplx{}), number(j, "radius", where),
                                number(j, "theta0", where), number(j, "theta1", where));
        if (kind == "fourier") {
            const json& terms = field(j, "terms", where);
            if (!terms.is_array()) throw Error(ErrorKind::parse, where + ": 'terms' must be an array");
            std::vector<Contour::FourierTerm> ts;
            for (std::size_t i = 0; i < terms.size(); ++i) {
                std::string w = where + ".terms[" + std::to_string(i) + "]";
                const json& k = field(terms[i], "k", w);
                if (!k.is_number_integer()) throw Error(ErrorKind::parse, w + ": 'k' must be an integer");
                ts.push_back({k.get<int>(), point_field(terms[i], "c", w)});
            }
            return Contour::fourier(std::move(ts));
        }
        if (kind == "piecewise") {
            const json& pieces = field(j, "pieces", where);
            if (!pieces.is_array()) throw Error(ErrorKind::parse, where + ": 'pieces' must be an array");
            std::vector<Contour> ps;
            for (std::size_t i = 0; i < pieces.size(); ++i)
                ps.push_back(contour_from(pieces[i], where + ".pieces[" + std::to_string(i) + "]"));
            bool closed = j.contains("closed") && j.at("closed").is_boolean() && j.at("closed").get<bool>();
            return Contour::piecewise(ps, closed);
        }
        throw Error(ErrorKind::parse, where + ": unknown contour kind '" + kind + "'");
    }();
    if (j.contains("closed")) {
        if (!j.at("closed").is_boolean()) throw Error(ErrorKind::parse, where + ": 'closed' must be true or false");
        if (j.at("closed").get<bool>() != c.closed())
            throw Error(ErrorKind::parse, where + ": 'closed' contradicts contour kind '" + kind + "'");
    }
    return c;
}

json rational_json(const Rational& q) {
    using boost::multiprecision::cpp_int;
    auto part = [](const cpp_int& v) -> json {
        if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
            return v.convert_to<long long>();
        return v.str();
    };
    return json::array({part(boost::multiprecision::numerator(q)), part(boost::multiprecision::denominator(q))});
}

Rational rational_from(const json& v, const std::string& where) {
    auto part = [&](const json& p) -> boost::multiprecision::cpp_int {
        if (p.is_number_integer()) return boost::multiprecision::cpp_int(p.get<long long>());
        if (p.is_string()) {
            Rational q = parse_rational(p.get<std::string>());
            if (boost::multiprecision::denominator(q) != 1) throw Error(ErrorKind::parse, where + ": expected an integer");
            return boost::multiprecision::numerator(q);
        }
        throw Error(ErrorKind::parse, where + ": rational parts must be integers");
    };
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (!v.is_array() || v.size() != 2) throw Error(ErrorKind::parse, where + ": expected [numerator, denominator]");
    auto den = part(v[1]);
    if (den == 0) throw Error(ErrorKind::division_by_zero, where + ": zero denominator");
    return Rational(part(v[0]), den);
}

}  // namespace

Contour contour_from_json(std::string_view text) { return contour_from(parse_json(text, "contour"), "contour"); }

Contour load_contour(std::string_view spec) {
    if (looks_inline(spec)) return contour_from_json(spec);
    return contour_from_json(read_file(std::string(spec), "contour"));
}

Density load_density(const Contour& contour, std::string_view spec) {
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in{std::string(spec.substr(1))};
        if (!in) throw Error(ErrorKind::parse, "cannot open density file '" + std::string(spec.substr(1)) + "'");
        return Density::from_csv(contour, in);
    }
    return Density::preset(contour, spec);
}

ExteriorMap load_map(std::string_view spec) {
    if (spec.substr(0, 8) != "laurent:") return ExteriorMap::parse(spec);
    std::string text = read_file(std::string(spec.substr(8)), "map");
    json j = parse_json(text, "map");
    Annulus annulus;
    if (j.contains("inner_radius")) annulus.inner = number(j, "inner_radius", "map");
    if (j.contains("outer_radius")) annulus.outer = number(j, "outer_radius", "map");
    return ExteriorMap::from_laurent(series_from_json(text), annulus);
}

std::string series_to_json(const LaurentPoly& p) {
    json j;
    j["mode"] = p.mode() == CoefficientMode::rational ? "rational" : "complex";
    j["expansion"] = p.expansion() == Expansion::at_zero ? "at_zero" : "at_infinity";
    j["truncation"] = p.truncation();
    j["horizon"] = p.horizon();
    json terms = json::object();
    for (const auto& [e, c] : p.terms()) {
        if (c.is_exact) terms[std::to_string(e)] = rational_json(c.exact);
        else terms[std::to_string(e)] = json::array({c.value.real(), c.value.imag()});
    }
    j["terms"] = terms;
    return j.dump();
}

LaurentPoly series_from_json(std::string_view text) {
    json j = parse_json(text, "series");
    if (!j.is_object()) throw Error(ErrorKind::parse, "series: expected a JSON object");
    std::string mode = j.value("mode", "rational");
    std::string exp = j.value("expansion", "at_infinity");
    if (mode != "rational" && mode != "complex") throw Error(ErrorKind::parse, "series: unknown mode '" + mode + "'");
    if (exp != "at_infinity" && exp != "at_zero") throw Error(ErrorKind::parse, "series: unknown expansion '" + exp + "'");
    Expansion expansion = exp == "at_zero" ? Expansion::at_zero : Expansion::at_infinity;
    const json& terms = field(j, "terms", "series");
    if (!terms.is_object()) throw Error(ErrorKind::parse, "series: 'terms' must map exponents to coefficients");
    int truncation = j.contains("truncation") ? field(j, "truncation", "series").get<int>() : -1;

    auto exponent = [](const std::string& key) {
        int e = 0;
        const char* b = key.data();
        if (!key.empty() && key[0] == '+') ++b;
        auto [ptr, ec] = std::from_chars(b, key.data() + key.size(), e);
        if (ec != std::errc() || ptr != key.data() + key.size())
            throw Error(ErrorKind::parse, "series: exponent key '" + key + "' is not an integer");
        return e;
    };
    auto span_of = [&](int lo, int hi) { return hi - lo; };
    if (mode == "rational") {
        std::map<int, Rational> m;
        for (const auto& [k, v] : terms.items()) m[exponent(k)] = rational_from(v, "series.terms." + k);
        if (truncation < 0) truncation = m.empty() ? 0 : span_of(m.begin()->first, m.rbegin()->first);
        return LaurentPoly::from_terms(m, truncation, expansion);
    }
    std::map<int, cplx> m;
    for (const auto& [k, v] : terms.items()) m[exponent(k)] = point(v, "series.terms." + k);
    if (truncation < 0) truncation = m.empty() ? 0 : span_of(m.begin()->first, m.rbegin()->first);
    return LaurentPoly::from_terms(m, truncation, expansion);
}

cplx parse_point(std::string_view text) {
    std::string s(text);
    auto comma = s.find(',');
    auto num = [&](const std::string& part) {
        try {
            std::size_t used = 0;
            double v = std::stod(part, &used);
            if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw Error(ErrorKind::parse, "malformed point '" + s + "' (expected re,im)");
        }
    };
    if (comma == std::string::npos) return num(s);
    return {num(s.substr(0, comma)), num(s.substr(comma + 1))};
}

}  // namespace cauchy_jump
