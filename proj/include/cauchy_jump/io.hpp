#pragma once

#include <string>
#include <string_view>

#include "cauchy_jump/contour.hpp"
#include "cauchy_jump/density.hpp"
#include "cauchy_jump/faber.hpp"
#include "cauchy_jump/series.hpp"

namespace cauchy_jump {

/// Contour from JSON text. Points are [re, im] pairs.
///
///   {"kind": "circle", "center": [0, 0], "radius": 1}
///   {"kind": "ellipse", "center": [0, 0], "a": 2, "b": 1}
///   {"kind": "segment", "a": [-1, 0], "b": [1, 0]}
///   {"kind": "arc", "center": [0, 0], "radius": 1, "theta0": 0, "theta1": 1.5}
///   {"kind": "fourier", "terms": [{"k": 1, "c": [1, 0]}, {"k": -2, "c": [0.1, 0]}]}
///   {"kind": "piecewise", "pieces": [...], "closed": true}
///
/// "closed" is optional and must agree with the kind when given.
Contour contour_from_json(std::string_view text);
/// Inline JSON (first non-blank character '{') or a path to a JSON file.
Contour load_contour(std::string_view spec);

/// Preset name or expression in t; "@path" reads a CSV with columns t, re, im.
Density load_density(const Contour& contour, std::string_view spec);

/// "disk:R", "segment:S", "ellipse:A,B" or "laurent:path" (series JSON with
/// optional "inner_radius" and "outer_radius").
ExteriorMap load_map(std::string_view spec);

/// {"mode": "rational"|"complex", "expansion": "at_infinity"|"at_zero",
///  "truncation": d, "terms": {"k": [num, den] or [re, im], ...}}.
std::string series_to_json(const LaurentPoly& p);
LaurentPoly series_from_json(std::string_view text);

/// "re,im" or "re".
cplx parse_point(std::string_view text);

}  // namespace cauchy_jump
