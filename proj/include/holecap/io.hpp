#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "holecap/capacity.hpp"
#include "holecap/geometry.hpp"
#include "holecap/germ.hpp"
#include "holecap/splitting.hpp"

namespace holecap::io {

using nlohmann::json;

// {"shape": "circle", "radius": r, "center": [x, y]}
// {"shape": "ellipse", "a": a, "b": b, "center": [x, y]}
// {"shape": "trig", "center": [x, y], "xc": [...], "xs": [...], "yc": [...], "ys": [...]}
ClosedCurve curve_from_json(const json& j);
json curve_to_json(const ClosedCurve& c);

// {"degree": D, "coeffs": [[h, j, value], ...], "label": "..."}
AnalyticGerm germ_from_json(const json& j);
json germ_to_json(const AnalyticGerm& g);

// Accepts inline JSON text or a path to a JSON file.
json load_json_arg(const std::string& text_or_path);

// "1e-1,1e-2" or "dyadic:start:count" (start, start/2, ...).
std::vector<double> parse_eps_list(const std::string& text);

json expansion_to_json(const CapacityExpansion& e);
json report_to_json(const SplittingReport& r, const std::vector<double>& eps_grid);

// Full-precision number formatting for CSV cells.
std::string format_double(double v);
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace holecap::io
