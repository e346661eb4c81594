#pragma once

#include "wgeom/branch.hpp"
#include "wgeom/measure.hpp"
#include "wgeom/types.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace wgeom::report {

using Json = nlohmann::ordered_json;

/// General format, 15 significant digits. Used for text reports.
std::string fmt15(double v);

/// Shortest representation that parses back to the same double. Used for CSV.
std::string fmt_shortest(double v);

Json json_number(double v);  // null when v is not finite
Json json_array(const Vector& v);

Json measure_report(const WState& w, const MeasureResult& m);
Json duality_w2x_report(const WState& w, const UnitVector& x, const ProductState& nearest);
Json duality_x2w_report(const UnitVector& x, const WState& w);

/// Flat `key: value` lines; nested objects use dotted keys.
std::string render_text(const Json& j);

void write_curves_csv(std::ostream& os, const std::vector<CurveRow>& rows);

Vector parse_coeffs_csv(const std::string& csv);
Vector load_coeffs_json(const std::string& path);

}  // namespace wgeom::report
