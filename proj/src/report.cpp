#include "wgeom/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace wgeom::report {

namespace {

std::string to_chars_string(double v, int precision) {
  char buf[64];
  std::to_chars_result res =
      precision > 0 ? std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision)
                    : std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view field) {
  const auto first = field.find_first_not_of(" \t");
  if (first == std::string_view::npos)
    throw InconsistentInputs("empty coefficient field");
  const auto last = field.find_last_not_of(" \t");
  field = field.substr(first, last - first + 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw InconsistentInputs("cannot parse coefficient '" + std::string(field) + "'");
  return value;
}

}  // namespace

std::string fmt15(double v) { return to_chars_string(v, 15); }

std::string fmt_shortest(double v) { return to_chars_string(v, 0); }

Json json_number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json json_array(const Vector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Json measure_report(const WState& w, const MeasureResult& m) {
  Json j;
  j["n"] = w.n();
  j["coeffs"] = json_array(w.user_coeffs());
  j["class"] = to_string(m.cls);
  j["branch"] = to_string(m.branch.branch);
  j["r"] = json_number(m.branch.r);
  j["r1"] = json_number(m.branch.r1);
  j["r2"] = json_number(m.branch.r2);
  j["g"] = m.g;
  j["g_squared"] = m.g_squared;
  j["e_g_nats"] = m.e_g;
  j["thetas"] = json_array(m.nearest.thetas);
  j["x"] = m.dual ? json_array(m.dual->x) : Json(nullptr);
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < m.nearest.thetas.size(); ++k)
    amps.push_back(Json::array({std::sin(m.nearest.thetas[k]), std::cos(m.nearest.thetas[k])}));
  j["nearest_product_amplitudes"] = std::move(amps);
  j["residual_stationarity"] = m.diagnostics.stationarity;
  j["residual_constraint"] = m.diagnostics.constraint;
  return j;
}

Json duality_w2x_report(const WState& w, const UnitVector& x, const ProductState& nearest) {
  Json j;
  j["direction"] = "w_to_x";
  j["n"] = w.n();
  j["coeffs"] = json_array(w.user_coeffs());
  j["x"] = json_array(x.x);
  j["thetas"] = json_array(nearest.thetas);
  return j;
}

Json duality_x2w_report(const UnitVector& x, const WState& w) {
  Json j;
  j["direction"] = "x_to_w";
  j["n"] = x.x.size();
  j["x"] = json_array(x.x);
  j["coeffs"] = json_array(w.user_coeffs());
  j["thetas"] = json_array(x.x.array().acos().matrix());
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "null";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt15(v.get<double>());
  return v.dump();
}

void render_into(const Json& j, const std::string& prefix, std::ostringstream& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      render_into(value, name, out);
    } else if (value.is_array()) {
      out << name << ": [";
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out << ", ";
        out << (value[i].is_array() ? "[" + scalar_text(value[i][0]) + ", " + scalar_text(value[i][1]) + "]"
                                    : scalar_text(value[i]));
      }
      out << "]\n";
    } else {
      out << name << ": " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render_into(j, "", out);
  return out.str();
}

void write_curves_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
  os << "r,f_plus,f_minus,target\n";
  for (const CurveRow& row : rows)
    os << fmt_shortest(row.r) << ',' << fmt_shortest(row.f_plus) << ','
       << fmt_shortest(row.f_minus) << ',' << fmt_shortest(row.target) << '\n';
}

Vector parse_coeffs_csv(const std::string& csv) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    const std::string_view field(csv.data() + start,
                                 (comma == std::string::npos ? csv.size() : comma) - start);
    values.push_back(parse_double(field));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

Vector load_coeffs_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InconsistentInputs("cannot open input file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InconsistentInputs(std::string("input file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("coefficients") || !doc["coefficients"].is_array())
    throw InconsistentInputs("input file must be an object with a 'coefficients' array");
  const Json& arr = doc["coefficients"];
  Vector values(static_cast<Eigen::Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number())
      throw InconsistentInputs("coefficients array must contain only numbers");
    values[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
  }
  return values;
}

}  // namespace wgeom::report
