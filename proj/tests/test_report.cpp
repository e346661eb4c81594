#include "wgeom/report.hpp"

#include "wgeom/duality.hpp"
#include "wgeom/sampling.hpp"

#include "doctest.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace wgeom;
namespace rep = wgeom::report;

namespace {

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
}

}  // namespace

TEST_CASE("fmt15 prints 15 significant digits in general form") {
  CHECK(rep::fmt15(0.25) == "0.25");
  CHECK(rep::fmt15(2.0 / 3.0) == "0.666666666666667");
  CHECK(rep::fmt15(0.0) == "0");
  Rng rng(4242);
  for (int i = 0; i < 50; ++i) {
    const double v = rng.normal();
    const double back = std::stod(rep::fmt15(v));
    CHECK(std::abs(back - v) <= 1e-14 * std::abs(v));
  }
}

TEST_CASE("fmt_shortest round-trips every double bit for bit") {
  CHECK(rep::fmt_shortest(0.1) == "0.1");
  CHECK(rep::fmt_shortest(2.0) == "2");
  Rng rng(555);
  for (int i = 0; i < 200; ++i) {
    const double v = rng.normal() * std::exp(10.0 * (rng.uniform01() - 0.5));
    CHECK(std::stod(rep::fmt_shortest(v)) == v);
  }
}

TEST_CASE("json_number maps non-finite values to null") {
  CHECK(rep::json_number(1.5).get<double>() == 1.5);
  CHECK(rep::json_number(std::numeric_limits<double>::infinity()).is_null());
  CHECK(rep::json_number(std::numeric_limits<double>::quiet_NaN()).is_null());
}

TEST_CASE("parse_coeffs_csv accepts spaces and scientific notation") {
  const Vector v = rep::parse_coeffs_csv("0.3, 0.4 ,\t5e-1");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == 0.3);
  CHECK(v[1] == 0.4);
  CHECK(v[2] == 0.5);

  const Vector single = rep::parse_coeffs_csv("1.0");
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 1.0);
}

TEST_CASE("parse_coeffs_csv rejects malformed fields") {
  CHECK_THROWS_AS(rep::parse_coeffs_csv(""), InconsistentInputs);
  CHECK_THROWS_AS(rep::parse_coeffs_csv("0.3,,0.5"), InconsistentInputs);
  CHECK_THROWS_AS(rep::parse_coeffs_csv("abc"), InconsistentInputs);
  CHECK_THROWS_AS(rep::parse_coeffs_csv("0.3x,0.5"), InconsistentInputs);
  CHECK_THROWS_AS(rep::parse_coeffs_csv("0.3,0.4,"), InconsistentInputs);
}

TEST_CASE("load_coeffs_json reads a coefficients object") {
  const std::string path = "/tmp/wgeom_report_ok.json";
  write_file(path, R"({"coefficients": [0.6, 0.8], "note": "ignored"})");
  const Vector v = rep::load_coeffs_json(path);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == 0.6);
  CHECK(v[1] == 0.8);
}

TEST_CASE("load_coeffs_json rejects bad files") {
  CHECK_THROWS_AS(rep::load_coeffs_json("/tmp/wgeom_no_such_file.json"), InconsistentInputs);

  write_file("/tmp/wgeom_report_bad1.json", "{not json");
  CHECK_THROWS_AS(rep::load_coeffs_json("/tmp/wgeom_report_bad1.json"), InconsistentInputs);

  write_file("/tmp/wgeom_report_bad2.json", R"({"values": [1, 2]})");
  CHECK_THROWS_AS(rep::load_coeffs_json("/tmp/wgeom_report_bad2.json"), InconsistentInputs);

  write_file("/tmp/wgeom_report_bad3.json", R"([0.6, 0.8])");
  CHECK_THROWS_AS(rep::load_coeffs_json("/tmp/wgeom_report_bad3.json"), InconsistentInputs);

  write_file("/tmp/wgeom_report_bad4.json", R"({"coefficients": [0.6, "x"]})");
  CHECK_THROWS_AS(rep::load_coeffs_json("/tmp/wgeom_report_bad4.json"), InconsistentInputs);
}

TEST_CASE("measure_report lays out the full schema in order") {
  const WState w = make_wstate(Vector(Vector::Constant(3, 1.0 / std::sqrt(3.0))), true);
  const rep::Json j = rep::measure_report(w, nearest_product(w));

  const std::vector<std::string> expected = {
      "n",  "coeffs",    "class",  "branch", "r",
      "r1", "r2",        "g",      "g_squared", "e_g_nats",
      "thetas", "x", "nearest_product_amplitudes", "residual_stationarity",
      "residual_constraint"};
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == expected);

  CHECK(j["n"] == 3);
  CHECK(j["class"] == "highly_entangled_symmetric");
  CHECK(j["branch"] == "plus");
  CHECK(j["g_squared"].get<double>() == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
  REQUIRE(j["x"].is_array());
  CHECK(j["x"].size() == 3);
  REQUIRE(j["nearest_product_amplitudes"].size() == 3);
  const double sin_theta = j["nearest_product_amplitudes"][0][0].get<double>();
  CHECK(sin_theta == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("trivial classes report null r and null x") {
  Vector c(3);
  c << 0.3, 0.4, std::sqrt(0.75);
  const WState w = make_wstate(c, false);
  const rep::Json j = rep::measure_report(w, nearest_product(w));
  CHECK(j["branch"] == "trivial");
  CHECK(j["r"].is_null());
  CHECK(j["x"].is_null());
  CHECK(j["r1"].get<double>() > 0.0);
  CHECK(j["r2"].get<double>() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(j["g"].get<double>() == std::sqrt(0.75));
}

TEST_CASE("duality reports carry direction and both coordinate sets") {
  const WState w = make_wstate(Vector(Vector::Constant(3, 1.0 / std::sqrt(3.0))), true);
  const UnitVector x = w_to_unit_vector(w);
  const rep::Json fwd = rep::duality_w2x_report(w, x, unit_vector_to_product(x));
  CHECK(fwd["direction"] == "w_to_x");
  CHECK(fwd["n"] == 3);
  CHECK(fwd["x"].size() == 3);
  CHECK(fwd["thetas"].size() == 3);

  const rep::Json rev = rep::duality_x2w_report(x, unit_vector_to_w(x));
  CHECK(rev["direction"] == "x_to_w");
  CHECK(rev["coeffs"].size() == 3);
  const double theta = rev["thetas"][0].get<double>();
  CHECK(theta == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-14));
}

TEST_CASE("render_text flattens nested keys and formats scalars") {
  rep::Json j;
  j["g"] = 2.0 / 3.0;
  j["n"] = 3;
  j["label"] = "plus";
  j["ok"] = true;
  j["missing"] = nullptr;
  j["inner"]["value"] = 0.25;
  j["list"] = rep::Json::array({1.5, 2.5});
  j["pairs"] = rep::Json::array({rep::Json::array({0.5, 0.25})});

  const std::string text = rep::render_text(j);
  CHECK(text == "g: 0.666666666666667\n"
                "n: 3\n"
                "label: plus\n"
                "ok: true\n"
                "missing: null\n"
                "inner.value: 0.25\n"
                "list: [1.5, 2.5]\n"
                "pairs: [[0.5, 0.25]]\n");
}

TEST_CASE("write_curves_csv emits exact round-trip rows") {
  Vector c(3);
  c << 0.4, 0.5, std::sqrt(1.0 - 0.16 - 0.25);
  const WState w = make_wstate(c, false);
  const auto rows = sample_branch_curves(w, w.max_coeff(), 2.0, 3);

  std::ostringstream out;
  rep::write_curves_csv(out, rows);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "r,f_plus,f_minus,target");
  for (const CurveRow& row : rows) {
    REQUIRE(std::getline(in, line));
    std::istringstream fields(line);
    std::string field;
    std::getline(fields, field, ',');
    CHECK(std::stod(field) == row.r);
    std::getline(fields, field, ',');
    CHECK(std::stod(field) == row.f_plus);
    std::getline(fields, field, ',');
    CHECK(std::stod(field) == row.f_minus);
    std::getline(fields, field, ',');
    CHECK(std::stod(field) == row.target);
  }
  CHECK(!std::getline(in, line));
}
