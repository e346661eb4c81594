#include "wgeom/duality.hpp"
#include "wgeom/measure.hpp"
#include "wgeom/oracle.hpp"
#include "wgeom/report.hpp"
#include "wgeom/sampling.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace wgeom;
using report::Json;

int g_log = 0;  // 0 quiet, 1 info, 2 debug

int read_log_env() {
  const char* env = std::getenv("WGEOM_LOG");
  if (!env) return 0;
  const std::string v(env);
  if (v == "quiet") return 0;
  if (v == "info") return 1;
  if (v == "debug") return 2;
  std::cerr << "wgeom: unknown WGEOM_LOG value '" << v << "', using quiet\n";
  return 0;
}

void log_info(const std::string& msg) {
  if (g_log >= 1) std::cerr << "wgeom: " << msg << '\n';
}

void log_debug(const std::string& msg) {
  if (g_log >= 2) std::cerr << "wgeom: " << msg << '\n';
}

Vector read_values(const std::string& csv, const std::string& path, const char* inline_flag) {
  if (csv.empty() == path.empty())
    throw InconsistentInputs(std::string("supply exactly one of ") + inline_flag + " and --input");
  if (!csv.empty()) {
    Vector v = report::parse_coeffs_csv(csv);
    if (v.size() > 32)
      throw InconsistentInputs("more than 32 values on the command line: use --input <file.json>");
    return v;
  }
  return report::load_coeffs_json(path);
}

void print_report(const Json& j, const std::string& format) {
  if (format == "text")
    std::cout << report::render_text(j);
  else
    std::cout << j.dump(2) << '\n';
}

int run_measure(const std::string& coeffs, const std::string& input, bool normalize,
                const std::string& format) {
  const WState w = make_wstate(read_values(coeffs, input, "--coeffs"), normalize);
  const MeasureResult m = nearest_product(w);
  log_info("class " + to_string(m.cls) + ", branch " + to_string(m.branch.branch) +
           ", g = " + report::fmt15(m.g));
  print_report(report::measure_report(w, m), format);
  return 0;
}

int run_curves(const std::string& coeffs, const std::string& input, bool normalize, bool have_rmin,
               double r_min, bool have_rmax, double r_max, int samples, const std::string& out) {
  const WState w = make_wstate(read_values(coeffs, input, "--coeffs"), normalize);
  const CriticalValues crit = r_crit(w);
  const double lo = have_rmin ? r_min : w.max_coeff();
  const double hi = have_rmax ? r_max : 2.0 * std::max(w.max_coeff(), crit.r2);
  const std::vector<CurveRow> rows = sample_branch_curves(w, lo, hi, samples);
  if (out.empty()) {
    report::write_curves_csv(std::cout, rows);
  } else {
    std::ofstream file(out);
    if (!file) throw InconsistentInputs("cannot open output file '" + out + "'");
    report::write_curves_csv(file, rows);
    log_info("wrote " + std::to_string(rows.size()) + " rows to " + out);
  }
  return 0;
}

int run_duality(const std::string& from, const std::string& values, const std::string& input,
                bool normalize, const std::string& format) {
  const Vector vals = read_values(values, input, "--values");
  if (from == "w") {
    const WState w = make_wstate(vals, normalize);
    const UnitVector x = w_to_unit_vector(w);
    print_report(report::duality_w2x_report(w, x, unit_vector_to_product(x)), format);
  } else {
    const UnitVector x(vals);
    const WState w = unit_vector_to_w(x);
    print_report(report::duality_x2w_report(x, w), format);
  }
  return 0;
}

int run_verify(int n, int trials, std::uint64_t seed, int restarts, int max_iters, double tol,
               const std::string& format) {
  if (n < 2) throw DomainError("verify: need --n >= 2");
  if (trials < 1) throw DomainError("verify: need --trials >= 1");
  if (restarts < 1) throw DomainError("verify: need --restarts >= 1");
  if (max_iters < 1) throw DomainError("verify: need --max-iters >= 1");
  if (!(tol > 0.0)) throw DomainError("verify: need --tol > 0");

  int counts[5] = {0, 0, 0, 0, 0};
  double max_dg = 0.0;
  int worst = -1;
  for (int i = 0; i < trials; ++i) {
    Rng rng(split_seed(seed, static_cast<std::uint64_t>(i)));
    const WState w = sample_wstate(n, rng);
    const MeasureResult m = nearest_product(w);
    const OracleResult o = hopm_maximize(
        w, restarts, max_iters, split_seed(seed, (1ull << 32) + static_cast<std::uint64_t>(i)));
    const double dg = std::abs(m.g - o.g_est);
    if (dg > max_dg) {
      max_dg = dg;
      worst = i;
    }
    ++counts[static_cast<int>(m.cls)];
    log_debug("trial " + std::to_string(i) + ": " + to_string(m.cls) +
              ", |dg| = " + report::fmt15(dg));
  }
  const bool pass = max_dg <= tol;

  Json j;
  j["n"] = n;
  j["trials"] = trials;
  j["seed"] = seed;
  j["restarts"] = restarts;
  j["max_iters"] = max_iters;
  j["tol"] = tol;
  j["max_abs_dg"] = max_dg;
  j["worst_trial"] = worst;
  Json cc;
  cc["product"] = counts[static_cast<int>(EntanglementClass::Product)];
  cc["slightly_entangled"] = counts[static_cast<int>(EntanglementClass::SlightlyEntangled)];
  cc["shared"] = counts[static_cast<int>(EntanglementClass::Shared)];
  cc["highly_entangled_symmetric"] =
      counts[static_cast<int>(EntanglementClass::HighlyEntangledSymmetric)];
  cc["highly_entangled_asymmetric"] =
      counts[static_cast<int>(EntanglementClass::HighlyEntangledAsymmetric)];
  j["class_counts"] = std::move(cc);
  j["pass"] = pass;
  print_report(j, format);
  log_info(std::string("verify ") + (pass ? "passed" : "FAILED") +
           ", max |dg| = " + report::fmt15(max_dg));
  return pass ? 0 : 1;
}

int run_sweep(int n, int grid, const std::string& out) {
  if (n < 2) throw DomainError("sweep: need --n >= 2");
  if (grid < 1) throw DomainError("sweep: need --grid >= 1");
  double rows_est = 1.0;
  for (int i = 1; i < n; ++i) rows_est *= static_cast<double>(grid + i) / i;
  if (rows_est > 200000.0)
    throw TooLarge("sweep: grid would emit about " + std::to_string(static_cast<long>(rows_est)) +
                   " rows; budget is 200000");

  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw InconsistentInputs("cannot open output file '" + out + "'");
  }
  std::ostream& os = out.empty() ? std::cout : file;

  for (int k = 1; k <= n; ++k) os << 'c' << k << ',';
  os << "class,branch,r,r1,r2,g,g_squared,e_g_nats\n";

  long rows = 0;
  std::vector<int> comp(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int k, int rem) {
    if (k == n - 1) {
      comp[static_cast<std::size_t>(k)] = rem;
      Vector c(n);
      for (int i = 0; i < n; ++i)
        c[i] = std::sqrt(static_cast<double>(comp[static_cast<std::size_t>(i)]) / grid);
      const WState w = make_wstate(c, true);
      const MeasureResult m = nearest_product(w);
      const Vector user = w.user_coeffs();
      for (int i = 0; i < n; ++i) os << report::fmt_shortest(user[i]) << ',';
      os << to_string(m.cls) << ',' << to_string(m.branch.branch) << ','
         << report::fmt_shortest(m.branch.r) << ',' << report::fmt_shortest(m.branch.r1) << ','
         << report::fmt_shortest(m.branch.r2) << ',' << report::fmt_shortest(m.g) << ','
         << report::fmt_shortest(m.g_squared) << ',' << report::fmt_shortest(m.e_g) << '\n';
      ++rows;
      return;
    }
    for (int i = 0; i <= rem; ++i) {
      comp[static_cast<std::size_t>(k)] = i;
      rec(k + 1, rem - i);
    }
  };
  rec(0, grid);
  if (!out.empty()) log_info("wrote " + std::to_string(rows) + " rows to " + out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  g_log = read_log_env();

  CLI::App app{"Geometric entanglement of generalized W states"};
  app.require_subcommand(1);

  std::string m_coeffs, m_input, m_format = "json";
  bool m_normalize = false;
  CLI::App* measure = app.add_subcommand(
      "measure", "Entanglement class, maximal product overlap, nearest product state");
  measure->add_option("--coeffs", m_coeffs, "comma-separated coefficients");
  measure->add_option("--input", m_input, "JSON file {\"coefficients\": [...]}");
  measure->add_flag("--normalize", m_normalize, "rescale input to unit norm");
  measure->add_option("--format", m_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string c_coeffs, c_input, c_out;
  bool c_normalize = false;
  double c_rmin = 0.0, c_rmax = 0.0;
  int c_samples = 200;
  CLI::App* curves =
      app.add_subcommand("curves", "Sample the constraint curves f+ and f- over a range of r");
  curves->add_option("--coeffs", c_coeffs, "comma-separated coefficients");
  curves->add_option("--input", c_input, "JSON file {\"coefficients\": [...]}");
  curves->add_flag("--normalize", c_normalize, "rescale input to unit norm");
  CLI::Option* c_rmin_opt = curves->add_option("--r-min", c_rmin, "lower end (default c_n)");
  CLI::Option* c_rmax_opt =
      curves->add_option("--r-max", c_rmax, "upper end (default 2 max(c_n, r2))");
  curves->add_option("--samples", c_samples, "number of rows (default 200)");
  curves->add_option("--output", c_out, "CSV path (default stdout)");

  std::string d_from, d_values, d_input, d_format = "json";
  bool d_normalize = false;
  CLI::App* duality =
      app.add_subcommand("duality", "Map a highly entangled state to its dual unit vector, or back");
  duality->add_option("--from", d_from, "w or x")
      ->required()
      ->check(CLI::IsMember({"w", "x"}));
  duality->add_option("--values", d_values, "comma-separated coefficients or unit vector");
  duality->add_option("--input", d_input, "JSON file {\"coefficients\": [...]}");
  duality->add_flag("--normalize", d_normalize, "rescale W coefficients to unit norm");
  duality->add_option("--format", d_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  int v_n = 0, v_trials = 100, v_restarts = 50, v_max_iters = 500;
  std::uint64_t v_seed = 0;
  double v_tol = 1e-6;
  std::string v_format = "json";
  CLI::App* verify =
      app.add_subcommand("verify", "Compare the closed form against the brute-force maximizer");
  verify->add_option("--n", v_n, "number of qubits")->required();
  verify->add_option("--trials", v_trials, "random states to test (default 100)");
  verify->add_option("--seed", v_seed, "base seed (default 0)");
  verify->add_option("--restarts", v_restarts, "maximizer restarts per trial (default 50)");
  verify->add_option("--max-iters", v_max_iters, "sweeps per restart (default 500)");
  verify->add_option("--tol", v_tol, "pass threshold on max |dg| (default 1e-6)");
  verify->add_option("--format", v_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  int s_n = 0, s_grid = 0;
  std::string s_out;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Measure every state on a grid of squared coefficients");
  sweep->add_option("--n", s_n, "number of qubits")->required();
  sweep->add_option("--grid", s_grid, "grid resolution: squared coefficients i/grid")->required();
  sweep->add_option("--output", s_out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*measure) return run_measure(m_coeffs, m_input, m_normalize, m_format);
    if (*curves)
      return run_curves(c_coeffs, c_input, c_normalize, c_rmin_opt->count() > 0, c_rmin,
                        c_rmax_opt->count() > 0, c_rmax, c_samples, c_out);
    if (*duality) return run_duality(d_from, d_values, d_input, d_normalize, d_format);
    if (*verify) return run_verify(v_n, v_trials, v_seed, v_restarts, v_max_iters, v_tol, v_format);
    if (*sweep) return run_sweep(s_n, s_grid, s_out);
  } catch (const NotHighlyEntangled& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const RegionViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
