// Command-line front end: parses flags and JSON inputs, dispatches to the
// library, and emits deterministic CSV/report payloads (12 significant
// digits, '.' decimal separator, byte-identical across runs).
//
// Exit codes: 0 success; 1 flag/input validation failure (nothing computed);
// 2 a library operation rejected the request (message names the violated
// precondition).

#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multispace/cosmology.hpp"
#include "multispace/graphphase.hpp"
#include "multispace/json_io.hpp"
#include "multispace/multicosmos.hpp"
#include "multispace/numformat.hpp"
#include "multispace/pseudoface.hpp"
#include "multispace/relativity.hpp"

namespace {

using multispace::format_number;
using nlohmann::json;

// Thrown for problems that must map to exit code 1 (before any computation).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) { return format_number(x); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_input(const std::string& path) {
  const std::string text = read_file(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("input file '" + path + "' is not valid JSON");
  return j;
}

void emit(const std::string& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw InputError("cannot open output file '" + output_path + "'");
  out << payload;
  if (!out) throw InputError("failed writing output file '" + output_path + "'");
}

void check(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

double json_number(const json& j, const char* key, const char* ctx) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number()) {
    throw InputError(std::string(ctx) + ": missing or non-numeric '" + key + "'");
  }
  return it->get<double>();
}

// ---------------------------------------------------------------- pseudo-shape

std::string run_pseudo_shape(double R, double sigma, int samples, bool figure_mode) {
  check(R > 0, "pseudo-shape: --R must be positive");
  check(sigma > 0, "pseudo-shape: --sigma must be positive");
  check(samples >= 3, "pseudo-shape: --samples must be >= 3");
  std::string out = "t,radius\n";
  for (const auto& slice :
       multispace::pseudoface::ball_profile_scaled(R, sigma, samples, figure_mode)) {
    out += num(slice.t) + "," + num(slice.radius) + "\n";
  }
  return out;
}

// ----------------------------------------------------------------- angle-shape

std::string run_angle_shape(double R, int samples) {
  check(R > 0, "angle-shape: --R must be positive");
  check(samples >= 2, "angle-shape: --samples must be >= 2");
  std::string out = "t,radius\n";
  for (int j = 0; j < samples; ++j) {
    const double t = -R + 2.0 * R * static_cast<double>(j) / (samples - 1);
    const auto slice = multispace::pseudoface::ball_pseudo_shape_angle(R, t);
    out += num(slice.t) + "," + num(slice.radius) + "\n";
  }
  return out;
}

// --------------------------------------------------------------------- lorentz

std::string run_lorentz(double v, double c, const std::string& input_path) {
  check(c > 0, "lorentz: --c must be positive");
  check(std::fabs(v) < c, "lorentz: --v must satisfy |v| < c");
  std::vector<multispace::relativity::RelativeEvent> events;
  if (input_path.empty()) {
    events.push_back({{1.0, 2.0, 3.0}, 0.0});
  } else {
    const json j = parse_json_input(input_path);
    const auto it = j.find("events");
    check(it != j.end() && it->is_array(), "lorentz: input needs an 'events' array");
    for (const json& e : *it) {
      check(e.is_object() && e.contains("x") && e["x"].is_array() && e["x"].size() == 3,
            "lorentz: each event needs 'x': [x, y, z]");
      multispace::relativity::RelativeEvent ev;
      for (int i = 0; i < 3; ++i) {
        check(e["x"][static_cast<std::size_t>(i)].is_number(),
              "lorentz: event coordinates must be numbers");
        ev.x[static_cast<std::size_t>(i)] = e["x"][static_cast<std::size_t>(i)].get<double>();
      }
      ev.t = json_number(e, "t", "lorentz event");
      events.push_back(ev);
    }
  }
  const multispace::relativity::BoostParams boost{v, c};
  std::string out = "x1,y1,z1,t1,x2,y2,z2,t2\n";
  for (const auto& e : events) {
    const auto b = multispace::relativity::lorentz_boost(e, boost);
    out += num(e.x[0]) + "," + num(e.x[1]) + "," + num(e.x[2]) + "," + num(e.t) + "," +
           num(b.x[0]) + "," + num(b.x[1]) + "," + num(b.x[2]) + "," + num(b.t) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------- velocity-add

std::string run_velocity_add(double v, double c, const std::string& input_path) {
  check(c > 0, "velocity-add: --c must be positive");
  check(std::fabs(v) < c, "velocity-add: --v must satisfy |v| < c");
  std::vector<std::array<double, 3>> velocities;
  if (input_path.empty()) {
    velocities.push_back({0.5 * c, 0.0, 0.0});
    velocities.push_back({0.5 * c, 0.5 * c, 0.0});
  } else {
    const json j = parse_json_input(input_path);
    const auto it = j.find("velocities");
    check(it != j.end() && it->is_array(), "velocity-add: input needs a 'velocities' array");
    for (const json& u : *it) {
      check(u.is_array() && u.size() == 3, "velocity-add: each velocity must be [ux, uy, uz]");
      std::array<double, 3> vel{};
      for (std::size_t i = 0; i < 3; ++i) {
        check(u[i].is_number(), "velocity-add: velocity components must be numbers");
        vel[i] = u[i].get<double>();
      }
      velocities.push_back(vel);
    }
  }
  const multispace::relativity::BoostParams boost{v, c};
  std::string out = "ux,uy,uz,ux2,uy2,uz2\n";
  for (const auto& u : velocities) {
    const auto w = multispace::relativity::velocity_transform(u, boost);
    out += num(u[0]) + "," + num(u[1]) + "," + num(u[2]) + "," + num(w[0]) + "," + num(w[1]) +
           "," + num(w[2]) + "\n";
  }
  return out;
}

// ------------------------------------------------------------------- friedmann

struct FriedmannRow {
  double K, a0;
  std::array<double, 4> coords, d;
};

std::string run_friedmann(const std::string& input_path) {
  std::vector<FriedmannRow> rows;
  double c = 1.0;
  if (input_path.empty()) {
    const double half_pi = std::numbers::pi / 2.0;
    rows.push_back({0.0, 2.0, {0.0, 1.0, half_pi, 0.0}, {0.0, 1.0, 0.0, 0.0}});
    rows.push_back({0.0, 1.0, {0.0, 0.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0}});
    rows.push_back({1.0, 1.0, {0.0, 0.5, half_pi, 0.0}, {0.0, 1.0, 0.0, 0.0}});
  } else {
    const json j = parse_json_input(input_path);
    if (j.contains("c")) c = json_number(j, "c", "friedmann");
    check(c > 0, "friedmann: 'c' must be positive");
    const auto it = j.find("rows");
    check(it != j.end() && it->is_array(), "friedmann: input needs a 'rows' array");
    for (const json& r : *it) {
      check(r.is_object(), "friedmann: each row must be an object");
      FriedmannRow row{};
      row.K = json_number(r, "K", "friedmann row");
      row.a0 = json_number(r, "a0", "friedmann row");
      check(row.a0 > 0, "friedmann: 'a0' must be positive");
      for (const char* key : {"coords", "d"}) {
        const auto field = r.find(key);
        check(field != r.end() && field->is_array() && field->size() == 4,
              std::string("friedmann: row needs '") + key + "': [4 numbers]");
      }
      for (std::size_t i = 0; i < 4; ++i) {
        check(r["coords"][i].is_number() && r["d"][i].is_number(),
              "friedmann: coordinates must be numbers");
        row.coords[i] = r["coords"][i].get<double>();
        row.d[i] = r["d"][i].get<double>();
      }
      rows.push_back(row);
    }
  }
  std::string out = "K,a0,t,r,theta,phi,dt,dr,dtheta,dphi,ds2\n";
  for (const auto& row : rows) {
    multispace::relativity::FriedmannParams params;
    params.K = row.K;
    const double a0 = row.a0;
    params.a = [a0](double) { return a0; };
    params.c = c;
    const double ds2 = multispace::relativity::friedmann_interval_sq(params, row.coords, row.d);
    out += num(row.K) + "," + num(row.a0);
    for (double x : row.coords) out += "," + num(x);
    for (double x : row.d) out += "," + num(x);
    out += "," + num(ds2) + "\n";
  }
  return out;
}

// -------------------------------------------------------------------- classify

std::string run_classify(const std::string& input_path) {
  struct Row {
    std::string kind;
    double param = 0.0, param2 = 0.0, t = 0.0;
  };
  std::vector<Row> rows;
  if (input_path.empty()) {
    rows.push_back({"constant", 1.0, 0.0, 0.0});
    rows.push_back({"exp", 1.0, 0.0, 0.0});
    rows.push_back({"exp", -1.0, 0.0, 0.0});
  } else {
    const json j = parse_json_input(input_path);
    const auto it = j.find("rows");
    check(it != j.end() && it->is_array(), "classify: input needs a 'rows' array");
    for (const json& r : *it) {
      check(r.is_object() && r.contains("kind") && r["kind"].is_string(),
            "classify: each row needs a string 'kind'");
      Row row;
      row.kind = r["kind"].get<std::string>();
      row.t = json_number(r, "t", "classify row");
      if (row.kind == "constant") {
        row.param = json_number(r, "value", "classify constant row");
      } else if (row.kind == "exp") {
        row.param = json_number(r, "rate", "classify exp row");
      } else if (row.kind == "power") {
        row.param = json_number(r, "mu", "classify power row");
      } else if (row.kind == "timeshift") {
        row.param = json_number(r, "mu", "classify timeshift row");
        row.param2 = json_number(r, "t_inf", "classify timeshift row");
      } else {
        throw InputError("classify: unknown kind '" + row.kind +
                         "' (use constant, exp, power, timeshift)");
      }
      rows.push_back(row);
    }
  }
  std::string out = "kind,param,param2,t,classification\n";
  for (const auto& row : rows) {
    std::function<double(double)> a;
    const double p = row.param, p2 = row.param2;
    if (row.kind == "constant") {
      a = [p](double) { return p; };
    } else if (row.kind == "exp") {
      a = [p](double t) { return std::exp(p * t); };
    } else if (row.kind == "power") {
      a = [p](double t) { return std::pow(t, p); };
    } else {
      a = [p, p2](double t) { return std::pow(p2 - t, p); };
    }
    const auto cls = multispace::relativity::classify_cosmos(a, row.t);
    out += row.kind + "," + num(row.param) + "," + num(row.param2) + "," + num(row.t) + "," +
           multispace::relativity::to_string(cls) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------- kasner

multispace::cosmology::KasnerBranch parse_branch(const std::string& branch) {
  if (branch == "plus") return multispace::cosmology::KasnerBranch::plus;
  if (branch == "minus") return multispace::cosmology::KasnerBranch::minus;
  throw InputError("--branch must be 'plus' or 'minus'");
}

std::string run_kasner(int m, const std::string& branch) {
  check(m >= 1, "kasner: --m must be >= 1");
  const auto b = parse_branch(branch);
  const auto sol = multispace::cosmology::kasner_exponents(m, b);
  const double md = static_cast<double>(m);
  const double linear = std::fabs(3.0 * sol.mu + md * sol.nu - 1.0);
  const double quadratic = std::fabs(3.0 * sol.mu * sol.mu + md * sol.nu * sol.nu - 1.0);
  std::string out;
  out += "m=" + std::to_string(m) + "\n";
  out += "branch=" + branch + "\n";
  out += "mu=" + num(sol.mu) + "\n";
  out += "nu=" + num(sol.nu) + "\n";
  out += "linear_residual=" + num(linear) + "\n";
  out += "quadratic_residual=" + num(quadratic) + "\n";
  out += std::string("constraints=") + (linear <= 1e-12 && quadratic <= 1e-12 ? "PASS" : "FAIL") +
         "\n";
  return out;
}

// ------------------------------------------------------------------ time-shift

std::string run_time_shift(int m, const std::string& branch, double t_inf, int samples) {
  check(m >= 1, "time-shift: --m must be >= 1");
  check(samples >= 1, "time-shift: --samples must be >= 1");
  check(t_inf > 0, "time-shift: --t1 (the blow-up time) must be positive");
  const auto sol = multispace::cosmology::kasner_exponents(m, parse_branch(branch));
  std::string out = "t,a,da_dt,d2a_dt2\n";
  for (int j = 0; j < samples; ++j) {
    const double t = t_inf * static_cast<double>(j) / samples;
    const auto probe = multispace::cosmology::time_shift_scale(sol.mu, t_inf, t);
    out += num(t) + "," + num(probe.a) + "," + num(probe.da_dt) + "," + num(probe.d2a_dt2) +
           "\n";
  }
  return out;
}

// -------------------------------------------------------------- tw-state/window

multispace::cosmology::TWCosmology make_tw(int m, double lambda0, double rc, double t1,
                                           const char* ctx) {
  check(m >= 2, std::string(ctx) + ": --m must be >= 2");
  check(lambda0 > 0, std::string(ctx) + ": --lambda0 must be positive");
  check(rc > 0, std::string(ctx) + ": --rc must be positive");
  return multispace::cosmology::make_tw_cosmology(m, lambda0, rc, t1);
}

std::string run_tw_state(int m, double lambda0, double rc, double t1, int samples) {
  check(samples >= 1, "tw-state: --samples must be >= 1");
  const auto cfg = make_tw(m, lambda0, rc, t1, "tw-state");
  const auto [lo, hi] = multispace::cosmology::tw_domain(cfg);
  std::string out = "t,K,phi,S\n";
  for (int j = 0; j < samples; ++j) {
    const double t = lo + (hi - lo) * static_cast<double>(j + 1) / (samples + 1);
    const auto st = multispace::cosmology::tw_state(cfg, t);
    out += num(st.t) + "," + num(st.K) + "," + num(st.phi) + "," + num(st.S) + "\n";
  }
  return out;
}

std::string run_tw_window(int m, double lambda0, double rc, double t1, long scan) {
  check(scan >= 1000, "tw-window: --samples (scan resolution) must be >= 1000");
  const auto cfg = make_tw(m, lambda0, rc, t1, "tw-window");
  const auto [lo, hi] = multispace::cosmology::tw_domain(cfg);
  const auto window = multispace::cosmology::tw_acceleration_window(cfg, scan);
  const auto enter = multispace::cosmology::tw_state(cfg, window.t_enter);
  const auto exit_state = multispace::cosmology::tw_state(cfg, window.t_exit);
  const double band_low = 2.5, band_high = 3.5;
  std::string out;
  out += "m=" + std::to_string(m) + "\n";
  out += "lambda0=" + num(lambda0) + "\n";
  out += "rc=" + num(rc) + "\n";
  out += "t1=" + num(t1) + "\n";
  out += "scan_resolution=" + std::to_string(scan) + "\n";
  out += "domain_low=" + num(lo) + "\n";
  out += "domain_high=" + num(hi) + "\n";
  out += "t_enter=" + num(window.t_enter) + "\n";
  out += "t_exit=" + num(window.t_exit) + "\n";
  out += "S_enter=" + num(enter.S) + "\n";
  out += "S_exit=" + num(exit_state.S) + "\n";
  out += "expansion_factor=" + num(window.expansion_factor) + "\n";
  out += "band_low=" + num(band_low) + "\n";
  out += "band_high=" + num(band_high) + "\n";
  out += "reference_value=3.04\n";
  out += std::string("band_check=") +
         (window.expansion_factor >= band_low && window.expansion_factor <= band_high
              ? "PASS"
              : "FAIL") +
         "\n";
  return out;
}

// ------------------------------------------------------------- graph-transform

std::string run_graph_transform(const std::string& input_path, int n) {
  check(!input_path.empty(), "graph-transform: --input is required");
  check(n >= 1, "graph-transform: --n must be >= 1");
  const auto g = multispace::io::graph_from_json(read_file(input_path));
  // Fixed demonstration transform: vibration labels double, force labels
  // halve. Invertible, so round trips are available to downstream tooling.
  multispace::graphphase::LabelTransform tau;
  tau.tau_omega = [](const multispace::graphphase::Label& l) {
    multispace::graphphase::Label out(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) out[i] = 2.0 * l[i];
    return out;
  };
  tau.tau_lambda = [](const multispace::graphphase::Label& l) {
    multispace::graphphase::Label out(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) out[i] = 0.5 * l[i];
    return out;
  };
  const auto transformed = multispace::graphphase::transform_phase(g, tau, n);
  return multispace::io::graph_to_json(transformed);
}

// ---------------------------------------------------------------- cosmos-check

std::string run_cosmos_check(const std::string& input_path, int trials, long seed) {
  check(!input_path.empty(), "cosmos-check: --input is required");
  check(trials >= 0, "cosmos-check: --trials must be >= 0");
  const auto model = multispace::io::model_from_json(read_file(input_path));

  std::vector<multispace::multicosmos::Id> maximal;
  for (const auto& s : model.subcosmoses) {
    if (multispace::multicosmos::is_maximal(model, s.id)) maximal.push_back(s.id);
  }
  check(maximal.size() == 1,
        "cosmos-check: the model must have exactly one maximal sub-cosmos (found " +
            std::to_string(maximal.size()) + ")");
  const auto& top = maximal.front();

  const auto report = multispace::multicosmos::validate_sheaf_conditions(
      model, top, trials, static_cast<std::uint64_t>(seed));

  std::string out;
  out += "subcosmoses=" + std::to_string(model.subcosmoses.size()) + "\n";
  out += "top=" + top + "\n";
  out += "trials=" + std::to_string(trials) + "\n";
  out += "seed=" + std::to_string(seed) + "\n";
  out += std::string("composition=") + (report.composition.passed ? "PASS" : "FAIL") + "\n";
  for (const auto& v : report.composition.violations) {
    out += "composition_violation=" + v.a + ">" + v.b + ">" + v.c + " at " + v.x + "\n";
  }
  out += std::string("separation=") + (report.separation.passed ? "PASS" : "FAIL") + "\n";
  for (const auto& v : report.separation.violations) {
    out += "separation_violation=" + v.g + " vs " + v.h + "\n";
  }
  if (!report.gluing.ran) {
    out += "gluing=SKIPPED\n";
  } else {
    out += "gluing=" + std::to_string(report.gluing.succeeded) + "/" +
           std::to_string(report.gluing.trials) +
           (report.gluing.passed() ? " PASS" : " FAIL") + "\n";
    for (const auto& f : report.gluing.failures) out += "gluing_failure=" + f + "\n";
  }
  out += std::string("verdict=") + (report.composition.passed && report.separation.passed &&
                                            report.gluing.passed()
                                        ? "PASS"
                                        : "FAIL") +
         "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic toolkit for pseudo-face geometry, relativistic kinematics, "
               "compactification cosmology, graph phases, and finite sheaf checks"};
  app.require_subcommand(1);
  app.fallthrough();  // allow the global -o/--output after the subcommand

  std::string output_path;
  app.add_option("-o,--output", output_path, "Write the payload to this file instead of stdout")
      ->capture_default_str();

  double R = 1.0, sigma = 1.0, v = 0.0, c = 1.0, lambda0 = 1.0, rc = 1.0, t1 = 0.0;
  int samples = 5, m = 7, n = 2, trials = 5;
  long seed = 1, scan = 100000;
  std::string branch = "minus", input_path;
  bool figure_mode = false;

  auto* sc_pseudo = app.add_subcommand("pseudo-shape", "Slice profile of a ball pseudo-shape");
  sc_pseudo->add_option("--R", R, "Ball radius")->capture_default_str();
  sc_pseudo->add_option("--sigma", sigma, "Deformation scale")->capture_default_str();
  sc_pseudo->add_option("--samples", samples, "Slice count across [-R, R]")
      ->capture_default_str();
  sc_pseudo->add_flag("--paper-figure-mode", figure_mode,
                      "Use the special-case radius sqrt(R^2 - t^2)");

  auto* sc_angle = app.add_subcommand("angle-shape", "Slice profile under the angle deformation");
  sc_angle->add_option("--R", R, "Ball radius")->capture_default_str();
  sc_angle->add_option("--samples", samples, "Slice count across [-R, R]")
      ->capture_default_str();

  auto* sc_lorentz = app.add_subcommand("lorentz", "Boost events along the x-axis");
  sc_lorentz->add_option("--v", v, "Boost velocity")->required();
  sc_lorentz->add_option("--c", c, "Light speed")->capture_default_str();
  sc_lorentz->add_option("-i,--input", input_path, "JSON file with an 'events' array");

  auto* sc_vel = app.add_subcommand("velocity-add", "Relativistic velocity composition");
  sc_vel->add_option("--v", v, "Boost velocity")->required();
  sc_vel->add_option("--c", c, "Light speed")->capture_default_str();
  sc_vel->add_option("-i,--input", input_path, "JSON file with a 'velocities' array");

  auto* sc_fried = app.add_subcommand("friedmann", "Line-element values on sample displacements");
  sc_fried->add_option("-i,--input", input_path, "JSON file with K/a0/coordinate rows");

  auto* sc_classify = app.add_subcommand("classify", "Scale-factor trichotomy per sample row");
  sc_classify->add_option("-i,--input", input_path, "JSON file with scale-factor rows");

  auto* sc_kasner = app.add_subcommand("kasner", "Vacuum power-law exponents and residuals");
  sc_kasner->add_option("--m", m, "Extra dimensions")->required();
  sc_kasner->add_option("--branch", branch, "Sign branch: plus or minus")->required();

  auto* sc_shift = app.add_subcommand("time-shift", "Time-shifted scale factor sweep");
  sc_shift->add_option("--m", m, "Extra dimensions")->capture_default_str();
  sc_shift->add_option("--branch", branch, "Sign branch: plus or minus")->capture_default_str();
  sc_shift->add_option("--t1", t1, "Shift parameter (the blow-up time)")->capture_default_str();
  sc_shift->add_option("--samples", samples, "Sample count in [0, t1)")->capture_default_str();

  auto* sc_twstate = app.add_subcommand("tw-state", "Closed-form state sweep over the domain");
  sc_twstate->add_option("--m", m, "Extra dimensions")->capture_default_str();
  sc_twstate->add_option("--lambda0", lambda0, "Coupling")->capture_default_str();
  sc_twstate->add_option("--rc", rc, "Curvature radius")->capture_default_str();
  sc_twstate->add_option("--t1", t1, "Time shift")->capture_default_str();
  sc_twstate->add_option("--samples", samples, "Interior sample count")->capture_default_str();

  auto* sc_twwin = app.add_subcommand("tw-window", "Proper-time acceleration window report");
  sc_twwin->add_option("--m", m, "Extra dimensions")->capture_default_str();
  sc_twwin->add_option("--lambda0", lambda0, "Coupling")->capture_default_str();
  sc_twwin->add_option("--rc", rc, "Curvature radius")->capture_default_str();
  sc_twwin->add_option("--t1", t1, "Time shift")->capture_default_str();
  sc_twwin->add_option("--samples", scan, "Scan resolution")->capture_default_str();

  auto* sc_graph = app.add_subcommand("graph-transform", "Label transform gated on embeddability");
  sc_graph->add_option("-i,--input", input_path, "Graph JSON file")->required();
  sc_graph->add_option("--n", n, "Target dimension")->capture_default_str();

  auto* sc_cosmos = app.add_subcommand("cosmos-check", "Sheaf-condition report for a model");
  sc_cosmos->add_option("-i,--input", input_path, "Cosmos model JSON file")->required();
  sc_cosmos->add_option("--trials", trials, "Seeded gluing trials")->capture_default_str();
  sc_cosmos->add_option("--seed", seed, "Trial seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::string payload;
    if (sc_pseudo->parsed()) {
      payload = run_pseudo_shape(R, sigma, samples, figure_mode);
    } else if (sc_angle->parsed()) {
      payload = run_angle_shape(R, samples);
    } else if (sc_lorentz->parsed()) {
      payload = run_lorentz(v, c, input_path);
    } else if (sc_vel->parsed()) {
      payload = run_velocity_add(v, c, input_path);
    } else if (sc_fried->parsed()) {
      payload = run_friedmann(input_path);
    } else if (sc_classify->parsed()) {
      payload = run_classify(input_path);
    } else if (sc_kasner->parsed()) {
      payload = run_kasner(m, branch);
    } else if (sc_shift->parsed()) {
      payload = run_time_shift(m, branch, t1, samples);
    } else if (sc_twstate->parsed()) {
      payload = run_tw_state(m, lambda0, rc, t1, samples);
    } else if (sc_twwin->parsed()) {
      payload = run_tw_window(m, lambda0, rc, t1, scan);
    } else if (sc_graph->parsed()) {
      payload = run_graph_transform(input_path, n);
    } else if (sc_cosmos->parsed()) {
      payload = run_cosmos_check(input_path, trials, seed);
    }
    emit(payload, output_path);
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    // The library signals rejected arguments and malformed payloads with
    // invalid_argument; that is a validation failure, not a refused computation.
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
