// Copyright 2026 The tlsgates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tlsg/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "tlsg/dispersive.hpp"
#include "tlsg/fidelity.hpp"
#include "tlsg/lindblad.hpp"
#include "tlsg/units.hpp"

namespace tlsg {

using Json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// --- strict JSON helpers ----------------------------------------------------

void check_keys(const Json& obj, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError("config: unknown key \"" + item.key() + "\" in " + ctx);
    }
  }
}

const Json& require_field(const Json& obj, const std::string& ctx, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ConfigError("config: missing required key \"" + std::string(key) + "\" in " + ctx);
  }
  return *it;
}

double as_number(const Json& v, const std::string& ctx, const char* key) {
  if (!v.is_number()) {
    throw ConfigError("config: key \"" + std::string(key) + "\" in " + ctx +
                      " must be a number");
  }
  const double x = v.get<double>();
  if (!std::isfinite(x)) {
    throw ConfigError("config: key \"" + std::string(key) + "\" in " + ctx +
                      " must be finite");
  }
  return x;
}

double require_number(const Json& obj, const std::string& ctx, const char* key) {
  return as_number(require_field(obj, ctx, key), ctx, key);
}

double optional_number(const Json& obj, const std::string& ctx, const char* key,
                       double fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  return as_number(*it, ctx, key);
}

int optional_int(const Json& obj, const std::string& ctx, const char* key, int fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) {
    throw ConfigError("config: key \"" + std::string(key) + "\" in " + ctx +
                      " must be an integer");
  }
  return it->get<int>();
}

std::string require_string(const Json& obj, const std::string& ctx, const char* key) {
  const Json& v = require_field(obj, ctx, key);
  if (!v.is_string()) {
    throw ConfigError("config: key \"" + std::string(key) + "\" in " + ctx +
                      " must be a string");
  }
  return v.get<std::string>();
}

// --- enum names -------------------------------------------------------------

struct NamePair {
  ExperimentName name;
  const char* text;
};
constexpr NamePair kExperimentNames[] = {
    {ExperimentName::Table1, "table1"},
    {ExperimentName::Fig2GateTimes, "fig2-gatetimes"},
    {ExperimentName::Fig2Beta, "fig2-beta"},
    {ExperimentName::Fig2Energies, "fig2-energies"},
    {ExperimentName::SwapPoint, "swap-point"},
    {ExperimentName::Fig3Sweep, "fig3-sweep"},
    {ExperimentName::CzPlan, "cz-plan"},
    {ExperimentName::Custom, "custom"},
};

GateKind gate_from_string(const std::string& s) {
  if (s == "x") return GateKind::X;
  if (s == "hadamard") return GateKind::Hadamard;
  if (s == "swap") return GateKind::Swap;
  if (s == "cirac-zoller") return GateKind::CiracZoller;
  throw ConfigError("config: unknown gate \"" + s +
                    "\" (expected x, hadamard, swap or cirac-zoller)");
}

std::string gate_to_string(GateKind g) {
  switch (g) {
    case GateKind::X: return "x";
    case GateKind::Hadamard: return "hadamard";
    case GateKind::Swap: return "swap";
    case GateKind::CiracZoller: return "cirac-zoller";
  }
  return "?";
}

}  // namespace

std::string to_string(ExperimentName name) {
  for (const auto& p : kExperimentNames) {
    if (p.name == name) return p.text;
  }
  return "?";
}

ExperimentName experiment_from_string(const std::string& s) {
  for (const auto& p : kExperimentNames) {
    if (s == p.text) return p.name;
  }
  throw ConfigError("config: unknown experiment name \"" + s + "\"");
}

// --- parsing ----------------------------------------------------------------

namespace {

SystemConfig parse_system(const Json& obj) {
  check_keys(obj, "system",
             {"tls", "delta_c_mhz", "epsilon_mhz", "kappa_mhz", "fock_cutoff",
              "drive_bound_mhz"});
  SystemConfig cfg;
  const Json& tls = require_field(obj, "system", "tls");
  if (!tls.is_array() || tls.empty()) {
    throw ConfigError("config: \"tls\" in system must be a non-empty list");
  }
  for (const auto& entry : tls) {
    check_keys(entry, "system.tls[]", {"delta_mhz", "g_mhz"});
    TlsParams p;
    p.delta_mhz = require_number(entry, "system.tls[]", "delta_mhz");
    p.g_mhz = require_number(entry, "system.tls[]", "g_mhz");
    cfg.tls.push_back(p);
  }
  cfg.delta_c_mhz = require_number(obj, "system", "delta_c_mhz");
  cfg.epsilon_mhz = require_number(obj, "system", "epsilon_mhz");
  cfg.kappa_mhz = require_number(obj, "system", "kappa_mhz");
  cfg.fock_cutoff = optional_int(obj, "system", "fock_cutoff", 10);
  cfg.drive_bound_mhz = optional_number(obj, "system", "drive_bound_mhz", 1000.0);
  cfg.validate();
  return cfg;
}

CircuitExperimentInput parse_circuit(const Json& obj) {
  check_keys(obj, "circuit",
             {"ej_over_h_ghz", "c0_pf", "l_nh", "phi_ex_rad", "delta_ic_na", "j_x",
              "tls_freq_ghz", "drive_freq_ghz", "kappa_mhz", "fock_cutoff"});
  CircuitExperimentInput in;
  in.params.ej_rad_per_s = require_number(obj, "circuit", "ej_over_h_ghz") * 1e9 * kTwoPi;
  in.params.c0_farad = require_number(obj, "circuit", "c0_pf") * 1e-12;
  in.params.l_henry = require_number(obj, "circuit", "l_nh") * 1e-9;
  in.params.phi_ex = require_number(obj, "circuit", "phi_ex_rad");
  in.params.delta_ic_ampere = require_number(obj, "circuit", "delta_ic_na") * 1e-9;
  const Json& jx = require_field(obj, "circuit", "j_x");
  if (!jx.is_array()) throw ConfigError("config: \"j_x\" in circuit must be a list");
  for (const auto& v : jx) in.params.j_x.push_back(as_number(v, "circuit", "j_x"));
  if (auto it = obj.find("tls_freq_ghz"); it != obj.end()) {
    if (!it->is_array()) {
      throw ConfigError("config: \"tls_freq_ghz\" in circuit must be a list");
    }
    for (const auto& v : *it) {
      in.tls_freq_ghz.push_back(as_number(v, "circuit", "tls_freq_ghz"));
    }
  }
  if (obj.contains("drive_freq_ghz")) {
    in.drive_freq_ghz = require_number(obj, "circuit", "drive_freq_ghz");
  }
  in.kappa_mhz = optional_number(obj, "circuit", "kappa_mhz", 0.0);
  in.fock_cutoff = optional_int(obj, "circuit", "fock_cutoff", 10);
  in.params.validate();
  if (in.kappa_mhz < 0.0) throw ConfigError("config: \"kappa_mhz\" in circuit must be >= 0");
  return in;
}

SweepSpec parse_sweep(const Json& obj) {
  check_keys(obj, "sweep", {"parameter", "start", "stop", "steps"});
  SweepSpec s;
  s.parameter = require_string(obj, "sweep", "parameter");
  s.start = require_number(obj, "sweep", "start");
  s.stop = require_number(obj, "sweep", "stop");
  s.steps = optional_int(obj, "sweep", "steps", 2);
  if (s.steps < 2) throw ConfigError("config: sweep steps must be >= 2");
  return s;
}

Frame frame_from_string(const std::string& s) {
  if (s == "transformed") return Frame::Transformed;
  if (s == "lab") return Frame::LabRotating;
  throw ConfigError("config: unknown frame \"" + s + "\" (expected transformed or lab)");
}

}  // namespace

ExperimentSpec parse_config(const std::string& json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& ex) {
    throw ConfigError(std::string("config: JSON parse error: ") + ex.what());
  }
  if (!root.is_object()) throw ConfigError("config: top level must be an object");
  check_keys(root, "top level",
             {"name", "system", "circuit", "gate", "sweep", "output", "step_ps",
              "frame", "simulate"});

  ExperimentSpec spec;
  if (root.contains("name")) {
    spec.name = experiment_from_string(require_string(root, "top level", "name"));
  }
  if (root.contains("system")) spec.system = parse_system(root["system"]);
  if (root.contains("circuit")) spec.circuit = parse_circuit(root["circuit"]);
  if (root.contains("gate")) {
    spec.gate = gate_from_string(require_string(root, "top level", "gate"));
    spec.gate_set = true;
  }
  if (root.contains("sweep")) spec.sweep = parse_sweep(root["sweep"]);
  if (root.contains("output")) {
    const Json& out = root["output"];
    check_keys(out, "output", {"path", "format"});
    if (out.contains("path")) spec.output_path = require_string(out, "output", "path");
    if (out.contains("format")) {
      const std::string f = require_string(out, "output", "format");
      if (f == "csv") {
        spec.format = OutputFormat::Csv;
      } else if (f == "json") {
        spec.format = OutputFormat::Json;
      } else {
        throw ConfigError("config: unknown output format \"" + f + "\"");
      }
    }
  }
  spec.step_ps = optional_number(root, "top level", "step_ps", 0.0);
  if (spec.step_ps < 0.0) throw ConfigError("config: step_ps must be >= 0");
  if (root.contains("frame")) {
    spec.frame_override = frame_from_string(require_string(root, "top level", "frame"));
  }
  if (root.contains("simulate")) {
    if (!root["simulate"].is_boolean()) {
      throw ConfigError("config: \"simulate\" must be a boolean");
    }
    spec.simulate = root["simulate"].get<bool>();
  }
  return spec;
}

ExperimentSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open \"" + path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string save_config(const ExperimentSpec& spec) {
  Json root;
  root["name"] = to_string(spec.name);
  if (spec.system) {
    const SystemConfig& c = *spec.system;
    Json sys;
    Json tls = Json::array();
    for (const auto& t : c.tls) {
      tls.push_back(Json{{"delta_mhz", t.delta_mhz}, {"g_mhz", t.g_mhz}});
    }
    sys["tls"] = tls;
    sys["delta_c_mhz"] = c.delta_c_mhz;
    sys["epsilon_mhz"] = c.epsilon_mhz;
    sys["kappa_mhz"] = c.kappa_mhz;
    sys["fock_cutoff"] = c.fock_cutoff;
    sys["drive_bound_mhz"] = c.drive_bound_mhz;
    root["system"] = sys;
  }
  if (spec.circuit) {
    const CircuitExperimentInput& in = *spec.circuit;
    Json cir;
    cir["ej_over_h_ghz"] = in.params.ej_rad_per_s / (1e9 * kTwoPi);
    cir["c0_pf"] = in.params.c0_farad * 1e12;
    cir["l_nh"] = in.params.l_henry * 1e9;
    cir["phi_ex_rad"] = in.params.phi_ex;
    cir["delta_ic_na"] = in.params.delta_ic_ampere * 1e9;
    cir["j_x"] = in.params.j_x;
    if (!in.tls_freq_ghz.empty()) cir["tls_freq_ghz"] = in.tls_freq_ghz;
    if (in.drive_freq_ghz) cir["drive_freq_ghz"] = *in.drive_freq_ghz;
    cir["kappa_mhz"] = in.kappa_mhz;
    cir["fock_cutoff"] = in.fock_cutoff;
    root["circuit"] = cir;
  }
  if (spec.gate_set) root["gate"] = gate_to_string(spec.gate);
  if (spec.sweep) {
    root["sweep"] = Json{{"parameter", spec.sweep->parameter},
                         {"start", spec.sweep->start},
                         {"stop", spec.sweep->stop},
                         {"steps", spec.sweep->steps}};
  }
  Json out;
  if (!spec.output_path.empty()) out["path"] = spec.output_path;
  out["format"] = spec.format == OutputFormat::Csv ? "csv" : "json";
  root["output"] = out;
  if (spec.step_ps != 0.0) root["step_ps"] = spec.step_ps;
  if (spec.frame_override) {
    root["frame"] = *spec.frame_override == Frame::Transformed ? "transformed" : "lab";
  }
  if (spec.simulate) root["simulate"] = true;
  return root.dump();
}

bool specs_equal(const ExperimentSpec& a, const ExperimentSpec& b) {
  return save_config(a) == save_config(b);
}

// --- paper parameter sets ----------------------------------------------------

SystemConfig default_single_qubit_config() {
  SystemConfig cfg;
  cfg.tls = {{40.0, 40.0}};
  cfg.delta_c_mhz = 120.0;
  cfg.epsilon_mhz = 0.0;
  cfg.kappa_mhz = 4.0;
  cfg.fock_cutoff = 10;
  return cfg;
}

SystemConfig default_fig3_hadamard_config() {
  SystemConfig cfg;
  cfg.tls = {{40.0, 40.0}, {-80.0, 30.0}};
  cfg.delta_c_mhz = 160.0;
  cfg.epsilon_mhz = 0.0;
  cfg.kappa_mhz = 4.0;
  cfg.fock_cutoff = 10;
  return cfg;
}

SystemConfig default_two_qubit_config() {
  SystemConfig cfg;
  cfg.tls = {{0.0, 40.0}, {-60.0, 30.0}};
  cfg.delta_c_mhz = 300.0;
  cfg.epsilon_mhz = 0.0;
  cfg.kappa_mhz = 4.0;
  cfg.fock_cutoff = 10;
  return cfg;
}

SystemConfig default_cz_config() {
  SystemConfig cfg;
  cfg.tls = {{0.0, 40.0}, {500.0, 30.0}};
  cfg.delta_c_mhz = 0.0;
  cfg.epsilon_mhz = 0.0;
  cfg.kappa_mhz = 4.0;
  cfg.fock_cutoff = 6;
  return cfg;
}

SystemConfig derive_system_config(const CircuitExperimentInput& input) {
  input.params.validate();
  if (input.tls_freq_ghz.size() != input.params.j_x.size()) {
    throw ConfigError("derive_system_config: tls_freq_ghz must match j_x in length");
  }
  if (input.tls_freq_ghz.empty() || !input.drive_freq_ghz) {
    throw ConfigError("derive_system_config: tls_freq_ghz and drive_freq_ghz required");
  }
  const PhaseShiftResult phase = solve_phase_shift(input.params);
  const double omega_c = resonator_frequency(input.params, phase.phi_s);
  const DriveAmplitude drive = drive_amplitude_and_bound(input.params, omega_c);

  SystemConfig cfg;
  const double fd_mhz = *input.drive_freq_ghz * 1e3;
  for (size_t n = 0; n < input.tls_freq_ghz.size(); ++n) {
    TlsParams t;
    t.delta_mhz = input.tls_freq_ghz[n] * 1e3 - fd_mhz;
    t.g_mhz = coupling_constant(input.params, omega_c, phase.phi_s, int(n)) / (kTwoPi * 1e6);
    cfg.tls.push_back(t);
  }
  cfg.delta_c_mhz = omega_c / (kTwoPi * 1e6) - fd_mhz;
  cfg.epsilon_mhz = drive.epsilon_mhz;
  cfg.kappa_mhz = input.kappa_mhz;
  cfg.fock_cutoff = input.fock_cutoff;
  cfg.validate();
  return cfg;
}

// --- experiments --------------------------------------------------------------

namespace {

std::vector<double> sweep_values(const SweepSpec& s) {
  std::vector<double> vals;
  vals.reserve(size_t(s.steps));
  for (int i = 0; i < s.steps; ++i) {
    vals.push_back(s.start + (s.stop - s.start) * double(i) / double(s.steps - 1));
  }
  return vals;
}

SweepSpec sweep_or_default(const ExperimentSpec& spec, const char* parameter,
                           double start, double stop, int steps) {
  if (!spec.sweep) return SweepSpec{parameter, start, stop, steps};
  if (spec.sweep->parameter != parameter) {
    throw ConfigError("config: experiment " + to_string(spec.name) +
                      " sweeps \"" + std::string(parameter) + "\", not \"" +
                      spec.sweep->parameter + "\"");
  }
  return *spec.sweep;
}

void add_row(ResultTable& t, double param, const std::string& quantity, double value,
             const std::string& unit) {
  t.rows.push_back({param, quantity, value, unit});
}

EvolveOptions evolve_options_from(const ExperimentSpec& spec) {
  EvolveOptions opt;
  opt.step_ns = spec.step_ps * 1e-3;
  return opt;
}

ResultTable run_table1(const ExperimentSpec& spec) {
  ResultTable t;
  const SystemConfig base = spec.system.value_or(default_single_qubit_config());
  {
    const GatePlan x = calibrate_x(base.with_delta_c(120.0), 0);
    add_row(t, 120.0, "x_epsilon", x.segments[0].epsilon_mhz, "2pi*MHz");
    add_row(t, 120.0, "x_omega_1x", x.effective.omega_x_mhz[0], "2pi*MHz");
    add_row(t, 120.0, "x_tau_g", x.segments[0].duration_ns, "ns");
  }
  {
    const GatePlan h = calibrate_hadamard(base.with_delta_c(160.0), 0);
    add_row(t, 160.0, "hadamard_epsilon", h.segments[0].epsilon_mhz, "2pi*MHz");
    add_row(t, 160.0, "hadamard_omega_1x", h.effective.omega_x_mhz[0], "2pi*MHz");
    add_row(t, 160.0, "hadamard_tau_g", h.segments[0].duration_ns, "ns");
  }
  t.fock_cutoff = base.fock_cutoff;
  return t;
}

ResultTable run_fig2_gatetimes(const ExperimentSpec& spec) {
  ResultTable t;
  const SystemConfig base = spec.system.value_or(default_single_qubit_config());
  const SweepSpec sweep = sweep_or_default(spec, "delta_c_mhz", 80.0, 400.0, 81);
  for (double dc : sweep_values(sweep)) {
    const SystemConfig cfg = base.with_delta_c(dc);
    try {
      const GatePlan x = calibrate_x(cfg, 0);
      add_row(t, dc, "x_epsilon", x.segments[0].epsilon_mhz, "2pi*MHz");
      add_row(t, dc, "x_tau_g", x.segments[0].duration_ns, "ns");
    } catch (const CalibrationError& ex) {
      t.notes.push_back("delta_c=" + fmt17(dc) + ": X skipped: " + ex.what());
    }
    try {
      const GatePlan h = calibrate_hadamard(cfg, 0);
      add_row(t, dc, "hadamard_epsilon", h.segments[0].epsilon_mhz, "2pi*MHz");
      add_row(t, dc, "hadamard_tau_g", h.segments[0].duration_ns, "ns");
    } catch (const CalibrationError& ex) {
      t.notes.push_back("delta_c=" + fmt17(dc) + ": Hadamard skipped: " + ex.what());
    }
  }
  t.fock_cutoff = base.fock_cutoff;
  return t;
}

ResultTable run_fig2_beta(const ExperimentSpec& spec) {
  ResultTable t;
  const SystemConfig base = spec.system.value_or(default_two_qubit_config());
  if (base.n_tls() < 2) throw ConfigError("fig2-beta requires at least two TLSs");
  const SweepSpec sweep = sweep_or_default(spec, "delta_c_mhz", 80.0, 400.0, 81);
  for (double dc : sweep_values(sweep)) {
    try {
      const GatePlan plan = calibrate_two_qubit(base.with_delta_c(dc), 0, 1);
      add_row(t, dc, "epsilon_star", plan.segments[0].epsilon_mhz, "2pi*MHz");
      add_row(t, dc, "beta_2", plan.beta_2_mhz, "2pi*MHz");
      add_row(t, dc, "beta_2_prime", plan.beta_2_prime_mhz, "2pi*MHz");
      if (plan.near_real_transition) {
        t.notes.push_back("delta_c=" + fmt17(dc) + ": near real transition, "
                          "|E_i - Delta_c| within 10 |lambda_12|");
      }
    } catch (const CalibrationError& ex) {
      t.notes.push_back("delta_c=" + fmt17(dc) + ": skipped: " + ex.what());
    }
  }
  t.fock_cutoff = base.fock_cutoff;
  return t;
}

ResultTable run_fig2_energies(const ExperimentSpec& spec) {
  ResultTable t;
  const SystemConfig base = spec.system.value_or(default_two_qubit_config());
  if (base.n_tls() < 2) throw ConfigError("fig2-energies requires at least two TLSs");
  const SweepSpec sweep = sweep_or_default(spec, "epsilon_mhz", 0.0, 400.0, 401);
  for (double eps : sweep_values(sweep)) {
    const SystemConfig cfg = base.with_epsilon(eps);
    add_row(t, eps, "e_1", dressed_energy(cfg, 0).e_mhz, "2pi*MHz");
    add_row(t, eps, "e_2", dressed_energy(cfg, 1).e_mhz, "2pi*MHz");
  }
  t.fock_cutoff = base.fock_cutoff;
  return t;
}

ResultTable run_swap_point(const ExperimentSpec& spec) {
  ResultTable t;
  const SystemConfig base = spec.system.value_or(default_two_qubit_config());
  if (base.n_tls() < 2) throw ConfigError("swap-point requires at least two TLSs");
  const GatePlan plan = calibrate_two_qubit(base, 0, 1);
  const double dc = base.delta_c_mhz;
  const double eps = plan.segments[0].epsilon_mhz;
  const SystemConfig op = base.with_epsilon(eps);
  add_row(t, dc, "epsilon_star", eps, "2pi*MHz");
  add_row(t, dc, "e_1", plan.effective.e_mhz[0], "2pi*MHz");
  add_row(t, dc, "e_2", plan.effective.e_mhz[1], "2pi*MHz");
  add_row(t, dc, "lambda_12", plan.effective.lambda_mhz[0][1], "2pi*MHz");
  add_row(t, dc, "beta_1", plan.beta_1_mhz, "2pi*MHz");
  add_row(t, dc, "beta_2", plan.beta_2_mhz, "2pi*MHz");
  add_row(t, dc, "beta_2_prime", plan.beta_2_prime_mhz, "2pi*MHz");
  add_row(t, dc, "tau_g", plan.segments[0].duration_ns, "ns");
  add_row(t, dc, "swap_phase", plan.swap_phase_rad, "rad");
  const DecoherenceEstimate est = decoherence_estimate(plan, base);
  add_row(t, dc, "decoherence_rate", est.rate_mhz, "MHz");
  add_row(t, dc, "tau_g_over_tau_d", est.ratio, "1");
  add_row(t, dc, "fidelity_estimate", est.fidelity_estimate, "1");
  add_row(t, dc, "residual_dephasing_1", residual_dephasing_rate(op, 0) * 1e3, "kHz");
  add_row(t, dc, "residual_dephasing_2", residual_dephasing_rate(op, 1) * 1e3, "kHz");
  t.fock_cutoff = base.fock_cutoff;
  return t;
}

ResultTable run_fig3(const ExperimentSpec& spec) {
  ResultTable t;
  const GateKind gate = spec.gate_set ? spec.gate : GateKind::Hadamard;
  SystemConfig base;
  if (spec.system) {
    base = *spec.system;
  } else {
    base = (gate == GateKind::Swap) ? default_two_qubit_config()
                                    : default_fig3_hadamard_config();
  }
  GatePlan plan;
  switch (gate) {
    case GateKind::Hadamard: plan = calibrate_hadamard(base, 0); break;
    case GateKind::X: plan = calibrate_x(base, 0); break;
    case GateKind::Swap:
      if (base.n_tls() < 2) throw ConfigError("fig3-sweep swap requires two TLSs");
      plan = calibrate_two_qubit(base, 0, 1);
      break;
    case GateKind::CiracZoller:
      if (base.n_tls() < 2) throw ConfigError("fig3-sweep cirac-zoller requires two TLSs");
      plan = cirac_zoller_plan(base, 0, 1);
      break;
  }

  const SweepSpec sweep = sweep_or_default(spec, "kappa_mhz", 0.0, 10.0, 11);
  ChannelOptions copt;
  copt.evolve = evolve_options_from(spec);
  copt.sim_frame = spec.frame_override;
  for (double kappa : sweep_values(sweep)) {
    if (kappa < 0.0) throw ConfigError("fig3-sweep: kappa must be >= 0");
    TraceDiagnostics diag;
    const QuantumChannel channel =
        simulate_gate_channel(plan, base.with_kappa(kappa), copt, &diag);
    const FidelityReport rep = evaluate_plan_fidelity(plan, channel);
    add_row(t, kappa, "raw_fidelity", rep.raw_fidelity, "1");
    add_row(t, kappa, "compensated_fidelity", rep.compensated_fidelity, "1");
    t.step_ns = diag.step_ns;
  }
  t.fock_cutoff = base.fock_cutoff;
  return t;
}

ResultTable run_cz_plan(const ExperimentSpec& spec) {
  ResultTable t;
  const SystemConfig base = spec.system.value_or(default_cz_config());
  if (base.n_tls() < 2) throw ConfigError("cz-plan requires at least two TLSs");
  const GatePlan plan = cirac_zoller_plan(base, 0, 1);
  for (size_t s = 0; s < plan.segments.size(); ++s) {
    const double idx = double(s);
    add_row(t, idx, "delta_c", plan.segments[s].delta_c_mhz, "2pi*MHz");
    add_row(t, idx, "epsilon", plan.segments[s].epsilon_mhz, "2pi*MHz");
    add_row(t, idx, "duration", plan.segments[s].duration_ns, "ns");
  }
  add_row(t, 0.0, "total_duration", plan.total_duration_ns(), "ns");
  const DecoherenceEstimate est = decoherence_estimate(plan, base);
  add_row(t, 0.0, "swap_decoherence_rate", est.rate_mhz, "MHz");
  add_row(t, 0.0, "swap_tau_g_over_tau_d", est.ratio, "1");
  add_row(t, 0.0, "swap_fidelity_estimate", est.fidelity_estimate, "1");
  t.fock_cutoff = base.fock_cutoff;
  return t;
}

void add_effective_rows(ResultTable& t, const SystemConfig& cfg) {
  const EffectiveParams eff = compute_effective_params(cfg);
  for (int n = 0; n < cfg.n_tls(); ++n) {
    const double idx = double(n);
    add_row(t, idx, "delta_tilde", eff.delta_tilde_mhz[size_t(n)], "2pi*MHz");
    add_row(t, idx, "omega_x", eff.omega_x_mhz[size_t(n)], "2pi*MHz");
    add_row(t, idx, "e", eff.e_mhz[size_t(n)], "2pi*MHz");
    add_row(t, idx, "theta", eff.theta_rad[size_t(n)], "rad");
    add_row(t, idx, "f", eff.f_mhz[size_t(n)], "2pi*MHz");
    add_row(t, idx, "dispersive_ratio", cfg.dispersive_ratio(n), "1");
  }
  for (int m = 0; m < cfg.n_tls(); ++m) {
    for (int n = m + 1; n < cfg.n_tls(); ++n) {
      add_row(t, double(m), "lambda_" + std::to_string(m + 1) + std::to_string(n + 1),
              eff.lambda_mhz[size_t(m)][size_t(n)], "2pi*MHz");
    }
  }
}

ResultTable run_custom(const ExperimentSpec& spec) {
  if (!spec.system && !spec.circuit) {
    throw ConfigError("custom experiment requires a \"system\" or \"circuit\" config");
  }
  ResultTable t;
  SystemConfig cfg;
  bool have_system = false;

  if (spec.circuit) {
    const CircuitParams& p = spec.circuit->params;
    const PhaseShiftResult phase = solve_phase_shift(p);
    const double omega_c = resonator_frequency(p, phase.phi_s);
    add_row(t, 0.0, "phi_s", phase.phi_s, "rad");
    add_row(t, 0.0, "phase_residual", phase.residual, "1");
    add_row(t, 0.0, "omega_c", omega_c / (kTwoPi * 1e9), "GHz");
    for (size_t n = 0; n < p.j_x.size(); ++n) {
      add_row(t, double(n), "g", coupling_constant(p, omega_c, phase.phi_s, int(n)) /
                                     (kTwoPi * 1e6), "2pi*MHz");
    }
    const DriveAmplitude d = drive_amplitude_and_bound(p, omega_c);
    add_row(t, 0.0, "epsilon", d.epsilon_mhz, "2pi*MHz");
    add_row(t, 0.0, "phase_swing", d.phase_swing, "1");
    add_row(t, 0.0, "drive_bound_ok", d.bound_ok ? 1.0 : 0.0, "bool");
    add_row(t, 0.0, "epsilon_max", max_compliant_drive(p, omega_c) / (kTwoPi * 1e6),
            "2pi*MHz");
    if (!spec.circuit->tls_freq_ghz.empty() && spec.circuit->drive_freq_ghz) {
      cfg = derive_system_config(*spec.circuit);
      have_system = true;
      add_row(t, 0.0, "derived_delta_c", cfg.delta_c_mhz, "2pi*MHz");
      for (int n = 0; n < cfg.n_tls(); ++n) {
        add_row(t, double(n), "derived_delta", cfg.tls[size_t(n)].delta_mhz, "2pi*MHz");
      }
    }
  }
  if (spec.system) {
    cfg = *spec.system;
    have_system = true;
  }
  if (have_system) {
    add_effective_rows(t, cfg);
    if (spec.gate_set) {
      GatePlan plan;
      switch (spec.gate) {
        case GateKind::X: plan = calibrate_x(cfg, 0); break;
        case GateKind::Hadamard: plan = calibrate_hadamard(cfg, 0); break;
        case GateKind::Swap:
          if (cfg.n_tls() < 2) throw ConfigError("custom: swap requires two TLSs");
          plan = calibrate_two_qubit(cfg, 0, 1);
          break;
        case GateKind::CiracZoller:
          if (cfg.n_tls() < 2) throw ConfigError("custom: cirac-zoller requires two TLSs");
          plan = cirac_zoller_plan(cfg, 0, 1);
          break;
      }
      add_row(t, 0.0, "gate_epsilon", plan.segments[0].epsilon_mhz, "2pi*MHz");
      add_row(t, 0.0, "gate_duration", plan.total_duration_ns(), "ns");
      const DecoherenceEstimate est = decoherence_estimate(plan, cfg);
      add_row(t, 0.0, "gate_tau_g_over_tau_d", est.ratio, "1");
      add_row(t, 0.0, "gate_fidelity_estimate", est.fidelity_estimate, "1");
      for (const auto& s : plan.spectator_report) {
        add_row(t, double(s.site), "spectator_rabi_to_detuning", s.rabi_to_detuning, "1");
        add_row(t, double(s.site), "spectator_exchange_to_gap", s.exchange_to_gap, "1");
      }
      if (spec.simulate) {
        ChannelOptions copt;
        copt.evolve = evolve_options_from(spec);
        copt.sim_frame = spec.frame_override;
        TraceDiagnostics diag;
        const QuantumChannel channel = simulate_gate_channel(plan, cfg, copt, &diag);
        const FidelityReport rep = evaluate_plan_fidelity(plan, channel);
        add_row(t, 0.0, "raw_fidelity", rep.raw_fidelity, "1");
        add_row(t, 0.0, "compensated_fidelity", rep.compensated_fidelity, "1");
        t.step_ns = diag.step_ns;
      }
    }
    t.fock_cutoff = cfg.fock_cutoff;
  }
  return t;
}

}  // namespace

ResultTable run_experiment(const ExperimentSpec& spec) {
  ResultTable t;
  switch (spec.name) {
    case ExperimentName::Table1: t = run_table1(spec); break;
    case ExperimentName::Fig2GateTimes: t = run_fig2_gatetimes(spec); break;
    case ExperimentName::Fig2Beta: t = run_fig2_beta(spec); break;
    case ExperimentName::Fig2Energies: t = run_fig2_energies(spec); break;
    case ExperimentName::SwapPoint: t = run_swap_point(spec); break;
    case ExperimentName::Fig3Sweep: t = run_fig3(spec); break;
    case ExperimentName::CzPlan: t = run_cz_plan(spec); break;
    case ExperimentName::Custom: t = run_custom(spec); break;
  }
  t.experiment = to_string(spec.name);
  t.config_echo = save_config(spec);
  return t;
}

void write_csv(const ResultTable& table, std::ostream& out) {
  out << "# experiment: " << table.experiment << "\n";
  out << "# version: " << table.version << "\n";
  out << "# config: " << table.config_echo << "\n";
  out << "# fock_cutoff: " << table.fock_cutoff << "\n";
  out << "# step_ns: " << fmt17(table.step_ns) << "\n";
  for (const auto& note : table.notes) {
    out << "# note: " << note << "\n";
  }
  out << "param,quantity,value,unit\n";
  for (const auto& row : table.rows) {
    out << fmt17(row.param) << ',' << row.quantity << ',' << fmt17(row.value) << ','
        << row.unit << "\n";
  }
}

void write_json(const ResultTable& table, std::ostream& out) {
  Json root;
  root["spec"] = Json::parse(table.config_echo);
  Json prov;
  prov["experiment"] = table.experiment;
  prov["version"] = table.version;
  prov["fock_cutoff"] = table.fock_cutoff;
  prov["step_ns"] = table.step_ns;
  prov["notes"] = table.notes;
  root["provenance"] = prov;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    rows.push_back(Json{{"param", row.param},
                        {"quantity", row.quantity},
                        {"value", row.value},
                        {"unit", row.unit}});
  }
  root["rows"] = rows;
  out << root.dump(2) << "\n";
}

void write_output(const ResultTable& table, const ExperimentSpec& spec) {
  const auto write = [&](std::ostream& out) {
    if (spec.format == OutputFormat::Csv) {
      write_csv(table, out);
    } else {
      write_json(table, out);
    }
  };
  if (spec.output_path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(spec.output_path);
  if (!out) throw ConfigError("cannot open output path \"" + spec.output_path + "\"");
  write(out);
}

}  // namespace tlsg
