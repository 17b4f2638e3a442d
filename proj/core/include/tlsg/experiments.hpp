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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tlsg/calibration.hpp"
#include "tlsg/circuit.hpp"
#include "tlsg/system_config.hpp"

namespace tlsg {

inline constexpr const char* kVersionString = "tlsgates 0.1.0";

enum class ExperimentName {
  Table1,
  Fig2GateTimes,
  Fig2Beta,
  Fig2Energies,
  SwapPoint,
  Fig3Sweep,
  CzPlan,
  Custom,
};

std::string to_string(ExperimentName name);
ExperimentName experiment_from_string(const std::string& s);

enum class OutputFormat { Csv, Json };

struct SweepSpec {
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  int steps = 2;
};

/// Circuit-level input: lumped-element parameters, optionally with the TLS
/// and drive frequencies needed to derive a SystemConfig from the circuit.
struct CircuitExperimentInput {
  CircuitParams params;
  std::vector<double> tls_freq_ghz;       // one per TLS; empty unless deriving
  std::optional<double> drive_freq_ghz;
  double kappa_mhz = 0.0;
  int fock_cutoff = 10;
};

/// Translate a circuit description into effective rotating-frame parameters.
/// Requires tls_freq_ghz (matching j_x) and drive_freq_ghz.
SystemConfig derive_system_config(const CircuitExperimentInput& input);

struct ExperimentSpec {
  ExperimentName name = ExperimentName::Custom;
  std::optional<SystemConfig> system;
  std::optional<CircuitExperimentInput> circuit;
  GateKind gate = GateKind::Hadamard;
  bool gate_set = false;  // whether "gate" was given explicitly
  std::optional<SweepSpec> sweep;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;
  double step_ps = 0.0;     // simulation step override; 0 = auto
  std::optional<Frame> frame_override;
  bool simulate = false;    // custom experiment: also run the Lindblad simulation
};

struct ResultRow {
  double param = 0.0;
  std::string quantity;
  double value = 0.0;
  std::string unit;
};

struct ResultTable {
  std::string experiment;
  std::vector<ResultRow> rows;
  // Provenance: everything needed to recompute the rows.
  std::string version = kVersionString;
  std::string config_echo;  // canonical JSON echo of the resolved spec
  int fock_cutoff = 0;
  double step_ns = 0.0;     // integration step actually used (0: closed form only)
  std::vector<std::string> notes;
};

// --- config ingestion -------------------------------------------------------

/// Parse a config file. Strict: unknown keys are rejected by name, physical
/// parameters have no silent defaults.
ExperimentSpec load_config(const std::string& path);
ExperimentSpec parse_config(const std::string& json_text);
/// Canonical JSON serialization; load(save(spec)) round-trips.
std::string save_config(const ExperimentSpec& spec);

bool specs_equal(const ExperimentSpec& a, const ExperimentSpec& b);

// --- paper parameter sets ---------------------------------------------------

/// Single-TLS operating point of the gate-parameter table (Delta_1 = 40,
/// g_1 = 40, all 2pi x MHz).
SystemConfig default_single_qubit_config();
/// Two-TLS configuration of the fidelity simulations for the Hadamard gate
/// (spectator Delta_2 = -80, g_2 = 30).
SystemConfig default_fig3_hadamard_config();
/// Two-TLS exchange-gate configuration (Delta_1 = 0, Delta_2 = -60,
/// g_1 = 40, g_2 = 30, Delta_c = 300).
SystemConfig default_two_qubit_config();
/// Well-separated pair for the resonator-bus controlled-phase gate.
SystemConfig default_cz_config();

// --- running and writing ----------------------------------------------------

ResultTable run_experiment(const ExperimentSpec& spec);

void write_csv(const ResultTable& table, std::ostream& out);
void write_json(const ResultTable& table, std::ostream& out);
/// Write to spec.output_path (or stdout when empty) in spec.format.
void write_output(const ResultTable& table, const ExperimentSpec& spec);

}  // namespace tlsg
