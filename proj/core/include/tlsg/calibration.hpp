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

#include <string>
#include <vector>

#include "tlsg/dispersive.hpp"
#include "tlsg/hamiltonian.hpp"
#include "tlsg/operators.hpp"

namespace tlsg {

enum class GateKind { X, Hadamard, Swap, CiracZoller };

std::string to_string(GateKind kind);

/// One piecewise-constant control segment. Switching between segments is
/// modeled as instantaneous.
struct GateSegment {
  double delta_c_mhz = 0.0;
  double epsilon_mhz = 0.0;
  double duration_ns = 0.0;
};

/// Frame in which target_unitary is expressed. Single-qubit and
/// controlled-phase targets live in the computational (lab-rotating) basis;
/// the SWAP target lives in the dressed basis of the two participants.
enum class TargetFrame { LabRotating, DressedInteraction };

/// A qubit whose dynamic phase may be compensated before fidelity
/// comparison, with its rotation axis tilted by theta from z in the x-z
/// plane (theta = 0 is a plain z rotation).
struct CompensationAxis {
  int site = 0;
  double theta_rad = 0.0;
};

struct SpectatorEntry {
  int site = 0;
  double rabi_to_detuning = 0.0;   // |Omega_mx / Dt_m|, small means protected
  double exchange_to_gap = 0.0;    // |lambda_1m / (Dt_1 - Dt_m)|, small means protected
};

struct GatePlan {
  GateKind kind = GateKind::X;
  std::vector<GateSegment> segments;
  std::vector<int> participants;
  Operator target_unitary;  // on the 2^n TLS register
  TargetFrame frame = TargetFrame::LabRotating;
  Frame sim_frame = Frame::Transformed;  // Hamiltonian used when simulating

  EffectiveParams effective;  // snapshot at the (first-segment) operating point
  std::vector<CompensationAxis> compensation;
  std::vector<SpectatorEntry> spectator_report;

  // Two-qubit bookkeeping.
  double beta_1_mhz = 0.0;
  double beta_2_mhz = 0.0;
  double beta_2_prime_mhz = 0.0;
  /// Ising phase 2 beta_1 tau accumulated by the swapped pair relative to
  /// |00>/|11>; it is part of target_unitary, recorded here for reporting.
  double swap_phase_rad = 0.0;
  bool multiple_roots = false;
  bool near_real_transition = false;

  double closure_residual_mhz = 0.0;  // defining equation residual at the solution

  double total_duration_ns() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.duration_ns;
    return t;
  }
};

/// Spin-flip gate: drive amplitude from Dt_n(eps) = 0, duration pi / Omega_nx.
GatePlan calibrate_x(const SystemConfig& cfg, int target_tls);

/// Hadamard gate: drive amplitude from Dt_n(eps) = Omega_nx(eps), duration
/// pi / (sqrt(2) Omega_nx).
GatePlan calibrate_hadamard(const SystemConfig& cfg, int target_tls);

struct TwoQubitCalibrationOptions {
  double scan_step_mhz = 1.0;   // bracketing scan resolution over [0, drive bound]
  double root_tol_mhz = 1e-6;   // required |E1 - E2| at the returned root
};

/// SWAP gate: finds the drive amplitude where the dressed energies of the
/// pair cross, then plans the exchange evolution of duration
/// pi / (2 |beta_2'|). The target is exp(-i H_12 tau) in the dressed basis,
/// i.e. SWAP together with the beta_1-induced phase factors.
GatePlan calibrate_two_qubit(const SystemConfig& cfg, int site_a, int site_b,
                             const TwoQubitCalibrationOptions& opt = {});

struct CiracZollerOptions {
  /// TLS-resonator detuning Delta_2c used during the conditional-phase
  /// segment; 0 selects 4 g_2.
  double phase_detuning_mhz = 0.0;
};

/// Resonator-bus controlled-phase gate: swap TLS a <-> resonator at
/// resonance (eps = 0, duration pi / 2 g_a), Stark-shift conditional phase
/// on TLS b (duration pi Delta_bc / 2 g_b^2), swap back.
GatePlan cirac_zoller_plan(const SystemConfig& cfg, int site_a, int site_b,
                           const CiracZollerOptions& opt = {});

struct DecoherenceEstimate {
  double tau_g_ns = 0.0;
  double rate_mhz = 0.0;   // tau_d^{-1}
  double ratio = 0.0;      // tau_g / tau_d
  double fidelity_estimate = 1.0;  // exp(-tau_g / tau_d)
};

/// Analytic decoherence during a gate: resonator-induced Purcell rate
/// g_n^2 kappa / Delta_nc^2 for dispersive gates (worst participant), kappa/2
/// during the resonant swap segments of the Cirac-Zoller gate.
DecoherenceEstimate decoherence_estimate(const GatePlan& plan, const SystemConfig& cfg);

/// Order-of-magnitude dephasing from resonator quantum fluctuations through
/// the residual drive coupling: (eps^2 g_n^4 / Delta_nc^6) kappa, in MHz.
double residual_dephasing_rate(const SystemConfig& cfg, int n);

/// Fluctuation spectrum <a a'>_w = kappa / ((w - w_c)^2 + kappa^2/4).
/// Arguments in any consistent rate unit; the peak value is 4 / kappa.
double resonator_fluctuation_spectrum(double omega_minus_omega_c, double kappa);

}  // namespace tlsg
