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

#include <vector>

namespace tlsg {

/// Lumped-element description of the SQUID-loop junction resonator.
///
/// The circuit layer works in SI units: energies as angular frequencies
/// (E_J / hbar in rad/s), capacitance in farads, inductance in henries,
/// currents in amperes. Fluxes are handled as dimensionless junction phases
/// phi = 2 e Phi / hbar.
struct CircuitParams {
  double ej_rad_per_s = 0.0;       // Josephson energy E_J / hbar
  double c0_farad = 0.0;           // total capacitance
  double l_henry = 0.0;            // loop inductance
  double phi_ex = 0.0;             // external flux as a phase, 2 e Phi_ex / hbar
  double delta_ic_ampere = 0.0;    // drive current amplitude
  std::vector<double> j_x;         // per-TLS dimensionless coupling magnitudes

  /// Dimensionless screening parameter 4 e^2 L E_J / hbar^2 = L / L_J.
  /// The equilibrium-phase equation is single-valued for beta_l <= 1.
  double beta_l() const;

  void validate() const;
};

struct PhaseShiftResult {
  double phi_s = 0.0;       // equilibrium phase 2 e Phi_s / hbar
  double residual = 0.0;    // |phi_s + beta_l sin(phi_s) + phi_ex| / scale
  int iterations = 0;
};

/// Solve phi_s + beta_l sin(phi_s) = -phi_ex by damped Newton iteration from
/// phi_s = -phi_ex. Throws CalibrationError in the multi-valued regime
/// (beta_l > 1) or if the iteration cap is reached.
PhaseShiftResult solve_phase_shift(const CircuitParams& p);

/// Resonator frequency in rad/s at the given equilibrium phase.
/// Throws ConfigError if the flux bias makes the mode unstable.
double resonator_frequency(const CircuitParams& p, double phi_s);

/// TLS-resonator coupling in rad/s for TLS `site`, from the critical-current
/// coupling (2e/hbar) E_J j_xn Phi sin(phi_s) with the mode's zero-point flux.
double coupling_constant(const CircuitParams& p, double omega_c_rad_per_s,
                         double phi_s, int site);

struct DriveAmplitude {
  double epsilon_rad_per_s = 0.0;  // drive amplitude in the rotating frame
  double epsilon_mhz = 0.0;        // same, as a linear frequency in MHz
  double phase_swing = 0.0;        // |2 e dPhi_d / hbar|
  bool bound_ok = true;            // phase_swing < 0.1
};

/// Drive amplitude epsilon = dI_c sqrt(hbar / (2 C0 w_c)) and the
/// harmonic-approximation bound on the driven phase oscillation.
DriveAmplitude drive_amplitude_and_bound(const CircuitParams& p, double omega_c_rad_per_s);

/// Largest drive amplitude (rad/s) compatible with the phase-swing bound.
double max_compliant_drive(const CircuitParams& p, double omega_c_rad_per_s);

}  // namespace tlsg
