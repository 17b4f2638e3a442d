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

#include "tlsg/system_config.hpp"

namespace tlsg {

// Closed-form dispersive-regime quantities. Frequencies in linear MHz,
// angles in radians. The second-order effective Hamiltonian is
//   H = Delta_c a'a + sum_n [ (Dt_n/2) sz_n + (Om_n/2) sx_n ]
//       + sum_{m<n} (lambda_mn/2) (s+_n s-_m + s+_m s-_n) + residual terms.

/// Effective detuning Dt_n = Delta_n + (g_n^2/Delta_nc)(1 - 2 eps/Delta_c).
double effective_detuning(const SystemConfig& cfg, int n);

/// Drive-induced Rabi frequency Om_n = 2 eps g_n / Delta_nc (signed).
double rabi_frequency(const SystemConfig& cfg, int n);

/// Resonator-mediated exchange coupling
/// lambda_mn = g_m g_n (Delta_mc + Delta_nc) / (Delta_mc Delta_nc).
double exchange_coupling(const SystemConfig& cfg, int m, int n);

/// Coefficient f_n of the residual drive coupling f_n sz_n (a + a'):
/// f_n = (g_n^2/Delta_nc) eps (Delta_c - 2 Delta_nc) / (2 Delta_nc Delta_c).
double residual_drive_coefficient(const SystemConfig& cfg, int n);

struct DressedEnergy {
  double e_mhz = 0.0;      // E_n = sqrt(Dt_n^2 + Om_n^2) >= 0
  double theta_rad = 0.0;  // rotation angle, atan2(Om_n, Dt_n) in (-pi, pi]
  bool degenerate = false; // E_n == 0; theta set to 0 by convention
};

/// Dressed single-TLS energy and quantization-axis angle:
/// cos(theta) = Dt_n / E_n, sin(theta) = Om_n / E_n.
DressedEnergy dressed_energy(const SystemConfig& cfg, int n);

struct TwoQubitCoefficients {
  double beta_1_mhz = 0.0;        // lambda Om_1 Om_2 / (4 E_1^2)
  double beta_2_mhz = 0.0;        // (lambda/4)(1 + Dt_1 Dt_2 / E_1^2)
  double beta_2_prime_mhz = 0.0;  // beta_2 plus the virtual-transition correction
  bool near_real_transition = false;  // |E_i - Delta_c| < 10 |lambda_12|
};

struct TwoQubitOptions {
  double resonance_rel_tol = 0.005;  // required |E1 - E2| / max(E1, E2)
};

/// Interaction-frame coefficients for a TLS pair at (or near) the dressed
/// resonance E_1 = E_2. Throws ConfigError if the pair is off resonance
/// beyond the tolerance.
TwoQubitCoefficients two_qubit_coefficients(const SystemConfig& cfg, int site_a,
                                            int site_b,
                                            const TwoQubitOptions& opt = {});

/// Per-TLS and pairwise effective parameters in one bundle.
struct EffectiveParams {
  std::vector<double> delta_tilde_mhz;
  std::vector<double> omega_x_mhz;
  std::vector<double> e_mhz;
  std::vector<double> theta_rad;
  std::vector<double> f_mhz;
  // lambda[m][n], symmetric, zero diagonal.
  std::vector<std::vector<double>> lambda_mhz;
};

EffectiveParams compute_effective_params(const SystemConfig& cfg);

}  // namespace tlsg
