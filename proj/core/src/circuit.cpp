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

#include "tlsg/circuit.hpp"

#include <cmath>
#include <string>

#include "tlsg/errors.hpp"
#include "tlsg/units.hpp"

namespace tlsg {

namespace {
constexpr int kNewtonCap = 200;
}

double CircuitParams::beta_l() const {
  const double e = kElementaryCharge;
  // E_J in joules is hbar * ej_rad_per_s, so beta_l = 4 e^2 L E_J / hbar^2
  // reduces to 4 e^2 L ej_rad_per_s / hbar.
  return 4.0 * e * e * l_henry * ej_rad_per_s / kHbar;
}

void CircuitParams::validate() const {
  if (ej_rad_per_s <= 0.0) throw ConfigError("CircuitParams: E_J must be positive");
  if (c0_farad <= 0.0) throw ConfigError("CircuitParams: C0 must be positive");
  if (l_henry <= 0.0) throw ConfigError("CircuitParams: L must be positive");
  for (double j : j_x) {
    if (j < 0.0) throw ConfigError("CircuitParams: j_x entries must be >= 0");
  }
}

PhaseShiftResult solve_phase_shift(const CircuitParams& p) {
  p.validate();
  const double b = p.beta_l();
  if (b > 1.0) {
    throw CalibrationError(
        "solve_phase_shift: multi-valued regime, beta_l = 4 e^2 L E_J / hbar^2 = " +
        std::to_string(b) + " > 1; refusing to pick a branch");
  }
  // f(phi) = phi + b sin(phi) + phi_ex is strictly increasing for b <= 1,
  // so the root is unique.
  const double scale = std::max({std::abs(p.phi_ex), b, 1.0});
  auto f = [&](double phi) { return phi + b * std::sin(phi) + p.phi_ex; };

  PhaseShiftResult r;
  r.phi_s = -p.phi_ex;
  double fval = f(r.phi_s);
  for (r.iterations = 0; r.iterations < kNewtonCap; ++r.iterations) {
    if (std::abs(fval) < 1e-12 * scale) {
      r.residual = std::abs(fval) / scale;
      return r;
    }
    const double deriv = 1.0 + b * std::cos(r.phi_s);
    double step = (std::abs(deriv) > 1e-14) ? -fval / deriv : -fval;
    // Halve the step until the residual decreases.
    double next = r.phi_s + step;
    double fnext = f(next);
    int halvings = 0;
    while (std::abs(fnext) > std::abs(fval) && halvings < 60) {
      step *= 0.5;
      next = r.phi_s + step;
      fnext = f(next);
      ++halvings;
    }
    r.phi_s = next;
    fval = fnext;
  }
  throw CalibrationError("solve_phase_shift: no convergence after " +
                         std::to_string(kNewtonCap) + " iterations (beta_l = " +
                         std::to_string(b) + ")");
}

double resonator_frequency(const CircuitParams& p, double phi_s) {
  p.validate();
  const double e = kElementaryCharge;
  const double inv_lj = 4.0 * e * e * p.ej_rad_per_s / kHbar;  // 1 / L_J
  const double radicand = (1.0 / p.l_henry + inv_lj * std::cos(phi_s)) / p.c0_farad;
  if (radicand <= 0.0) {
    throw ConfigError("resonator_frequency: flux bias makes the mode unstable "
                      "(negative squared frequency)");
  }
  return std::sqrt(radicand);
}

namespace {
/// Zero-point flux amplitude sqrt(hbar / (2 C0 w_c)) in weber.
double zero_point_flux(const CircuitParams& p, double omega_c) {
  return std::sqrt(kHbar / (2.0 * p.c0_farad * omega_c));
}
}  // namespace

double coupling_constant(const CircuitParams& p, double omega_c, double phi_s, int site) {
  p.validate();
  if (omega_c <= 0.0) throw ConfigError("coupling_constant: omega_c must be positive");
  if (site < 0 || site >= int(p.j_x.size())) {
    throw ConfigError("coupling_constant: TLS site out of range");
  }
  // Coupling term (2e/hbar) E_J j_xn Phi sigma_x with Phi -> zero-point flux.
  const double ej_joule = kHbar * p.ej_rad_per_s;
  const double g_joule = (2.0 * kElementaryCharge / kHbar) * ej_joule * p.j_x[site] *
                         zero_point_flux(p, omega_c) * std::sin(phi_s);
  return g_joule / kHbar;
}

DriveAmplitude drive_amplitude_and_bound(const CircuitParams& p, double omega_c) {
  p.validate();
  if (omega_c <= 0.0) throw ConfigError("drive_amplitude_and_bound: omega_c must be positive");
  DriveAmplitude d;
  d.epsilon_rad_per_s = p.delta_ic_ampere * zero_point_flux(p, omega_c) / kHbar;
  d.epsilon_mhz = d.epsilon_rad_per_s / (kTwoPi * 1e6);
  const double dphi_d = p.delta_ic_ampere / (p.c0_farad * omega_c * omega_c);
  d.phase_swing = std::abs(2.0 * kElementaryCharge * dphi_d / kHbar);
  d.bound_ok = d.phase_swing < 0.1;
  return d;
}

double max_compliant_drive(const CircuitParams& p, double omega_c) {
  p.validate();
  if (omega_c <= 0.0) throw ConfigError("max_compliant_drive: omega_c must be positive");
  // Largest dI_c with |2 e dPhi_d / hbar| = 0.1.
  const double dic_max = 0.1 * kHbar * p.c0_farad * omega_c * omega_c /
                         (2.0 * kElementaryCharge);
  return dic_max * zero_point_flux(p, omega_c) / kHbar;
}

}  // namespace tlsg
