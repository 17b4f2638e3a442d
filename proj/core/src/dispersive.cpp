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

#include "tlsg/dispersive.hpp"

#include <cmath>
#include <string>

namespace tlsg {

namespace {
void require_nonzero(double value, const char* what) {
  if (value == 0.0) throw ConfigError(std::string("dispersive: ") + what + " must be nonzero");
}
}  // namespace

double effective_detuning(const SystemConfig& cfg, int n) {
  cfg.check_site(n);
  const double dnc = cfg.delta_nc(n);
  require_nonzero(dnc, "Delta_nc");
  require_nonzero(cfg.delta_c_mhz, "Delta_c");
  const double g = cfg.tls[size_t(n)].g_mhz;
  return cfg.tls[size_t(n)].delta_mhz +
         (g * g / dnc) * (1.0 - 2.0 * cfg.epsilon_mhz / cfg.delta_c_mhz);
}

double rabi_frequency(const SystemConfig& cfg, int n) {
  cfg.check_site(n);
  const double dnc = cfg.delta_nc(n);
  require_nonzero(dnc, "Delta_nc");
  return 2.0 * cfg.epsilon_mhz * cfg.tls[size_t(n)].g_mhz / dnc;
}

double exchange_coupling(const SystemConfig& cfg, int m, int n) {
  cfg.check_site(m);
  cfg.check_site(n);
  if (m == n) return 0.0;
  const double dmc = cfg.delta_nc(m);
  const double dnc = cfg.delta_nc(n);
  require_nonzero(dmc, "Delta_mc");
  require_nonzero(dnc, "Delta_nc");
  return cfg.tls[size_t(m)].g_mhz * cfg.tls[size_t(n)].g_mhz * (dmc + dnc) / (dmc * dnc);
}

double residual_drive_coefficient(const SystemConfig& cfg, int n) {
  cfg.check_site(n);
  const double dnc = cfg.delta_nc(n);
  require_nonzero(dnc, "Delta_nc");
  require_nonzero(cfg.delta_c_mhz, "Delta_c");
  const double g = cfg.tls[size_t(n)].g_mhz;
  return (g * g / dnc) * cfg.epsilon_mhz * (cfg.delta_c_mhz - 2.0 * dnc) /
         (2.0 * dnc * cfg.delta_c_mhz);
}

DressedEnergy dressed_energy(const SystemConfig& cfg, int n) {
  const double dt = effective_detuning(cfg, n);
  const double om = rabi_frequency(cfg, n);
  DressedEnergy d;
  d.e_mhz = std::hypot(dt, om);
  if (d.e_mhz == 0.0) {
    d.degenerate = true;
    d.theta_rad = 0.0;
  } else {
    d.theta_rad = std::atan2(om, dt);
  }
  return d;
}

TwoQubitCoefficients two_qubit_coefficients(const SystemConfig& cfg, int site_a,
                                            int site_b, const TwoQubitOptions& opt) {
  const DressedEnergy ea = dressed_energy(cfg, site_a);
  const DressedEnergy eb = dressed_energy(cfg, site_b);
  const double emax = std::max(ea.e_mhz, eb.e_mhz);
  if (emax <= 0.0) throw ConfigError("two_qubit_coefficients: dressed energies vanish");
  if (std::abs(ea.e_mhz - eb.e_mhz) > opt.resonance_rel_tol * emax) {
    throw ConfigError("two_qubit_coefficients: pair is off dressed resonance, |E1 - E2| = " +
                      std::to_string(std::abs(ea.e_mhz - eb.e_mhz)) + " MHz");
  }
  const double lambda = exchange_coupling(cfg, site_a, site_b);
  const double dt_a = effective_detuning(cfg, site_a);
  const double dt_b = effective_detuning(cfg, site_b);
  const double om_a = rabi_frequency(cfg, site_a);
  const double om_b = rabi_frequency(cfg, site_b);
  const double e1_sq = ea.e_mhz * ea.e_mhz;

  TwoQubitCoefficients c;
  c.beta_1_mhz = lambda * om_a * om_b / (4.0 * e1_sq);
  c.beta_2_mhz = 0.25 * lambda * (1.0 + dt_a * dt_b / e1_sq);

  const double f_a = residual_drive_coefficient(cfg, site_a);
  const double f_b = residual_drive_coefficient(cfg, site_b);
  const double dc = cfg.delta_c_mhz;
  const double den_a = ea.e_mhz - dc;
  const double den_b = eb.e_mhz - dc;
  if (den_a == 0.0 || den_b == 0.0) {
    throw ConfigError("two_qubit_coefficients: E_i = Delta_c, real transitions dominate");
  }
  c.beta_2_prime_mhz = c.beta_2_mhz +
                       f_a * f_b * (ea.e_mhz + eb.e_mhz - 2.0 * dc) / (2.0 * den_a * den_b);
  const double guard = 10.0 * std::abs(lambda);
  c.near_real_transition = std::abs(den_a) < guard || std::abs(den_b) < guard;
  return c;
}

EffectiveParams compute_effective_params(const SystemConfig& cfg) {
  const int n = cfg.n_tls();
  EffectiveParams p;
  p.delta_tilde_mhz.resize(size_t(n));
  p.omega_x_mhz.resize(size_t(n));
  p.e_mhz.resize(size_t(n));
  p.theta_rad.resize(size_t(n));
  p.f_mhz.resize(size_t(n));
  p.lambda_mhz.assign(size_t(n), std::vector<double>(size_t(n), 0.0));
  for (int i = 0; i < n; ++i) {
    p.delta_tilde_mhz[size_t(i)] = effective_detuning(cfg, i);
    p.omega_x_mhz[size_t(i)] = rabi_frequency(cfg, i);
    const DressedEnergy d = dressed_energy(cfg, i);
    p.e_mhz[size_t(i)] = d.e_mhz;
    p.theta_rad[size_t(i)] = d.theta_rad;
    p.f_mhz[size_t(i)] = residual_drive_coefficient(cfg, i);
    for (int j = i + 1; j < n; ++j) {
      const double lambda = exchange_coupling(cfg, i, j);
      p.lambda_mhz[size_t(i)][size_t(j)] = lambda;
      p.lambda_mhz[size_t(j)][size_t(i)] = lambda;
    }
  }
  return p;
}

}  // namespace tlsg
