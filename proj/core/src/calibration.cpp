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

#include "tlsg/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tlsg/units.hpp"

namespace tlsg {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Hadamard: return "Hadamard";
    case GateKind::Swap: return "SWAP";
    case GateKind::CiracZoller: return "CiracZoller";
  }
  return "?";
}

namespace {

constexpr double kDegenerateRabiMhz = 1e-9;

void check_drive_bound(const SystemConfig& cfg, double eps_mhz) {
  if (std::abs(eps_mhz) > cfg.drive_bound_mhz) {
    throw CalibrationError("calibration: required drive " + std::to_string(eps_mhz) +
                           " MHz exceeds the bound of " +
                           std::to_string(cfg.drive_bound_mhz) + " MHz");
  }
}

std::vector<SpectatorEntry> spectator_entries(const SystemConfig& op_cfg,
                                              const EffectiveParams& eff,
                                              const std::vector<int>& participants) {
  std::vector<SpectatorEntry> out;
  const int ref = participants.front();
  for (int m = 0; m < op_cfg.n_tls(); ++m) {
    if (std::find(participants.begin(), participants.end(), m) != participants.end()) continue;
    SpectatorEntry e;
    e.site = m;
    const double dt_m = eff.delta_tilde_mhz[size_t(m)];
    const double om_m = eff.omega_x_mhz[size_t(m)];
    e.rabi_to_detuning = (dt_m == 0.0) ? std::numeric_limits<double>::infinity()
                                       : std::abs(om_m / dt_m);
    const double gap = eff.delta_tilde_mhz[size_t(ref)] - dt_m;
    const double lambda = eff.lambda_mhz[size_t(ref)][size_t(m)];
    e.exchange_to_gap = (gap == 0.0) ? std::numeric_limits<double>::infinity()
                                     : std::abs(lambda / gap);
    out.push_back(e);
  }
  return out;
}

std::vector<CompensationAxis> spectator_compensation(const EffectiveParams& eff,
                                                     const std::vector<SpectatorEntry>& specs) {
  std::vector<CompensationAxis> out;
  for (const auto& s : specs) {
    out.push_back({s.site, eff.theta_rad[size_t(s.site)]});
  }
  return out;
}

GatePlan single_qubit_plan(const SystemConfig& cfg, int target_tls, GateKind kind,
                           double eps_mhz) {
  check_drive_bound(cfg, eps_mhz);
  const SystemConfig op = cfg.with_epsilon(eps_mhz);
  const double omega = rabi_frequency(op, target_tls);
  if (std::abs(omega) < kDegenerateRabiMhz) {
    throw CalibrationError("calibration: gate condition met only at vanishing Rabi "
                           "frequency; the " + to_string(kind) + " gate is unreachable");
  }
  GatePlan plan;
  plan.kind = kind;
  plan.participants = {target_tls};
  plan.frame = TargetFrame::LabRotating;
  plan.sim_frame = Frame::Transformed;
  const double tau = (kind == GateKind::X) ? 500.0 / std::abs(omega)
                                           : 500.0 / (std::sqrt(2.0) * std::abs(omega));
  plan.segments = {{cfg.delta_c_mhz, eps_mhz, tau}};
  plan.effective = compute_effective_params(op);

  const Operator gate2 = (kind == GateKind::X)
                             ? pauli_matrix(PauliAxis::X)
                             : Operator((pauli_matrix(PauliAxis::X) +
                                         pauli_matrix(PauliAxis::Z)) / std::sqrt(2.0));
  plan.target_unitary = embed_register(gate2, target_tls, cfg.n_tls());

  const double dt = effective_detuning(op, target_tls);
  plan.closure_residual_mhz = (kind == GateKind::X) ? std::abs(dt) : std::abs(dt - omega);
  plan.spectator_report = spectator_entries(op, plan.effective, plan.participants);
  plan.compensation = spectator_compensation(plan.effective, plan.spectator_report);
  return plan;
}

}  // namespace

GatePlan calibrate_x(const SystemConfig& cfg, int target_tls) {
  cfg.validate();
  cfg.check_site(target_tls);
  const double dnc = cfg.delta_nc(target_tls);
  if (dnc == 0.0) throw ConfigError("calibrate_x: Delta_nc must be nonzero");
  const double g = cfg.tls[size_t(target_tls)].g_mhz;
  if (g == 0.0) throw CalibrationError("calibrate_x: TLS is uncoupled (g = 0)");
  const double dn = cfg.tls[size_t(target_tls)].delta_mhz;
  // Solve Delta_n + (g^2/Delta_nc)(1 - 2 eps/Delta_c) = 0 for eps.
  const double eps = (dn * dnc + g * g) * cfg.delta_c_mhz / (2.0 * g * g);
  return single_qubit_plan(cfg, target_tls, GateKind::X, eps);
}

GatePlan calibrate_hadamard(const SystemConfig& cfg, int target_tls) {
  cfg.validate();
  cfg.check_site(target_tls);
  const double dnc = cfg.delta_nc(target_tls);
  if (dnc == 0.0) throw ConfigError("calibrate_hadamard: Delta_nc must be nonzero");
  const double g = cfg.tls[size_t(target_tls)].g_mhz;
  if (g == 0.0) throw CalibrationError("calibrate_hadamard: TLS is uncoupled (g = 0)");
  const double dn = cfg.tls[size_t(target_tls)].delta_mhz;
  if (cfg.delta_c_mhz + g == 0.0) {
    throw CalibrationError("calibrate_hadamard: Delta_c + g = 0, condition is singular");
  }
  // Solve Dt_n(eps) = Omega_nx(eps). This is the derivation-consistent form;
  // it reproduces the known operating points exactly.
  const double eps = (dn * dnc + g * g) * cfg.delta_c_mhz /
                     (2.0 * g * (cfg.delta_c_mhz + g));
  return single_qubit_plan(cfg, target_tls, GateKind::Hadamard, eps);
}

GatePlan calibrate_two_qubit(const SystemConfig& cfg, int site_a, int site_b,
                             const TwoQubitCalibrationOptions& opt) {
  cfg.validate();
  cfg.check_site(site_a);
  cfg.check_site(site_b);
  if (site_a == site_b) throw ConfigError("calibrate_two_qubit: sites must differ");
  const TlsParams& pa = cfg.tls[size_t(site_a)];
  const TlsParams& pb = cfg.tls[size_t(site_b)];
  if (pa.delta_mhz == pb.delta_mhz && pa.g_mhz == pb.g_mhz) {
    throw CalibrationError("calibrate_two_qubit: identical TLS parameters, the pair "
                           "is resonant at every drive amplitude");
  }

  auto mismatch = [&](double eps) {
    const SystemConfig c = cfg.with_epsilon(eps);
    return dressed_energy(c, site_a).e_mhz - dressed_energy(c, site_b).e_mhz;
  };

  // Bracket sign changes of E_a - E_b on [0, drive bound], then bisect.
  std::vector<double> roots;
  const double eps_max = cfg.drive_bound_mhz;
  double prev_eps = 0.0;
  double prev_val = mismatch(prev_eps);
  if (prev_val == 0.0) roots.push_back(prev_eps);
  for (double eps = opt.scan_step_mhz; eps <= eps_max + 0.5 * opt.scan_step_mhz;
       eps += opt.scan_step_mhz) {
    const double cur_eps = std::min(eps, eps_max);
    const double cur_val = mismatch(cur_eps);
    if (cur_val == 0.0) {
      roots.push_back(cur_eps);
    } else if (prev_val != 0.0 && std::signbit(cur_val) != std::signbit(prev_val)) {
      double lo = prev_eps, hi = cur_eps, flo = prev_val;
      for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = mismatch(mid);
        if (fmid == 0.0) { lo = hi = mid; break; }
        if (std::signbit(fmid) == std::signbit(flo)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_eps = cur_eps;
    prev_val = cur_val;
    if (cur_eps >= eps_max) break;
  }
  if (roots.empty()) {
    throw CalibrationError("calibrate_two_qubit: no dressed-resonance crossing of "
                           "E_1(eps) = E_2(eps) in [0, " + std::to_string(eps_max) +
                           "] MHz");
  }
  const double eps_star = *std::min_element(roots.begin(), roots.end(),
                                            [](double x, double y) {
                                              return std::abs(x) < std::abs(y);
                                            });
  const double residual = std::abs(mismatch(eps_star));
  if (residual > opt.root_tol_mhz) {
    throw CalibrationError("calibrate_two_qubit: root refinement stalled, |E1 - E2| = " +
                           std::to_string(residual) + " MHz");
  }

  const SystemConfig op = cfg.with_epsilon(eps_star);
  const TwoQubitCoefficients coeff = two_qubit_coefficients(op, site_a, site_b);
  if (std::abs(coeff.beta_2_prime_mhz) < 1e-12) {
    throw CalibrationError("calibrate_two_qubit: beta_2' vanishes at the resonance, "
                           "no exchange evolution");
  }

  GatePlan plan;
  plan.kind = GateKind::Swap;
  plan.participants = {site_a, site_b};
  plan.frame = TargetFrame::DressedInteraction;
  plan.sim_frame = Frame::Transformed;
  const double tau = 250.0 / std::abs(coeff.beta_2_prime_mhz);
  plan.segments = {{cfg.delta_c_mhz, eps_star, tau}};
  plan.effective = compute_effective_params(op);
  plan.beta_1_mhz = coeff.beta_1_mhz;
  plan.beta_2_mhz = coeff.beta_2_mhz;
  plan.beta_2_prime_mhz = coeff.beta_2_prime_mhz;
  plan.multiple_roots = roots.size() > 1;
  plan.near_real_transition = coeff.near_real_transition;
  plan.closure_residual_mhz = residual;

  // Target: the interaction-frame exchange evolution itself, written in the
  // dressed basis of the pair. At beta_2' tau = pi/4 ... pi/2 it is SWAP on
  // the flip-flop span; beta_1 contributes the recorded Ising phase.
  const int n = cfg.n_tls();
  const Operator zz = embed_register(pauli_matrix(PauliAxis::Z), site_a, n) *
                      embed_register(pauli_matrix(PauliAxis::Z), site_b, n);
  const Operator flip = embed_register(pauli_matrix(PauliAxis::Plus), site_a, n) *
                        embed_register(pauli_matrix(PauliAxis::Minus), site_b, n);
  const Operator h12 = mhz_to_angular(coeff.beta_1_mhz) * zz +
                       mhz_to_angular(coeff.beta_2_prime_mhz) *
                           (flip + Operator(flip.adjoint()));
  plan.target_unitary = expm_hermitian(h12, tau);
  plan.swap_phase_rad = 2.0 * mhz_to_angular(coeff.beta_1_mhz) * tau;

  plan.spectator_report = spectator_entries(op, plan.effective, plan.participants);
  // Comparison happens in the dressed basis, where every compensation axis is z.
  for (int m = 0; m < n; ++m) plan.compensation.push_back({m, 0.0});
  return plan;
}

GatePlan cirac_zoller_plan(const SystemConfig& cfg, int site_a, int site_b,
                           const CiracZollerOptions& opt) {
  cfg.validate();
  cfg.check_site(site_a);
  cfg.check_site(site_b);
  if (site_a == site_b) throw ConfigError("cirac_zoller_plan: sites must differ");
  const double g_a = cfg.tls[size_t(site_a)].g_mhz;
  const double g_b = cfg.tls[size_t(site_b)].g_mhz;
  if (g_a <= 0.0 || g_b <= 0.0) {
    throw CalibrationError("cirac_zoller_plan: both TLSs must couple to the resonator");
  }
  const double delta_a = cfg.tls[size_t(site_a)].delta_mhz;
  const double delta_b = cfg.tls[size_t(site_b)].delta_mhz;
  const double dbc = (opt.phase_detuning_mhz != 0.0) ? opt.phase_detuning_mhz : 4.0 * g_b;

  GateSegment swap_seg{delta_a, 0.0, 250.0 / g_a};
  GateSegment phase_seg{delta_b - dbc, 0.0, 250.0 * std::abs(dbc) / (g_b * g_b)};

  // Dispersive-validity checks for the parked TLSs in each segment.
  auto check_segment = [&](const GateSegment& seg, int resonant_site, const char* name) {
    for (int m = 0; m < cfg.n_tls(); ++m) {
      if (m == resonant_site) continue;
      const double gap = std::abs(cfg.tls[size_t(m)].delta_mhz - seg.delta_c_mhz);
      const double g_m = std::abs(cfg.tls[size_t(m)].g_mhz);
      if (g_m >= cfg.dispersive_error_ratio * gap) {
        throw CalibrationError(std::string("cirac_zoller_plan: TLS ") + std::to_string(m) +
                               " is not dispersively protected during the " + name +
                               " segment");
      }
    }
  };
  check_segment(swap_seg, site_a, "swap");
  check_segment(phase_seg, -1, "conditional-phase");

  GatePlan plan;
  plan.kind = GateKind::CiracZoller;
  plan.participants = {site_a, site_b};
  plan.frame = TargetFrame::LabRotating;
  plan.sim_frame = Frame::LabRotating;  // resonant segments leave no dispersive frame
  plan.segments = {swap_seg, phase_seg, swap_seg};

  const int n = cfg.n_tls();
  // Controlled phase: -1 on the |11> component of the pair.
  Operator cz = identity(1 << n);
  for (int idx = 0; idx < (1 << n); ++idx) {
    const bool a_one = (idx >> (n - 1 - site_a)) & 1;
    const bool b_one = (idx >> (n - 1 - site_b)) & 1;
    if (a_one && b_one) cz(idx, idx) = -1.0;
  }
  plan.target_unitary = cz;

  // Effective-parameter snapshot during the conditional-phase segment (the
  // swap segments are resonant for TLS a, so no dispersive params exist there).
  plan.effective = compute_effective_params(cfg.with_delta_c(phase_seg.delta_c_mhz)
                                                .with_epsilon(0.0));
  plan.spectator_report = spectator_entries(cfg.with_delta_c(phase_seg.delta_c_mhz)
                                                .with_epsilon(0.0),
                                            plan.effective, plan.participants);
  // With eps = 0 every dressed axis is along +-z; plain z compensation.
  for (int m = 0; m < n; ++m) plan.compensation.push_back({m, 0.0});
  plan.closure_residual_mhz = 0.0;
  return plan;
}

DecoherenceEstimate decoherence_estimate(const GatePlan& plan, const SystemConfig& cfg) {
  cfg.validate();
  if (cfg.kappa_mhz < 0.0) throw ConfigError("decoherence_estimate: kappa must be >= 0");
  DecoherenceEstimate est;
  if (plan.kind == GateKind::CiracZoller) {
    // The resonant swap segments dominate: the TLS excitation lives in the
    // resonator and decays at kappa/2.
    est.tau_g_ns = plan.segments.front().duration_ns;
    est.rate_mhz = 0.5 * cfg.kappa_mhz;
  } else {
    est.tau_g_ns = plan.total_duration_ns();
    double worst = 0.0;
    const double dc = plan.segments.front().delta_c_mhz;
    for (int p : plan.participants) {
      cfg.check_site(p);
      const double dnc = cfg.tls[size_t(p)].delta_mhz - dc;
      if (dnc == 0.0) throw ConfigError("decoherence_estimate: Delta_nc vanishes");
      const double r = cfg.tls[size_t(p)].g_mhz / dnc;
      worst = std::max(worst, r * r);
    }
    est.rate_mhz = worst * cfg.kappa_mhz;
  }
  est.ratio = est.tau_g_ns * mhz_to_rate(est.rate_mhz);
  est.fidelity_estimate = std::exp(-est.ratio);
  return est;
}

double residual_dephasing_rate(const SystemConfig& cfg, int n) {
  cfg.check_site(n);
  const double dnc = cfg.delta_nc(n);
  if (dnc == 0.0) throw ConfigError("residual_dephasing_rate: Delta_nc must be nonzero");
  const double g = cfg.tls[size_t(n)].g_mhz;
  const double eps = cfg.epsilon_mhz;
  const double ratio = (eps * eps) * (g * g * g * g) / std::pow(dnc, 6.0);
  return ratio * cfg.kappa_mhz;
}

double resonator_fluctuation_spectrum(double omega_minus_omega_c, double kappa) {
  return kappa / (omega_minus_omega_c * omega_minus_omega_c + 0.25 * kappa * kappa);
}

}  // namespace tlsg
