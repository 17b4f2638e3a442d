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

#include "tlsg/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "tlsg/units.hpp"

namespace tlsg {

namespace {
void require_space_matches(const SystemConfig& cfg, const HilbertSpace& space) {
  if (space.n_tls != cfg.n_tls() || space.fock_cutoff != cfg.fock_cutoff) {
    throw ConfigError("hamiltonian: HilbertSpace does not match SystemConfig");
  }
}
}  // namespace

Operator build_full_hamiltonian(const SystemConfig& cfg, const HilbertSpace& space) {
  cfg.validate();
  require_space_matches(cfg, space);
  const Operator a = annihilation(space);
  const Operator ad = a.adjoint();

  Operator h = mhz_to_angular(cfg.delta_c_mhz) * (ad * a) +
               mhz_to_angular(cfg.epsilon_mhz) * (a + ad);
  for (int n = 0; n < cfg.n_tls(); ++n) {
    const Operator sz = pauli(PauliAxis::Z, n, space);
    const Operator sp = pauli(PauliAxis::Plus, n, space);
    const Operator sm = pauli(PauliAxis::Minus, n, space);
    h += 0.5 * mhz_to_angular(cfg.tls[size_t(n)].delta_mhz) * sz;
    h += mhz_to_angular(cfg.tls[size_t(n)].g_mhz) * (a * sp + ad * sm);
  }
  return h;
}

Operator build_transformed_hamiltonian(const SystemConfig& cfg, const HilbertSpace& space,
                                       DispersiveValidity* validity) {
  cfg.validate();
  require_space_matches(cfg, space);
  const DispersiveValidity v = check_dispersive_validity(cfg);
  if (validity != nullptr) *validity = v;
  if (!v.ok) {
    throw ConfigError("build_transformed_hamiltonian: dispersive validity violated, "
                      "worst g/|Delta_nc| = " + std::to_string(v.worst_ratio));
  }
  if (cfg.delta_c_mhz == 0.0) {
    throw ConfigError("build_transformed_hamiltonian: Delta_c must be nonzero");
  }

  const Operator a = annihilation(space);
  const Operator ad = a.adjoint();
  const Operator number = ad * a;
  const Operator quad = a + ad;
  const int d = space.dim();

  // Displaced resonator term; the -eps^2/Delta_c constant is what is left of
  // the drive after the displacement and keeps the g = 0 spectrum identical
  // to the lab frame's.
  Operator h = mhz_to_angular(cfg.delta_c_mhz) * number -
               mhz_to_angular(cfg.epsilon_mhz * cfg.epsilon_mhz / cfg.delta_c_mhz) *
                   identity(d);

  const EffectiveParams eff = compute_effective_params(cfg);
  for (int n = 0; n < cfg.n_tls(); ++n) {
    const Operator sz = pauli(PauliAxis::Z, n, space);
    const Operator sx = pauli(PauliAxis::X, n, space);
    h += 0.5 * mhz_to_angular(eff.delta_tilde_mhz[size_t(n)]) * sz;
    h += 0.5 * mhz_to_angular(eff.omega_x_mhz[size_t(n)]) * sx;
    // Residual coupling: photon-number Stark shift plus the drive-induced
    // coupling to the resonator amplitude.
    const double g = cfg.tls[size_t(n)].g_mhz;
    const double chi = g * g / cfg.delta_nc(n);
    h += mhz_to_angular(chi) * (sz * number);
    h += mhz_to_angular(eff.f_mhz[size_t(n)]) * (sz * quad);
  }
  for (int m = 0; m < cfg.n_tls(); ++m) {
    for (int n = m + 1; n < cfg.n_tls(); ++n) {
      const Operator flip = pauli(PauliAxis::Plus, n, space) * pauli(PauliAxis::Minus, m, space);
      h += 0.5 * mhz_to_angular(eff.lambda_mhz[size_t(m)][size_t(n)]) *
           (flip + Operator(flip.adjoint()));
    }
  }
  return h;
}

Operator build_hamiltonian(const SystemConfig& cfg, const HilbertSpace& space, Frame frame) {
  return frame == Frame::LabRotating ? build_full_hamiltonian(cfg, space)
                                     : build_transformed_hamiltonian(cfg, space);
}

std::vector<Operator> collapse_operators(const SystemConfig& cfg, const HilbertSpace& space) {
  cfg.validate();
  require_space_matches(cfg, space);
  if (cfg.kappa_mhz == 0.0) return {};
  // kappa is a plain rate: 4 MHz means <n(t)> = exp(-0.004 t/ns) for a bare
  // decaying mode. No 2*pi here.
  return {std::sqrt(mhz_to_rate(cfg.kappa_mhz)) * annihilation(space)};
}

Ket resonator_initial_state(const SystemConfig& cfg, Frame frame) {
  if (frame == Frame::Transformed) return fock_state(cfg.fock_cutoff, 0);
  if (cfg.delta_c_mhz == 0.0) {
    if (cfg.epsilon_mhz != 0.0) {
      throw ConfigError("resonator_initial_state: lab-frame displaced state "
                        "undefined at Delta_c = 0 with nonzero drive");
    }
    return fock_state(cfg.fock_cutoff, 0);
  }
  return coherent_state(cfg.fock_cutoff, -cfg.epsilon_mhz / cfg.delta_c_mhz);
}

int lab_frame_fock_cutoff(const SystemConfig& cfg) {
  double alpha = 0.0;
  if (cfg.delta_c_mhz != 0.0) alpha = std::abs(cfg.epsilon_mhz / cfg.delta_c_mhz);
  const int needed = int(std::ceil(alpha * alpha + 5.0 * alpha)) + 2;
  return std::max(cfg.fock_cutoff, needed);
}

}  // namespace tlsg
