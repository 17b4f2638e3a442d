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

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "tlsg/errors.hpp"
#include "tlsg/hilbert.hpp"

namespace tlsg {

struct TlsParams {
  double delta_mhz = 0.0;  // detuning omega_n - omega_d, linear MHz
  double g_mhz = 0.0;      // coupling to the resonator, linear MHz
};

/// Effective-parameter description of the driven TLS-resonator system in the
/// rotating frame. All frequencies are linear MHz; kappa is a rate in MHz.
struct SystemConfig {
  std::vector<TlsParams> tls;
  double delta_c_mhz = 0.0;    // resonator detuning omega_c - omega_d
  double epsilon_mhz = 0.0;    // drive amplitude
  double kappa_mhz = 0.0;      // resonator decay rate
  int fock_cutoff = 10;

  // Numerical-policy knobs (these have defaults; the physics fields do not).
  double drive_bound_mhz = 1000.0;      // |epsilon| cap, 2pi x 1 GHz
  double dispersive_warn_ratio = 0.25;  // g / |Delta_nc| warning threshold
  double dispersive_error_ratio = 0.5;  // g / |Delta_nc| hard limit

  int n_tls() const { return int(tls.size()); }
  HilbertSpace space() const { return HilbertSpace(n_tls(), fock_cutoff); }

  /// Detuning between TLS n and the resonator, Delta_n - Delta_c.
  double delta_nc(int n) const {
    check_site(n);
    return tls[size_t(n)].delta_mhz - delta_c_mhz;
  }

  /// Dispersive expansion parameter g_n / |Delta_nc| for TLS n.
  double dispersive_ratio(int n) const {
    check_site(n);
    const double dnc = delta_nc(n);
    if (dnc == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(tls[size_t(n)].g_mhz) / std::abs(dnc);
  }

  void check_site(int n) const {
    if (n < 0 || n >= n_tls()) throw ConfigError("SystemConfig: TLS index out of range");
  }

  void validate() const {
    if (tls.empty()) throw ConfigError("SystemConfig: at least one TLS is required");
    if (kappa_mhz < 0.0) throw ConfigError("SystemConfig: kappa must be >= 0");
    if (fock_cutoff < 2) throw ConfigError("SystemConfig: fock_cutoff must be >= 2");
    if (drive_bound_mhz <= 0.0) throw ConfigError("SystemConfig: drive bound must be positive");
  }

  SystemConfig with_epsilon(double eps_mhz) const {
    SystemConfig c = *this;
    c.epsilon_mhz = eps_mhz;
    return c;
  }
  SystemConfig with_kappa(double k_mhz) const {
    SystemConfig c = *this;
    c.kappa_mhz = k_mhz;
    return c;
  }
  SystemConfig with_delta_c(double dc_mhz) const {
    SystemConfig c = *this;
    c.delta_c_mhz = dc_mhz;
    return c;
  }
};

struct DispersiveValidity {
  bool ok = true;                       // no TLS at/above the error threshold
  std::vector<int> warned_sites;        // ratio >= warn threshold
  std::vector<int> violating_sites;     // ratio >= error threshold
  double worst_ratio = 0.0;
};

/// Check g_n / |Delta_nc| for every TLS against the config's thresholds.
inline DispersiveValidity check_dispersive_validity(const SystemConfig& cfg) {
  DispersiveValidity v;
  for (int n = 0; n < cfg.n_tls(); ++n) {
    const double r = cfg.dispersive_ratio(n);
    v.worst_ratio = std::max(v.worst_ratio, r);
    if (r >= cfg.dispersive_error_ratio) {
      v.violating_sites.push_back(n);
      v.ok = false;
    } else if (r >= cfg.dispersive_warn_ratio) {
      v.warned_sites.push_back(n);
    }
  }
  return v;
}

}  // namespace tlsg
