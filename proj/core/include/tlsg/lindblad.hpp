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

#include <optional>
#include <vector>

#include "tlsg/calibration.hpp"
#include "tlsg/hamiltonian.hpp"
#include "tlsg/operators.hpp"

namespace tlsg {

/// Lindblad generator: -i[H, rho] + sum_k (C_k rho C_k' - {C_k'C_k, rho}/2).
/// H in rad/ns, collapse operators in 1/sqrt(ns).
Operator lindblad_rhs(const Operator& h, const std::vector<Operator>& collapse,
                      const DensityMatrix& rho);

struct EvolveOptions {
  /// Integration step in ns; 0 selects 0.05 / f_max, where f_max is the
  /// largest eigenfrequency of H in cycles per ns.
  double step_ns = 0.0;
  /// Keep every k-th state in the trace (0: only the initial and final states).
  int store_every = 0;
  /// Cadence (in steps) of the positivity diagnostic; trace and Hermiticity
  /// drift are monitored every step.
  int diag_every = 100;
  double trace_tol = 1e-6;
  double negativity_tol = 1e-6;
};

struct TraceDiagnostics {
  double max_trace_deviation = 0.0;
  double max_hermiticity_drift = 0.0;  // before per-step re-symmetrization
  double min_eigenvalue = 1.0;
  double step_ns = 0.0;
  long steps = 0;
};

struct SimulationTrace {
  std::vector<double> times_ns;
  std::vector<DensityMatrix> states;
  TraceDiagnostics diagnostics;
  const DensityMatrix& final_state() const { return states.back(); }
};

/// Fixed-step RK4 integration of the Lindblad equation under a constant
/// Hamiltonian. rho is re-symmetrized each step. Throws SimulationError with
/// a step-size advisory if the trace or positivity diagnostics fail.
SimulationTrace evolve(const Operator& h, const std::vector<Operator>& collapse,
                       const DensityMatrix& rho0, double duration_ns,
                       const EvolveOptions& options = {});

/// Convenience wrapper: evolve under one gate segment of a plan, in the given
/// frame, starting from rho0 on the composite space.
SimulationTrace evolve_segment(const SystemConfig& cfg, const GateSegment& segment,
                               Frame frame, const DensityMatrix& rho0,
                               const EvolveOptions& options = {});

/// Linear map on the TLS register, represented by its action on the matrix
/// units E_ij of the computational basis.
struct QuantumChannel {
  int dim = 0;
  std::vector<DensityMatrix> unit_images;  // E(E_ij) at index i*dim + j

  const DensityMatrix& image(int i, int j) const { return unit_images[size_t(i * dim + j)]; }
  DensityMatrix apply(const DensityMatrix& rho) const;
  double trace_preservation_deviation() const;  // max_ij |tr E(E_ij) - delta_ij|

  static QuantumChannel identity_channel(int dim);
  /// Unitary conjugation rho -> U rho U'.
  static QuantumChannel from_unitary(const Operator& u);
};

struct ChannelOptions {
  EvolveOptions evolve;
  std::optional<Frame> sim_frame;       // default: the plan's sim_frame
  std::optional<Ket> resonator_init;    // default: frame-appropriate state
  int workers = 0;                      // 0: hardware concurrency
};

/// Simulate the full open-system gate and reconstruct the induced channel on
/// the TLS register. Each matrix-unit image is recovered by evolving physical
/// states (projectors and two-level superposition states) and using the
/// linearity of the Lindblad propagator; diagnostics therefore apply to every
/// run. The aggregated worst-case diagnostics are returned through `diag`.
QuantumChannel simulate_gate_channel(const GatePlan& plan, const SystemConfig& cfg,
                                     const ChannelOptions& options = {},
                                     TraceDiagnostics* diag = nullptr);

}  // namespace tlsg
