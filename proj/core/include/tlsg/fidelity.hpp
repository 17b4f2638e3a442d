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

#include "tlsg/calibration.hpp"
#include "tlsg/lindblad.hpp"
#include "tlsg/operators.hpp"

namespace tlsg {

/// Average gate fidelity of channel E against target unitary U, from the
/// operator-basis sum F = (sum_j tr[U U_j' U' E(U_j)] + d^2) / (d^2 (d+1))
/// over an orthogonal unitary basis {U_j}. Requires E trace preserving
/// within 1e-6 and U unitary. dim must be a power of two (Pauli basis).
double nielsen_fidelity(const QuantumChannel& e, const Operator& u);

/// Same sum evaluated over the (rescaled) matrix-unit basis; equal to the
/// Pauli-basis value by channel-state duality. Exposed for cross-checks.
double nielsen_fidelity_matrix_units(const QuantumChannel& e, const Operator& u);

/// Closed form for unitary channels: F = (|tr(U'V)|^2 + d) / (d^2 + d).
double average_fidelity_unitary(const Operator& v, const Operator& u);

struct FidelityReport {
  double raw_fidelity = 0.0;
  double compensated_fidelity = 0.0;
  std::vector<double> compensation_angles_rad;  // one per compensation axis
  int dim = 0;
};

struct CompensationOptions {
  int grid_points = 64;       // coarse grid per angle
  int refine_iterations = 40; // golden-section refinement steps per angle
  int sweeps = 3;             // coordinate-descent sweeps for >= 2 angles
};

/// Maximize the Nielsen fidelity over dynamic-phase rotations applied after
/// the channel, one angle per compensation axis (a z rotation in the frame
/// tilted by theta about y). Returns both the raw and compensated values.
FidelityReport compensate_local_phases(const QuantumChannel& e, const Operator& target,
                                       const std::vector<CompensationAxis>& axes,
                                       int n_tls, const CompensationOptions& opt = {});

/// Conjugate the channel into the dressed basis: each site is rotated by its
/// dressed angle theta_n (about y), so sigma-bar_z becomes z.
QuantumChannel channel_in_dressed_basis(const QuantumChannel& e,
                                        const std::vector<double>& theta_rad);

/// Full comparison pipeline for a simulated gate: rotates into the dressed
/// basis when the plan's target lives there, then optimizes the plan's
/// compensation angles.
FidelityReport evaluate_plan_fidelity(const GatePlan& plan, const QuantumChannel& e);

}  // namespace tlsg
