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

#include "tlsg/dispersive.hpp"
#include "tlsg/operators.hpp"
#include "tlsg/system_config.hpp"

namespace tlsg {

// Hamiltonians are returned in rad/ns; collapse operators in 1/sqrt(ns).
// Either frame pairs with the same collapse channel sqrt(kappa) a.
//
// Frames:
//  * lab-rotating: H = Delta_c a'a + eps (a + a') + sum_n [ (Delta_n/2) sz_n
//    + g_n (a s+_n + a' s-_n) ]; the steady resonator state is the coherent
//    state of amplitude -eps/Delta_c.
//  * transformed (dispersive): the drive displacement plus the second-order
//    Schrieffer-Wolff rotation. The displaced resonator term is
//    Delta_c a'a - eps^2/Delta_c (the constant keeps the g = 0 spectrum equal
//    to the lab frame's), the TLS terms use the effective parameters, and the
//    residual coupling sum_n sz_n [ (g_n^2/Delta_nc) a'a + f_n (a + a') ]
//    is retained. The resonator starts in vacuum in this frame.

enum class Frame { LabRotating, Transformed };

Operator build_full_hamiltonian(const SystemConfig& cfg, const HilbertSpace& space);

/// Throws ConfigError when some g_n / |Delta_nc| reaches the config's error
/// threshold; fills `validity` (when given) with the warn/error report.
Operator build_transformed_hamiltonian(const SystemConfig& cfg, const HilbertSpace& space,
                                       DispersiveValidity* validity = nullptr);

Operator build_hamiltonian(const SystemConfig& cfg, const HilbertSpace& space, Frame frame);

/// Resonator decay channel: {sqrt(kappa) a}, or empty when kappa == 0.
std::vector<Operator> collapse_operators(const SystemConfig& cfg, const HilbertSpace& space);

/// Initial resonator state for a frame: vacuum in the transformed frame, the
/// coherent state of amplitude -eps/Delta_c in the lab-rotating frame.
Ket resonator_initial_state(const SystemConfig& cfg, Frame frame);

/// Fock cutoff large enough to hold the lab-frame coherent amplitude with
/// five standard deviations of headroom (never below the configured cutoff).
int lab_frame_fock_cutoff(const SystemConfig& cfg);

}  // namespace tlsg
