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

#include <numbers>

namespace tlsg {

// Unit conventions used throughout the library (hbar = 1):
//   * detunings, couplings and drive amplitudes are linear frequencies in
//     MHz; they pick up a factor of 2*pi when a Hamiltonian is assembled,
//   * decay rates (kappa and derived decoherence rates) are plain rates in
//     MHz, i.e. 1 MHz == 1e-3 / ns with no 2*pi,
//   * times are in ns,
//   * the circuit layer works in SI units and converts on output.

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kPi = std::numbers::pi;

/// rad/ns per linear MHz.
inline constexpr double kAngularPerMhz = kTwoPi * 1e-3;
/// 1/ns per MHz when the quantity is a rate rather than a frequency.
inline constexpr double kRatePerMhz = 1e-3;

inline constexpr double mhz_to_angular(double f_mhz) { return f_mhz * kAngularPerMhz; }
inline constexpr double angular_to_mhz(double w_rad_per_ns) { return w_rad_per_ns / kAngularPerMhz; }
inline constexpr double mhz_to_rate(double f_mhz) { return f_mhz * kRatePerMhz; }

// SI constants for the circuit layer.
inline constexpr double kHbar = 1.054571817e-34;        // J s
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C

}  // namespace tlsg
