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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "tlsg/hilbert.hpp"

namespace tlsg {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;
// Density matrices share the dense representation; validity is checked by
// diagnose_density_matrix rather than by the type.
using DensityMatrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

enum class PauliAxis { X, Y, Z, Plus, Minus };

// --- construction ---------------------------------------------------------

Operator identity(int dim);

/// Annihilation operator on a bare fock_cutoff-level mode: a[m, m+1] = sqrt(m+1).
Operator fock_annihilation(int fock_cutoff);

/// Annihilation operator of the resonator mode embedded in the composite
/// space (identity on every TLS factor).
Operator annihilation(const HilbertSpace& space);

/// 2x2 Pauli or ladder matrix. Conventions: sigma_+ = |e><g| raises the
/// sigma_z eigenvalue, sigma_z = diag(1, -1).
Operator pauli_matrix(PauliAxis axis);

/// Pauli/ladder operator of TLS `site` embedded in the composite space.
Operator pauli(PauliAxis axis, int site, const HilbertSpace& space);

/// Arbitrary single-TLS operator embedded at tensor slot `site`.
Operator embed_tls(const Operator& op2, int site, const HilbertSpace& space);

/// Single-qubit operator embedded in the bare 2^n TLS register (no Fock factor).
Operator embed_register(const Operator& op2, int site, int n_tls);

/// Arbitrary mode operator embedded on the Fock factor.
Operator embed_fock(const Operator& op_fock, const HilbertSpace& space);

Operator kron(const Operator& a, const Operator& b);

// --- states ---------------------------------------------------------------

/// |m> on a bare fock_cutoff-level mode.
Ket fock_state(int fock_cutoff, int m);

/// Truncated coherent state |alpha>, renormalized after truncation.
Ket coherent_state(int fock_cutoff, Complex alpha);

/// Computational basis state of the TLS register, index in [0, 2^n).
/// Bit (n_tls-1-site) of `index` selects TLS `site`; index 0 is all-|0>,
/// where |0> is the sigma_z = +1 state.
Ket tls_basis_state(int n_tls, int index);

DensityMatrix density_from_ket(const Ket& psi);

// --- predicates and diagnostics -------------------------------------------

double max_abs(const Operator& a);
/// max |A - A^dagger|.
double hermiticity_deviation(const Operator& a);
/// max |A^dagger A - I|.
double unitarity_deviation(const Operator& a);
/// |tr(A^dagger B)| / d; equals 1 iff A = B up to a global phase (both unitary).
double phase_invariant_overlap(const Operator& a, const Operator& b);

struct DensityDiagnostics {
  double trace_deviation = 0.0;      // |tr(rho) - 1|
  double hermiticity_deviation = 0.0;
  double min_eigenvalue = 0.0;
  bool ok(double trace_tol = 1e-8, double herm_tol = 1e-10, double neg_tol = 1e-8) const {
    return trace_deviation < trace_tol && hermiticity_deviation < herm_tol &&
           min_eigenvalue > -neg_tol;
  }
};

DensityDiagnostics diagnose_density_matrix(const DensityMatrix& rho);

// --- linear algebra --------------------------------------------------------

/// exp(-i H t) via eigendecomposition. H must be Hermitian within herm_tol.
Operator expm_hermitian(const Operator& h, double t, double herm_tol = 1e-9);

/// Largest |eigenvalue| of a Hermitian operator.
double spectral_radius_hermitian(const Operator& h);

/// Reduce a composite-space density matrix to the TLS register.
DensityMatrix partial_trace_resonator(const DensityMatrix& rho, const HilbertSpace& space);

}  // namespace tlsg
