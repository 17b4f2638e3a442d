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

#include "tlsg/operators.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "tlsg/errors.hpp"

namespace tlsg {

Operator identity(int dim) { return Operator::Identity(dim, dim); }

Operator fock_annihilation(int fock_cutoff) {
  if (fock_cutoff < 2) throw ConfigError("fock_annihilation: fock_cutoff must be >= 2");
  Operator a = Operator::Zero(fock_cutoff, fock_cutoff);
  for (int m = 0; m + 1 < fock_cutoff; ++m) {
    a(m, m + 1) = std::sqrt(double(m + 1));
  }
  return a;
}

Operator annihilation(const HilbertSpace& space) {
  return embed_fock(fock_annihilation(space.fock_cutoff), space);
}

Operator pauli_matrix(PauliAxis axis) {
  Operator m = Operator::Zero(2, 2);
  switch (axis) {
    case PauliAxis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliAxis::Y:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case PauliAxis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    case PauliAxis::Plus:
      m(0, 1) = 1.0;
      break;
    case PauliAxis::Minus:
      m(1, 0) = 1.0;
      break;
  }
  return m;
}

Operator pauli(PauliAxis axis, int site, const HilbertSpace& space) {
  return embed_tls(pauli_matrix(axis), site, space);
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator embed_tls(const Operator& op2, int site, const HilbertSpace& space) {
  if (site < 0 || site >= space.n_tls) {
    throw ConfigError("embed_tls: TLS site index out of range");
  }
  if (op2.rows() != 2 || op2.cols() != 2) {
    throw ConfigError("embed_tls: expected a 2x2 operator");
  }
  // Ordering: TLS_0 (x) ... (x) TLS_{n-1} (x) Fock.
  const int left_dim = 1 << site;
  const int right_dim = (1 << (space.n_tls - site - 1)) * space.fock_cutoff;
  return kron(kron(identity(left_dim), op2), identity(right_dim));
}

Operator embed_register(const Operator& op2, int site, int n_tls) {
  if (site < 0 || site >= n_tls) {
    throw ConfigError("embed_register: TLS site index out of range");
  }
  if (op2.rows() != 2 || op2.cols() != 2) {
    throw ConfigError("embed_register: expected a 2x2 operator");
  }
  const int left_dim = 1 << site;
  const int right_dim = 1 << (n_tls - site - 1);
  return kron(kron(identity(left_dim), op2), identity(right_dim));
}

Operator embed_fock(const Operator& op_fock, const HilbertSpace& space) {
  if (op_fock.rows() != space.fock_cutoff || op_fock.cols() != space.fock_cutoff) {
    throw ConfigError("embed_fock: operator dimension does not match fock_cutoff");
  }
  return kron(identity(space.tls_dim()), op_fock);
}

Ket fock_state(int fock_cutoff, int m) {
  if (m < 0 || m >= fock_cutoff) throw ConfigError("fock_state: level out of range");
  Ket psi = Ket::Zero(fock_cutoff);
  psi(m) = 1.0;
  return psi;
}

Ket coherent_state(int fock_cutoff, Complex alpha) {
  Ket psi(fock_cutoff);
  Complex amp = 1.0;
  psi(0) = amp;
  for (int m = 1; m < fock_cutoff; ++m) {
    amp *= alpha / std::sqrt(double(m));
    psi(m) = amp;
  }
  psi.normalize();
  return psi;
}

Ket tls_basis_state(int n_tls, int index) {
  const int dim = 1 << n_tls;
  if (index < 0 || index >= dim) throw ConfigError("tls_basis_state: index out of range");
  Ket psi = Ket::Zero(dim);
  psi(index) = 1.0;
  return psi;
}

DensityMatrix density_from_ket(const Ket& psi) { return psi * psi.adjoint(); }

double max_abs(const Operator& a) { return a.cwiseAbs().maxCoeff(); }

double hermiticity_deviation(const Operator& a) {
  return max_abs(a - Operator(a.adjoint()));
}

double unitarity_deviation(const Operator& a) {
  return max_abs(Operator(a.adjoint() * a) - identity(int(a.rows())));
}

double phase_invariant_overlap(const Operator& a, const Operator& b) {
  return std::abs((a.adjoint() * b).trace()) / double(a.rows());
}

DensityDiagnostics diagnose_density_matrix(const DensityMatrix& rho) {
  DensityDiagnostics d;
  d.trace_deviation = std::abs(rho.trace() - Complex(1.0));
  d.hermiticity_deviation = hermiticity_deviation(rho);
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (rho + rho.adjoint()),
                                             Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

Operator expm_hermitian(const Operator& h, double t, double herm_tol) {
  if (h.rows() != h.cols()) throw ConfigError("expm_hermitian: matrix not square");
  if (hermiticity_deviation(h) > herm_tol) {
    throw ConfigError("expm_hermitian: input is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  const auto& evals = es.eigenvalues();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    phases(k) = std::exp(-kI * evals(k) * t);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double spectral_radius_hermitian(const Operator& h) {
  Eigen::SelfAdjointEigenSolver<Operator> es(h, Eigen::EigenvaluesOnly);
  return std::max(std::abs(es.eigenvalues().minCoeff()),
                  std::abs(es.eigenvalues().maxCoeff()));
}

DensityMatrix partial_trace_resonator(const DensityMatrix& rho, const HilbertSpace& space) {
  const int d = space.dim();
  const int dt = space.tls_dim();
  const int nf = space.fock_cutoff;
  if (rho.rows() != d || rho.cols() != d) {
    throw ConfigError("partial_trace_resonator: state dimension does not match space");
  }
  DensityMatrix out = DensityMatrix::Zero(dt, dt);
  for (int i = 0; i < dt; ++i) {
    for (int j = 0; j < dt; ++j) {
      Complex sum = 0.0;
      for (int m = 0; m < nf; ++m) {
        sum += rho(i * nf + m, j * nf + m);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

}  // namespace tlsg
