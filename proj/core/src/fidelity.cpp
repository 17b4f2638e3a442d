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

#include "tlsg/fidelity.hpp"

#include <array>
#include <cmath>

#include "tlsg/units.hpp"

namespace tlsg {

namespace {

int log2_exact(int dim) {
  int n = 0;
  while ((1 << n) < dim) ++n;
  if ((1 << n) != dim) throw ConfigError("fidelity: register dimension is not a power of 2");
  return n;
}

std::vector<Operator> pauli_basis(int n_tls) {
  const std::array<Operator, 4> single = {
      identity(2), pauli_matrix(PauliAxis::X), pauli_matrix(PauliAxis::Y),
      pauli_matrix(PauliAxis::Z)};
  std::vector<Operator> basis;
  const int total = 1 << (2 * n_tls);
  basis.reserve(size_t(total));
  for (int code = 0; code < total; ++code) {
    Operator op = Operator::Identity(1, 1);
    int c = code;
    for (int q = 0; q < n_tls; ++q) {
      op = kron(op, single[size_t(c % 4)]);
      c /= 4;
    }
    basis.push_back(op);
  }
  return basis;
}

void require_valid_inputs(const QuantumChannel& e, const Operator& u) {
  if (int(u.rows()) != e.dim || int(u.cols()) != e.dim) {
    throw ConfigError("fidelity: target dimension does not match the channel");
  }
  if (unitarity_deviation(u) > 1e-8) {
    throw ConfigError("fidelity: target operator is not unitary");
  }
  const double tp = e.trace_preservation_deviation();
  if (tp > 1e-6) {
    throw ConfigError("fidelity: channel is not trace preserving (deviation " +
                      std::to_string(tp) + ")");
  }
}

double fidelity_from_basis(const QuantumChannel& e, const Operator& u,
                           const std::vector<Operator>& basis) {
  const double d = double(e.dim);
  Complex sum = 0.0;
  for (const auto& b : basis) {
    const DensityMatrix image = e.apply(b);
    sum += (u * b.adjoint() * u.adjoint() * image).trace();
  }
  return (sum.real() + d * d) / (d * d * (d + 1.0));
}

/// Rotation by phi about the axis tilted theta from z in the x-z plane.
Operator tilted_z_rotation(double theta, double phi) {
  const Operator ry = expm_hermitian(0.5 * pauli_matrix(PauliAxis::Y), theta);
  const Operator rz = expm_hermitian(0.5 * pauli_matrix(PauliAxis::Z), phi);
  return ry * rz * ry.adjoint();
}

}  // namespace

double nielsen_fidelity(const QuantumChannel& e, const Operator& u) {
  require_valid_inputs(e, u);
  return fidelity_from_basis(e, u, pauli_basis(log2_exact(e.dim)));
}

double nielsen_fidelity_matrix_units(const QuantumChannel& e, const Operator& u) {
  require_valid_inputs(e, u);
  // Matrix units scaled by sqrt(d) form an orthogonal (non-unitary) operator
  // basis with tr(B_i' B_j) = d delta_ij; the basis sum is basis independent.
  const int d = e.dim;
  std::vector<Operator> basis;
  basis.reserve(size_t(d) * size_t(d));
  const double scale = std::sqrt(double(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Operator unit = Operator::Zero(d, d);
      unit(i, j) = scale;
      basis.push_back(unit);
    }
  }
  return fidelity_from_basis(e, u, basis);
}

double average_fidelity_unitary(const Operator& v, const Operator& u) {
  if (v.rows() != u.rows()) throw ConfigError("average_fidelity_unitary: dimension mismatch");
  const double d = double(u.rows());
  const double overlap = std::abs((u.adjoint() * v).trace());
  return (overlap * overlap + d) / (d * d + d);
}

QuantumChannel channel_in_dressed_basis(const QuantumChannel& e,
                                        const std::vector<double>& theta_rad) {
  const int n = log2_exact(e.dim);
  if (int(theta_rad.size()) != n) {
    throw ConfigError("channel_in_dressed_basis: need one angle per TLS");
  }
  Operator r = identity(e.dim);
  for (int q = 0; q < n; ++q) {
    const Operator ry = expm_hermitian(0.5 * pauli_matrix(PauliAxis::Y), theta_rad[size_t(q)]);
    r = embed_register(ry, q, n) * r;
  }
  QuantumChannel out;
  out.dim = e.dim;
  out.unit_images.reserve(e.unit_images.size());
  for (int i = 0; i < e.dim; ++i) {
    for (int j = 0; j < e.dim; ++j) {
      DensityMatrix unit = DensityMatrix::Zero(e.dim, e.dim);
      unit(i, j) = 1.0;
      out.unit_images.push_back(r.adjoint() * e.apply(r * unit * r.adjoint()) * r);
    }
  }
  return out;
}

FidelityReport compensate_local_phases(const QuantumChannel& e, const Operator& target,
                                       const std::vector<CompensationAxis>& axes,
                                       int n_tls, const CompensationOptions& opt) {
  require_valid_inputs(e, target);
  if ((1 << n_tls) != e.dim) {
    throw ConfigError("compensate_local_phases: register size does not match channel");
  }
  for (const auto& ax : axes) {
    if (ax.site < 0 || ax.site >= n_tls) {
      throw ConfigError("compensate_local_phases: compensation site out of range");
    }
  }

  const std::vector<Operator> basis = pauli_basis(n_tls);
  // Cache the channel images; each angle evaluation then only rotates them.
  std::vector<DensityMatrix> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(e.apply(b));

  const double d = double(e.dim);
  auto fidelity_with_rotation = [&](const Operator& rot) {
    Complex sum = 0.0;
    for (size_t k = 0; k < basis.size(); ++k) {
      sum += (target * basis[k].adjoint() * target.adjoint() * rot * images[k] *
              rot.adjoint())
                 .trace();
    }
    return (sum.real() + d * d) / (d * d * (d + 1.0));
  };

  FidelityReport report;
  report.dim = e.dim;
  report.raw_fidelity = fidelity_with_rotation(identity(e.dim));
  report.compensation_angles_rad.assign(axes.size(), 0.0);
  if (axes.empty()) {
    report.compensated_fidelity = report.raw_fidelity;
    return report;
  }

  auto build_rotation = [&](const std::vector<double>& phis) {
    Operator r = identity(e.dim);
    for (size_t k = 0; k < axes.size(); ++k) {
      r = embed_register(tilted_z_rotation(axes[k].theta_rad, phis[k]), axes[k].site,
                         n_tls) *
          r;
    }
    return r;
  };

  std::vector<double> phis(axes.size(), 0.0);
  auto eval = [&](const std::vector<double>& p) { return fidelity_with_rotation(build_rotation(p)); };

  // Coordinate-wise coarse grid followed by golden-section refinement; the
  // fidelity is a smooth trigonometric polynomial in each angle.
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  const int sweeps = axes.size() > 1 ? opt.sweeps : 1;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (size_t k = 0; k < axes.size(); ++k) {
      double best_phi = phis[k];
      double best_val = eval(phis);
      const double step = kTwoPi / double(opt.grid_points);
      for (int gp = 0; gp < opt.grid_points; ++gp) {
        phis[k] = double(gp) * step;
        const double val = eval(phis);
        if (val > best_val) {
          best_val = val;
          best_phi = phis[k];
        }
      }
      double lo = best_phi - step;
      double hi = best_phi + step;
      double x1 = hi - golden * (hi - lo);
      double x2 = lo + golden * (hi - lo);
      phis[k] = x1;
      double f1 = eval(phis);
      phis[k] = x2;
      double f2 = eval(phis);
      for (int it = 0; it < opt.refine_iterations; ++it) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + golden * (hi - lo);
          phis[k] = x2;
          f2 = eval(phis);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - golden * (hi - lo);
          phis[k] = x1;
          f1 = eval(phis);
        }
      }
      phis[k] = (f1 > f2) ? x1 : x2;
      if (eval(phis) < best_val) phis[k] = best_phi;
    }
  }

  report.compensated_fidelity = std::max(eval(phis), report.raw_fidelity);
  report.compensation_angles_rad = phis;
  return report;
}

FidelityReport evaluate_plan_fidelity(const GatePlan& plan, const QuantumChannel& e) {
  const int n = log2_exact(e.dim);
  if (plan.frame == TargetFrame::DressedInteraction) {
    QuantumChannel dressed = channel_in_dressed_basis(e, plan.effective.theta_rad);
    return compensate_local_phases(dressed, plan.target_unitary, plan.compensation, n);
  }
  return compensate_local_phases(e, plan.target_unitary, plan.compensation, n);
}

}  // namespace tlsg
