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

#include "tlsg/lindblad.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <string>
#include <thread>

#include <Eigen/Eigenvalues>

#include "tlsg/units.hpp"

namespace tlsg {

namespace {

/// Precomputed G = -iH - (1/2) sum C'C so that the generator becomes
/// L(rho) = G rho + rho G' + sum C rho C'.
struct Generator {
  Operator g;
  std::vector<Operator> collapse;

  Generator(const Operator& h, const std::vector<Operator>& cs) : collapse(cs) {
    g = -kI * h;
    for (const auto& c : collapse) {
      g -= 0.5 * (c.adjoint() * c);
    }
  }

  void rhs(const DensityMatrix& rho, DensityMatrix& out, DensityMatrix& scratch) const {
    out.noalias() = g * rho;
    out.noalias() += rho * g.adjoint();
    for (const auto& c : collapse) {
      scratch.noalias() = c * rho;
      out.noalias() += scratch * c.adjoint();
    }
  }
};

void check_dimensions(const Operator& h, const std::vector<Operator>& collapse,
                      const DensityMatrix& rho) {
  if (h.rows() != h.cols()) throw ConfigError("lindblad: Hamiltonian is not square");
  if (rho.rows() != h.rows() || rho.cols() != h.cols()) {
    throw ConfigError("lindblad: state dimension does not match the Hamiltonian");
  }
  for (const auto& c : collapse) {
    if (c.rows() != h.rows() || c.cols() != h.cols()) {
      throw ConfigError("lindblad: collapse operator dimension mismatch");
    }
  }
}

double min_eigenvalue(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Operator> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

Operator lindblad_rhs(const Operator& h, const std::vector<Operator>& collapse,
                      const DensityMatrix& rho) {
  check_dimensions(h, collapse, rho);
  if (hermiticity_deviation(h) > 1e-9) {
    throw ConfigError("lindblad_rhs: Hamiltonian is not Hermitian");
  }
  const Generator gen(h, collapse);
  DensityMatrix out(rho.rows(), rho.cols()), scratch(rho.rows(), rho.cols());
  gen.rhs(rho, out, scratch);
  return out;
}

SimulationTrace evolve(const Operator& h, const std::vector<Operator>& collapse,
                       const DensityMatrix& rho0, double duration_ns,
                       const EvolveOptions& options) {
  check_dimensions(h, collapse, rho0);
  if (hermiticity_deviation(h) > 1e-9) {
    throw ConfigError("evolve: Hamiltonian is not Hermitian");
  }
  if (duration_ns < 0.0) throw ConfigError("evolve: negative duration");

  SimulationTrace trace;
  trace.times_ns.push_back(0.0);
  trace.states.push_back(rho0);

  double step = options.step_ns;
  if (step <= 0.0) {
    // 5% of the fastest Hamiltonian period; the decay rate is added to the
    // frequency scale so that a purely dissipative system is still resolved.
    double fmax = spectral_radius_hermitian(h) / kTwoPi;
    for (const auto& c : collapse) {
      fmax = std::max(fmax, spectral_radius_hermitian(Operator(c.adjoint() * c)) / kTwoPi);
    }
    step = (fmax > 0.0) ? 0.05 / fmax : (duration_ns > 0.0 ? duration_ns / 100.0 : 1.0);
  }
  trace.diagnostics.step_ns = step;
  trace.diagnostics.min_eigenvalue = min_eigenvalue(rho0);
  if (duration_ns == 0.0) return trace;

  const long n_steps = std::max(1L, long(std::ceil(duration_ns / step)));
  const double dt = duration_ns / double(n_steps);
  trace.diagnostics.step_ns = dt;
  trace.diagnostics.steps = n_steps;

  const Generator gen(h, collapse);
  const Eigen::Index d = rho0.rows();
  DensityMatrix rho = rho0;
  DensityMatrix k1(d, d), k2(d, d), k3(d, d), k4(d, d), work(d, d), scratch(d, d);

  auto fail = [&](const std::string& what, double t) {
    throw SimulationError("evolve: " + what + " at t = " + std::to_string(t) +
                          " ns (step " + std::to_string(dt) +
                          " ns); reduce the integration step");
  };

  for (long s = 0; s < n_steps; ++s) {
    gen.rhs(rho, k1, scratch);
    work = rho + (0.5 * dt) * k1;
    gen.rhs(work, k2, scratch);
    work = rho + (0.5 * dt) * k2;
    gen.rhs(work, k3, scratch);
    work = rho + dt * k3;
    gen.rhs(work, k4, scratch);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double herm = hermiticity_deviation(rho);
    trace.diagnostics.max_hermiticity_drift =
        std::max(trace.diagnostics.max_hermiticity_drift, herm);
    rho = 0.5 * (rho + rho.adjoint().eval());

    const double t = double(s + 1) * dt;
    const double trace_dev = std::abs(rho.trace() - Complex(1.0));
    trace.diagnostics.max_trace_deviation =
        std::max(trace.diagnostics.max_trace_deviation, trace_dev);
    if (trace_dev > options.trace_tol) fail("trace drift " + std::to_string(trace_dev), t);

    const bool last = (s + 1 == n_steps);
    if (last || (options.diag_every > 0 && (s + 1) % options.diag_every == 0)) {
      const double mineig = min_eigenvalue(rho);
      trace.diagnostics.min_eigenvalue =
          std::min(trace.diagnostics.min_eigenvalue, mineig);
      if (mineig < -options.negativity_tol) {
        fail("negativity " + std::to_string(mineig), t);
      }
    }
    if (last || (options.store_every > 0 && (s + 1) % options.store_every == 0)) {
      trace.times_ns.push_back(t);
      trace.states.push_back(rho);
    }
  }
  return trace;
}

SimulationTrace evolve_segment(const SystemConfig& cfg, const GateSegment& segment,
                               Frame frame, const DensityMatrix& rho0,
                               const EvolveOptions& options) {
  const SystemConfig seg_cfg =
      cfg.with_delta_c(segment.delta_c_mhz).with_epsilon(segment.epsilon_mhz);
  const HilbertSpace space = seg_cfg.space();
  const Operator h = build_hamiltonian(seg_cfg, space, frame);
  return evolve(h, collapse_operators(seg_cfg, space), rho0, segment.duration_ns, options);
}

DensityMatrix QuantumChannel::apply(const DensityMatrix& rho) const {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw ConfigError("QuantumChannel::apply: dimension mismatch");
  }
  DensityMatrix out = DensityMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const Complex w = rho(i, j);
      if (w != Complex(0.0)) out += w * image(i, j);
    }
  }
  return out;
}

double QuantumChannel::trace_preservation_deviation() const {
  double worst = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const Complex tr = image(i, j).trace();
      const Complex expect = (i == j) ? Complex(1.0) : Complex(0.0);
      worst = std::max(worst, std::abs(tr - expect));
    }
  }
  return worst;
}

QuantumChannel QuantumChannel::identity_channel(int dim) {
  QuantumChannel e;
  e.dim = dim;
  e.unit_images.reserve(size_t(dim) * size_t(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      DensityMatrix unit = DensityMatrix::Zero(dim, dim);
      unit(i, j) = 1.0;
      e.unit_images.push_back(std::move(unit));
    }
  }
  return e;
}

QuantumChannel QuantumChannel::from_unitary(const Operator& u) {
  QuantumChannel e;
  e.dim = int(u.rows());
  e.unit_images.reserve(size_t(e.dim) * size_t(e.dim));
  for (int i = 0; i < e.dim; ++i) {
    for (int j = 0; j < e.dim; ++j) {
      e.unit_images.push_back(u.col(i) * u.col(j).adjoint());
    }
  }
  return e;
}

QuantumChannel simulate_gate_channel(const GatePlan& plan, const SystemConfig& cfg,
                                     const ChannelOptions& options, TraceDiagnostics* diag) {
  cfg.validate();
  if (plan.segments.empty()) throw ConfigError("simulate_gate_channel: empty plan");
  const Frame frame = options.sim_frame.value_or(plan.sim_frame);

  SystemConfig base = cfg;
  if (frame == Frame::LabRotating) {
    // Make room for the displaced coherent state of the largest segment.
    int cutoff = cfg.fock_cutoff;
    for (const auto& seg : plan.segments) {
      SystemConfig c = cfg.with_delta_c(seg.delta_c_mhz).with_epsilon(seg.epsilon_mhz);
      cutoff = std::max(cutoff, lab_frame_fock_cutoff(c));
    }
    base.fock_cutoff = cutoff;
  }
  const HilbertSpace space = base.space();
  const int dt_dim = space.tls_dim();

  Ket res_init;
  if (options.resonator_init.has_value()) {
    res_init = *options.resonator_init;
    if (res_init.size() != base.fock_cutoff) {
      throw ConfigError("simulate_gate_channel: resonator_init dimension mismatch");
    }
  } else {
    const auto& first = plan.segments.front();
    res_init = resonator_initial_state(
        base.with_delta_c(first.delta_c_mhz).with_epsilon(first.epsilon_mhz), frame);
  }
  const DensityMatrix rho_res = density_from_ket(res_init);

  // Physical preparation states: projectors |i><i| and, per pair i<j, the
  // superpositions (|i>+|j>)/sqrt2 and (|i>+i|j>)/sqrt2. The matrix-unit
  // images follow by linearity of the propagator.
  struct Task {
    DensityMatrix tls_state;
    int i = 0, j = 0;
    int flavor = 0;  // 0: projector, 1: +, 2: +i
  };
  std::vector<Task> tasks;
  for (int i = 0; i < dt_dim; ++i) {
    Ket e_i = tls_basis_state(space.n_tls, i);
    tasks.push_back({density_from_ket(e_i), i, i, 0});
  }
  for (int i = 0; i < dt_dim; ++i) {
    for (int j = i + 1; j < dt_dim; ++j) {
      Ket e_i = tls_basis_state(space.n_tls, i);
      Ket e_j = tls_basis_state(space.n_tls, j);
      Ket plus = (e_i + e_j) / std::sqrt(2.0);
      Ket plus_i = (e_i + kI * e_j) / std::sqrt(2.0);
      tasks.push_back({density_from_ket(plus), i, j, 1});
      tasks.push_back({density_from_ket(plus_i), i, j, 2});
    }
  }

  // Per-segment Hamiltonians and collapse operators are shared by all tasks.
  std::vector<Operator> h_segs;
  std::vector<std::vector<Operator>> c_segs;
  for (const auto& seg : plan.segments) {
    const SystemConfig seg_cfg =
        base.with_delta_c(seg.delta_c_mhz).with_epsilon(seg.epsilon_mhz);
    h_segs.push_back(build_hamiltonian(seg_cfg, space, frame));
    c_segs.push_back(collapse_operators(seg_cfg, space));
  }

  std::vector<DensityMatrix> outputs(tasks.size());
  std::vector<TraceDiagnostics> diags(tasks.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      const size_t k = next.fetch_add(1);
      if (k >= tasks.size() || failed.load()) break;
      try {
        DensityMatrix rho = kron(tasks[k].tls_state, rho_res);
        TraceDiagnostics worst;
        for (size_t s = 0; s < plan.segments.size(); ++s) {
          SimulationTrace tr = evolve(h_segs[s], c_segs[s], rho,
                                      plan.segments[s].duration_ns, options.evolve);
          rho = tr.final_state();
          worst.max_trace_deviation =
              std::max(worst.max_trace_deviation, tr.diagnostics.max_trace_deviation);
          worst.max_hermiticity_drift =
              std::max(worst.max_hermiticity_drift, tr.diagnostics.max_hermiticity_drift);
          worst.min_eigenvalue =
              std::min(worst.min_eigenvalue, tr.diagnostics.min_eigenvalue);
          worst.step_ns = tr.diagnostics.step_ns;
          worst.steps += tr.diagnostics.steps;
        }
        outputs[k] = partial_trace_resonator(rho, space);
        diags[k] = worst;
      } catch (const std::exception& ex) {
        std::scoped_lock lock(failure_mutex);
        failure = ex.what();
        failed.store(true);
        break;
      }
    }
  };

  int n_workers = options.workers > 0 ? options.workers
                                      : int(std::thread::hardware_concurrency());
  n_workers = std::max(1, std::min<int>(n_workers, int(tasks.size())));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(size_t(n_workers));
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw SimulationError("simulate_gate_channel: " + failure);

  if (diag != nullptr) {
    TraceDiagnostics worst;
    for (const auto& d : diags) {
      worst.max_trace_deviation = std::max(worst.max_trace_deviation, d.max_trace_deviation);
      worst.max_hermiticity_drift =
          std::max(worst.max_hermiticity_drift, d.max_hermiticity_drift);
      worst.min_eigenvalue = std::min(worst.min_eigenvalue, d.min_eigenvalue);
      worst.step_ns = d.step_ns;
      worst.steps = std::max(worst.steps, d.steps);
    }
    *diag = worst;
  }

  // Assemble E(E_ij) from the evolved physical states.
  QuantumChannel e;
  e.dim = dt_dim;
  e.unit_images.assign(size_t(dt_dim) * size_t(dt_dim), DensityMatrix());
  size_t task_idx = 0;
  for (int i = 0; i < dt_dim; ++i) {
    e.unit_images[size_t(i * dt_dim + i)] = outputs[task_idx++];
  }
  for (int i = 0; i < dt_dim; ++i) {
    for (int j = i + 1; j < dt_dim; ++j) {
      const DensityMatrix& plus = outputs[task_idx++];
      const DensityMatrix& plus_i = outputs[task_idx++];
      const DensityMatrix& pii = e.unit_images[size_t(i * dt_dim + i)];
      const DensityMatrix& pjj = e.unit_images[size_t(j * dt_dim + j)];
      // E(|j><i|) = E(P+) - i E(Pi) - (1-i)/2 (E(|i><i|) + E(|j><j|)).
      DensityMatrix e_ji = plus - kI * plus_i - 0.5 * (Complex(1.0, -1.0)) * (pii + pjj);
      e.unit_images[size_t(j * dt_dim + i)] = e_ji;
      e.unit_images[size_t(i * dt_dim + j)] = e_ji.adjoint();
    }
  }
  return e;
}

}  // namespace tlsg
