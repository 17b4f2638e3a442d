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

#include <algorithm>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "tlsg/units.hpp"

using namespace tlsg;

namespace {

SystemConfig make_config(std::vector<TlsParams> tls, double delta_c, double eps,
                         double kappa = 0.0, int fock = 6) {
  SystemConfig cfg;
  cfg.tls = std::move(tls);
  cfg.delta_c_mhz = delta_c;
  cfg.epsilon_mhz = eps;
  cfg.kappa_mhz = kappa;
  cfg.fock_cutoff = fock;
  return cfg;
}

std::vector<double> sorted_spectrum(const Operator& h) {
  Eigen::SelfAdjointEigenSolver<Operator> es(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(FullHamiltonian, DecoupledSpectrum) {
  // eps = 0, g = 0: eigenvalues are Delta_c m + sum_n (+-Delta_n / 2).
  const SystemConfig cfg = make_config({{40.0, 0.0}, {-70.0, 0.0}}, 120.0, 0.0, 0.0, 3);
  const Operator h = build_full_hamiltonian(cfg, cfg.space());
  std::vector<double> expected;
  for (double s1 : {0.5, -0.5}) {
    for (double s2 : {0.5, -0.5}) {
      for (int m = 0; m < 3; ++m) {
        expected.push_back(mhz_to_angular(120.0 * m + s1 * 40.0 - s2 * 70.0));
      }
    }
  }
  std::sort(expected.begin(), expected.end());
  const std::vector<double> actual = sorted_spectrum(h);
  ASSERT_EQ(actual.size(), expected.size());
  for (size_t k = 0; k < actual.size(); ++k) {
    EXPECT_NEAR(actual[k], expected[k], 1e-12);
  }
}

TEST(FullHamiltonian, HermitianForRandomConfigs) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(-200.0, 200.0);
  for (int trial = 0; trial < 10; ++trial) {
    const SystemConfig cfg = make_config({{dist(rng), dist(rng)}, {dist(rng), dist(rng)}},
                                         dist(rng), dist(rng), 0.0, 5);
    const Operator h = build_full_hamiltonian(cfg, cfg.space());
    EXPECT_LT(hermiticity_deviation(h), 1e-12);
  }
}

TEST(FullHamiltonian, VacuumRabiSplitting) {
  // Single TLS on resonance with the resonator: the first excited doublet
  // splits by exactly 2 g (Jaynes-Cummings oracle).
  const double g = 25.0;
  const SystemConfig cfg = make_config({{80.0, g}}, 80.0, 0.0, 0.0, 8);
  const Operator h = build_full_hamiltonian(cfg, cfg.space());
  const std::vector<double> evals = sorted_spectrum(h);
  // Ground state |down, 0> at -Delta/2; then the split pair at
  // Delta/2 + Delta_c/2 ... here Delta = Delta_c so levels are
  // Delta_c/2 +- g around Delta_c/2.
  const double split = evals[2] - evals[1];
  EXPECT_NEAR(split, 2.0 * mhz_to_angular(g), 1e-10);
}

TEST(FullHamiltonian, SpaceMismatchThrows) {
  const SystemConfig cfg = make_config({{40.0, 10.0}}, 100.0, 0.0);
  EXPECT_THROW(build_full_hamiltonian(cfg, HilbertSpace(2, 6)), ConfigError);
  EXPECT_THROW(build_full_hamiltonian(cfg, HilbertSpace(1, 5)), ConfigError);
}

TEST(TransformedHamiltonian, ZeroCouplingReducesToDisplacedForm) {
  // g = 0: the dispersive rotation is the identity and only the drive
  // displacement acts: H = Delta_c a'a - eps^2/Delta_c + sum (Delta_n/2) sz.
  const SystemConfig cfg = make_config({{35.0, 0.0}}, 150.0, 45.0, 0.0, 5);
  const HilbertSpace space = cfg.space();
  const Operator h = build_transformed_hamiltonian(cfg, space);
  const Operator a = annihilation(space);
  const Operator expected =
      mhz_to_angular(150.0) * (a.adjoint() * a) -
      mhz_to_angular(45.0 * 45.0 / 150.0) * identity(space.dim()) +
      0.5 * mhz_to_angular(35.0) * pauli(PauliAxis::Z, 0, space);
  EXPECT_LT(max_abs(h - expected), 1e-12);
}

TEST(TransformedHamiltonian, ZeroCouplingSpectraMatchLabFrame) {
  // The displacement is unitary, so with g = 0 both frames have identical
  // spectra, including the -eps^2/Delta_c offset left by the displacement.
  const SystemConfig cfg = make_config({{35.0, 0.0}, {-90.0, 0.0}}, 150.0, 45.0, 0.0, 7);
  const std::vector<double> full = sorted_spectrum(build_full_hamiltonian(cfg, cfg.space()));
  const std::vector<double> disp =
      sorted_spectrum(build_transformed_hamiltonian(cfg, cfg.space()));
  ASSERT_EQ(full.size(), disp.size());
  for (size_t k = 0; k < full.size(); ++k) {
    // The Fock ladder tops differ by truncation of the displaced basis; the
    // low-lying levels must agree to rounding.
    if (k + 2 * cfg.fock_cutoff >= full.size()) continue;
    EXPECT_NEAR(full[k], disp[k], 1e-6) << "level " << k;
  }
}

TEST(TransformedHamiltonian, NoDriveMeansNoRabiTerm) {
  const SystemConfig cfg = make_config({{40.0, 20.0}}, 160.0, 0.0, 0.0, 4);
  const HilbertSpace space = cfg.space();
  const Operator h = build_transformed_hamiltonian(cfg, space);
  // eps = 0: no sigma_x component and no sigma_z (a + a') residual term.
  const Operator sx = pauli(PauliAxis::X, 0, space);
  EXPECT_NEAR(std::abs((sx * h).trace()), 0.0, 1e-12);
  const Operator szq = pauli(PauliAxis::Z, 0, space) *
                       (annihilation(space) + Operator(annihilation(space).adjoint()));
  EXPECT_NEAR(std::abs((szq.adjoint() * h).trace()), 0.0, 1e-12);
}

TEST(TransformedHamiltonian, HermitianForRandomValidConfigs) {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> dist(-40.0, 40.0);
  for (int trial = 0; trial < 10; ++trial) {
    const SystemConfig cfg = make_config(
        {{dist(rng), 10.0 + 0.2 * std::abs(dist(rng))},
         {150.0 + dist(rng), 10.0 + 0.2 * std::abs(dist(rng))}},
        450.0, dist(rng), 0.0, 5);
    const Operator h = build_transformed_hamiltonian(cfg, cfg.space());
    EXPECT_LT(hermiticity_deviation(h), 1e-12);
  }
}

TEST(TransformedHamiltonian, ValidityThresholds) {
  // g / |Delta_nc| = 0.625 is beyond the 0.5 hard limit.
  SystemConfig cfg = make_config({{40.0, 50.0}}, 120.0, 0.0);
  EXPECT_THROW(build_transformed_hamiltonian(cfg, cfg.space()), ConfigError);
  // 0.33 passes but is flagged.
  cfg = make_config({{40.0, 40.0}}, 160.0, 0.0);
  DispersiveValidity v;
  EXPECT_NO_THROW(build_transformed_hamiltonian(cfg, cfg.space(), &v));
  ASSERT_EQ(v.warned_sites.size(), 1u);
  EXPECT_EQ(v.warned_sites[0], 0);
  EXPECT_TRUE(v.ok);
}

TEST(CollapseOperators, EmptyWithoutDecay) {
  const SystemConfig cfg = make_config({{40.0, 10.0}}, 100.0, 0.0, 0.0);
  EXPECT_TRUE(collapse_operators(cfg, cfg.space()).empty());
}

TEST(CollapseOperators, NormScalesLinearlyInKappa) {
  const SystemConfig base = make_config({{40.0, 10.0}}, 100.0, 0.0, 4.0);
  const auto c4 = collapse_operators(base, base.space());
  ASSERT_EQ(c4.size(), 1u);
  const auto c8 = collapse_operators(base.with_kappa(8.0), base.space());
  const double n4 = c4[0].squaredNorm();
  const double n8 = c8[0].squaredNorm();
  EXPECT_NEAR(n8 / n4, 2.0, 1e-12);
  // kappa = 4 MHz is a rate of 0.004 / ns: sqrt(kappa) a has a[0,1] element
  // sqrt(0.004) with no 2 pi.
  EXPECT_NEAR(std::abs(c4[0](0, 1)), std::sqrt(4e-3), 1e-12);
}

TEST(CollapseOperators, AnnihilatesVacuum) {
  const SystemConfig cfg = make_config({{40.0, 10.0}}, 100.0, 0.0, 4.0);
  const HilbertSpace space = cfg.space();
  const auto cs = collapse_operators(cfg, space);
  const Ket vac = kron(Operator(tls_basis_state(1, 0)), Operator(fock_state(space.fock_cutoff, 0)));
  EXPECT_NEAR((cs[0] * vac).norm(), 0.0, 1e-14);
}

TEST(CollapseOperators, NegativeKappaRejected) {
  SystemConfig cfg = make_config({{40.0, 10.0}}, 100.0, 0.0);
  cfg.kappa_mhz = -1.0;
  EXPECT_THROW(collapse_operators(cfg, cfg.space()), ConfigError);
}

TEST(ResonatorInitialState, FrameConventions) {
  const SystemConfig cfg = make_config({{40.0, 10.0}}, 100.0, 60.0, 0.0, 12);
  const Ket vac = resonator_initial_state(cfg, Frame::Transformed);
  EXPECT_NEAR(std::abs(vac(0)), 1.0, 1e-14);
  // Lab frame: coherent state of amplitude -eps/Delta_c = -0.6.
  const Ket coh = resonator_initial_state(cfg, Frame::LabRotating);
  const Operator a = fock_annihilation(12);
  const Complex mean = (coh.adjoint() * a * coh)(0);
  EXPECT_NEAR(std::abs(mean - Complex(-0.6)), 0.0, 1e-6);
}

TEST(LabFrameCutoff, CoversCoherentAmplitude) {
  SystemConfig cfg = make_config({{40.0, 10.0}}, 100.0, 300.0, 0.0, 10);
  // |alpha| = 3: need at least 9 + 15 + 2 levels.
  EXPECT_GE(lab_frame_fock_cutoff(cfg), 26);
  cfg.epsilon_mhz = 0.0;
  EXPECT_EQ(lab_frame_fock_cutoff(cfg), 10);
}
