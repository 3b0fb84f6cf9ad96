// Copyright 2026 The qecengine Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "qecengine/channels.hpp"
#include "qecengine/codes.hpp"
#include "qecengine/errors.hpp"
#include "qecengine/random.hpp"

namespace qec {
namespace {

const CompositeSpace kQubit = CompositeSpace::single("S", 2);

DensityMatrix random_qubit(Rng& rng) { return DensityMatrix(kQubit, random_density_matrix(2, rng)); }

TEST(Channels, RejectsNonContractiveKraus) {
  EXPECT_THROW(KrausChannel(kQubit, kQubit, {identity(2), 0.5 * identity(2)}), InvalidChannel);
  EXPECT_THROW(KrausChannel(kQubit, kQubit, {0.5 * identity(2)}, true), InvalidChannel);
  EXPECT_NO_THROW(KrausChannel(kQubit, kQubit, {0.5 * identity(2)}, false));
}

TEST(Channels, ChoiOfIdentityIsUnnormalizedBellProjector) {
  const ComplexMatrix c = KrausChannel::identity(kQubit).choi();
  ComplexVector phi = ComplexVector::Zero(4);
  phi[0] = phi[3] = 1.0;
  EXPECT_LT(max_deviation(c, phi * phi.adjoint()), 1e-15);
}

TEST(Channels, AdjointSatisfiesHilbertSchmidtDuality) {
  Rng rng(2);
  const KrausChannel ch = pauli_flip_channel(gates::pauli_x(), 0.3);
  const ComplexMatrix rho = random_density_matrix(2, rng);
  const ComplexMatrix obs = random_hermitian(2, rng);
  EXPECT_NEAR((ch.apply(rho) * obs).trace().real(), (rho * ch.apply_adjoint(obs)).trace().real(), 1e-14);
}

TEST(Channels, ThermalDilationReproducesFlipChannel) {
  Rng rng(3);
  for (double p : {0.0, 0.01, 0.2, 0.5}) {
    const FlipDilation d = thermal_operation_bitflip(p, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityMatrix rho = random_qubit(rng);
      const ComplexMatrix joint = d.unitary * tensor(rho.matrix(), d.bath_state.matrix()) * d.unitary.adjoint();
      const ComplexMatrix out = partial_trace(joint, d.joint_space, {"S"});
      const ComplexMatrix x = gates::pauli_x();
      const ComplexMatrix want = (1.0 - p) * rho.matrix() + p * x * rho.matrix() * x;
      EXPECT_LT(max_deviation(out, want), 1e-14) << "p = " << p;
      EXPECT_LT(max_deviation(d.channel.apply(rho.matrix()), want), 1e-14);
    }
  }
}

TEST(Channels, BathGapFollowsFromGibbsPopulation) {
  const double p = 0.05;
  const double t = 3.0;
  const FlipDilation d = thermal_operation_bitflip(p, t);
  EXPECT_NEAR(std::exp(-d.gap / t) / (1.0 + std::exp(-d.gap / t)), p, 1e-15);
  const FlipDilation g2 = thermal_operation_bitflip(0.6, t, 2);
  EXPECT_NEAR(2.0 * std::exp(-g2.gap / t) / (1.0 + 2.0 * std::exp(-g2.gap / t)), 0.6, 1e-14);
  EXPECT_TRUE(std::isinf(thermal_operation_bitflip(0.0, t).gap));
}

TEST(Channels, BathConstructionInfeasibleAboveGOverOnePlusG) {
  EXPECT_THROW(thermal_operation_bitflip(0.7, 1.0, 1), InvalidProbability);
  EXPECT_NO_THROW(thermal_operation_bitflip(0.5, 1.0, 1));
  EXPECT_NO_THROW(thermal_operation_bitflip(0.7, 1.0, 3));
}

TEST(Channels, UnitalityClassification) {
  EXPECT_EQ(unitality_class(pauli_flip_channel(gates::pauli_x(), 0.2)).kind, Unitality::kUnital);
  // Amplitude damping maps I to a state with more ground population.
  const double g = 0.3;
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - g);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(g);
  const KrausChannel ad(kQubit, kQubit, {k0, k1});
  const UnitalityReport r = unitality_class(ad);
  EXPECT_EQ(r.kind, Unitality::kNeither);
  EXPECT_NEAR(r.max_eigenvalue, g, 1e-14);
  EXPECT_NEAR(r.min_eigenvalue, -g, 1e-14);
  const KrausChannel half(kQubit, kQubit, {std::sqrt(0.5) * identity(2)}, false);
  EXPECT_EQ(unitality_class(half).kind, Unitality::kSubunital);
}

TEST(Channels, EfficacyOfUnitalChannelIsOneAndOfDampingIsNot) {
  Rng rng(4);
  const ComplexMatrix rho = random_density_matrix(2, rng);
  EXPECT_NEAR(efficacy(pauli_flip_channel(gates::pauli_z(), 0.4), rho), 1.0, 1e-14);
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k1(0, 1) = 1.0;
  const KrausChannel reset(kQubit, kQubit, {k0, k1});
  // N^dagger N(rho) = I for the full reset, so the efficacy is 2.
  EXPECT_NEAR(efficacy(reset, rho), 2.0, 1e-14);
}

TEST(Channels, GroenewoldGainOfProjectiveMeasurement) {
  // Computational-basis measurement of |+><+| gains nothing; of a mixed
  // diagonal state gains H.
  const ComplexMatrix p0 = gates::basis_projector(2, 0);
  const ComplexMatrix p1 = gates::basis_projector(2, 1);
  const QuantumInstrument inst = QuantumInstrument::from_operators(kQubit, {p0, p1});
  EXPECT_TRUE(inst.is_projective());
  ComplexMatrix plus = ComplexMatrix::Constant(2, 2, 0.5);
  EXPECT_NEAR(groenewold_gain(inst, plus), 0.0, 1e-12);
  ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
  diag(0, 0) = 0.3;
  diag(1, 1) = 0.7;
  EXPECT_NEAR(groenewold_gain(inst, diag), binary_entropy(0.3), 1e-12);
}

TEST(Channels, GroenewoldGainCanBeNegative) {
  // Measure then reset to a fixed mixed state: each branch lands on I/2.
  const ComplexMatrix k00 = gates::ket(2, 0) * gates::ket(2, 0).adjoint() / std::sqrt(2.0);
  const ComplexMatrix k01 = gates::ket(2, 1) * gates::ket(2, 0).adjoint() / std::sqrt(2.0);
  const ComplexMatrix k10 = gates::ket(2, 0) * gates::ket(2, 1).adjoint() / std::sqrt(2.0);
  const ComplexMatrix k11 = gates::ket(2, 1) * gates::ket(2, 1).adjoint() / std::sqrt(2.0);
  const QuantumInstrument inst(kQubit, {KrausChannel(kQubit, kQubit, {k00, k01}, false),
                                        KrausChannel(kQubit, kQubit, {k10, k11}, false)});
  EXPECT_NEAR(groenewold_gain(inst, gates::basis_projector(2, 0)), -std::log(2.0), 1e-12);
}

TEST(Channels, BdwBoundHoldsOnRandomInstruments) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const ComplexMatrix u = haar_unitary(4, rng);
    // Kraus operators of a random 2-outcome instrument from a dilation.
    std::vector<KrausChannel> branches;
    for (std::size_t y = 0; y < 2; ++y) {
      const ComplexMatrix k = u.block(static_cast<Eigen::Index>(2 * y), 0, 2, 2);
      branches.emplace_back(kQubit, kQubit, std::vector<ComplexMatrix>{k}, false);
    }
    const QuantumInstrument inst(kQubit, branches);
    const BdwReport r = bdw_bound(inst, random_density_matrix(2, rng));
    if (r.gap.is_finite()) EXPECT_GE(r.gap.value, -1e-9) << "seed " << seed;
  }
}

TEST(Channels, ProjectiveDilationReproducesSyndromeInstrument) {
  const CodeSpec code = bitflip_code();
  const QuantumInstrument inst = code.syndrome_instrument();
  ApparatusParams params;
  params.beta_omega = 100.0;
  const IndirectMeasurementModel m = dilate_projective_instrument(inst, params);
  EXPECT_LT(branch_reproduction_error(m, inst), 1e-40);
  ApparatusParams warm = params;
  warm.beta_omega = 1.0;
  EXPECT_GT(branch_reproduction_error(dilate_projective_instrument(inst, warm), inst), 1e-3);
}

TEST(Channels, DilationRejectsNonProjectiveInstrument) {
  const QuantumInstrument inst = QuantumInstrument::from_operators(
      kQubit, {std::sqrt(0.5) * identity(2), std::sqrt(0.5) * gates::pauli_x()});
  EXPECT_THROW(dilate_projective_instrument(inst, ApparatusParams{}), NotProjective);
}

TEST(Channels, JointChannelWritesOutcomeRegister) {
  Rng rng(9);
  const QuantumInstrument inst =
      QuantumInstrument::from_operators(kQubit, {gates::basis_projector(2, 0), gates::basis_projector(2, 1)});
  const DensityMatrix rho = random_qubit(rng);
  const DensityMatrix out = instrument_apply(inst, rho, "Y");
  EXPECT_LT(out.register_coherence({"Y"}), 1e-15);
  EXPECT_NEAR(out.reduced({"Y"}).matrix()(1, 1).real(), rho.matrix()(1, 1).real(), 1e-15);
}

}  // namespace
}  // namespace qec
