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

#include "qecengine/entropy.hpp"
#include "qecengine/errors.hpp"
#include "qecengine/random.hpp"
#include "qecengine/state.hpp"

namespace qec {
namespace {

TEST(State, DensityMatrixValidation) {
  const CompositeSpace q = CompositeSpace::single("A", 2);
  EXPECT_THROW(DensityMatrix(q, identity(2)), InvalidState);
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(q, neg), InvalidState);
  ComplexMatrix asym = identity(2) / 2.0;
  asym(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix(q, asym), NonHermitianInput);
  EXPECT_THROW(DensityMatrix(q, identity(3) / 3.0), DimensionMismatch);
}

TEST(State, GibbsPopulationsMatchBoltzmannWeights) {
  const std::vector<double> e = {0.0, 0.7, 1.9};
  const double beta = 1.3;
  const auto pops = gibbs_populations_extended(e, beta);
  const double z = 1.0 + std::exp(-beta * 0.7) + std::exp(-beta * 1.9);
  EXPECT_NEAR(static_cast<double>(pops[1]), std::exp(-beta * 0.7) / z, 1e-15);
  const DensityMatrix tau = gibbs_state(HamiltonianSpec::diagonal(CompositeSpace::single("A", 3), e),
                                        ThermalParams::from_beta(beta));
  EXPECT_NEAR(tau.matrix()(2, 2).real(), std::exp(-beta * 1.9) / z, 1e-15);
}

TEST(State, GibbsStateOfNonDiagonalHamiltonianCommutesWithIt) {
  Rng rng(2);
  const ComplexMatrix h = random_hermitian(3, rng);
  const DensityMatrix tau = gibbs_state(HamiltonianSpec("A", h), ThermalParams::from_temperature(0.8));
  EXPECT_LT(max_abs(tau.matrix() * h - h * tau.matrix()), 1e-12);
}

TEST(State, ExtendedGibbsEntropyResolvesTheTail) {
  // Two-level system at beta*eps = 100: H = e^{-x}(1 + x) to leading order.
  const long double h = gibbs_entropy_extended({0.0, 100.0}, 1.0);
  const long double x = 100.0L;
  const long double q = std::exp(-x) / (1.0L + std::exp(-x));
  const long double want = -q * std::log(q) - (1.0L - q) * std::log1p(-q);
  EXPECT_NEAR(static_cast<double>(h / want), 1.0, 1e-12);
  // At moderate gaps it equals the von Neumann entropy of the Gibbs state.
  const std::vector<double> e = {0.0, 0.4, 1.1, 2.0};
  const DensityMatrix tau = gibbs_state(HamiltonianSpec::diagonal(CompositeSpace::single("A", 4), e),
                                        ThermalParams::from_beta(1.0));
  EXPECT_NEAR(static_cast<double>(gibbs_entropy_extended(e, 1.0)), von_neumann(tau), 1e-13);
}

TEST(State, GibbsLogPopulationsAreExact) {
  const auto lp = gibbs_log_populations({0.0, 500.0}, 1.0);
  EXPECT_NEAR(lp[1], -500.0, 1e-12);
  // ln p_0 = -ln(1 + e^{-500}), resolved below double epsilon.
  EXPECT_NEAR(lp[0] / -std::exp(-500.0), 1.0, 1e-12);
}

TEST(State, PurificationReproducesTheMarginal) {
  Rng rng(3);
  const DensityMatrix rho(CompositeSpace::single("S", 3), random_density_matrix(3, rng, 2));
  const DensityMatrix psi = purify(rho, "R");
  EXPECT_LT(max_deviation(psi.reduced({"S"}).matrix(), rho.matrix()), 1e-12);
  EXPECT_NEAR(von_neumann(psi), 0.0, 1e-10);
  EXPECT_NEAR(entropy(psi, {"R"}), von_neumann(rho), 1e-10);
}

TEST(State, PureDensityRequiresNormalization) {
  const CompositeSpace q = CompositeSpace::single("A", 2);
  EXPECT_THROW(pure_density(std::vector<cplx>{1.0, 1.0}, q), NotNormalized);
  const DensityMatrix p = pure_density(std::vector<cplx>{0.6, cplx(0, 0.8)}, q);
  EXPECT_NEAR(p.matrix()(1, 1).real(), 0.64, 1e-15);
}

TEST(State, ThermalParamsRejectNonPositiveTemperature) {
  EXPECT_THROW(ThermalParams::from_temperature(0.0), OutOfRange);
  EXPECT_THROW(ThermalParams::from_beta(-1.0), OutOfRange);
  EXPECT_DOUBLE_EQ(ThermalParams::from_temperature(4.0).beta, 0.25);
}

TEST(State, ExpectationOfDiagonalObservable) {
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  rho(0, 0) = 0.25;
  rho(1, 1) = 0.75;
  EXPECT_NEAR(expectation(rho, gates::pauli_z()), -0.5, 1e-15);
}

}  // namespace
}  // namespace qec
