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

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qecengine/errors.hpp"
#include "qecengine/linalg.hpp"
#include "qecengine/random.hpp"
#include "qecengine/space.hpp"

namespace qec {
namespace {

CompositeSpace abc() { return CompositeSpace({{"A", 2, false}, {"B", 3, false}, {"C", 2, false}}); }

TEST(Linalg, TensorUsesFirstFactorAsSlowIndex) {
  const ComplexMatrix a = gates::ket(2, 1);
  const ComplexMatrix b = gates::ket(3, 2);
  const ComplexMatrix ab = tensor(a, b);
  ASSERT_EQ(ab.rows(), 6);
  for (Eigen::Index i = 0; i < 6; ++i) EXPECT_EQ(ab(i, 0), i == 5 ? cplx(1.0) : cplx(0.0));
}

TEST(Linalg, PartialTraceMatchesExplicitSum) {
  Rng rng(3);
  const ComplexMatrix rho = random_density_matrix(12, rng);
  const ComplexMatrix got = partial_trace(rho, abc(), {"A", "C"});
  ComplexMatrix want = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int c2 = 0; c2 < 2; ++c2)
          for (int b = 0; b < 3; ++b) want(a * 2 + c, a2 * 2 + c2) += rho(a * 6 + b * 2 + c, a2 * 6 + b * 2 + c2);
  EXPECT_LT(max_deviation(got, want), 1e-14);
}

TEST(Linalg, PartialTraceOfProductIsFactor) {
  Rng rng(4);
  const ComplexMatrix x = random_density_matrix(2, rng);
  const ComplexMatrix y = random_density_matrix(3, rng);
  const ComplexMatrix z = random_density_matrix(2, rng);
  const ComplexMatrix rho = tensor({x, y, z});
  EXPECT_LT(max_deviation(partial_trace(rho, abc(), {"B"}), y), 1e-14);
  EXPECT_LT(max_deviation(partial_trace(rho, abc(), {"C", "A"}), tensor(x, z)), 1e-14);
}

TEST(Linalg, PermutationRoundTrips) {
  Rng rng(5);
  const ComplexMatrix rho = random_density_matrix(12, rng);
  const CompositeSpace s = abc();
  const ComplexMatrix p = permute_subsystems(rho, s, {"C", "A", "B"});
  const ComplexMatrix back = permute_subsystems(p, s.subspace({"C", "A", "B"}), {"A", "B", "C"});
  EXPECT_LT(max_deviation(back, rho), 1e-15);
}

TEST(Linalg, PermutationOfProductReordersFactors) {
  Rng rng(6);
  const ComplexMatrix x = random_density_matrix(2, rng);
  const ComplexMatrix y = random_density_matrix(3, rng);
  const ComplexMatrix z = random_density_matrix(2, rng);
  const ComplexMatrix p = permute_subsystems(tensor({x, y, z}), abc(), {"B", "C", "A"});
  EXPECT_LT(max_deviation(p, tensor({y, z, x})), 1e-15);
}

TEST(Linalg, RejectsUnknownLabelAndBadPermutation) {
  Rng rng(7);
  const ComplexMatrix rho = random_density_matrix(12, rng);
  EXPECT_THROW(partial_trace(rho, abc(), {"D"}), UnknownLabel);
  EXPECT_THROW(permute_subsystems(rho, abc(), {"A", "A", "C"}), InvalidPermutation);
}

TEST(Linalg, EmbedAgreesWithApplyLeft) {
  Rng rng(8);
  const ComplexMatrix op = haar_unitary(4, rng);
  const ComplexMatrix rho = random_density_matrix(12, rng);
  const ComplexMatrix full = embed(op, abc(), {"C", "A"});
  EXPECT_LT(max_deviation(full * rho, apply_left(rho, abc(), {"C", "A"}, op)), 1e-13);
  EXPECT_TRUE(is_unitary(full));
}

TEST(Linalg, JacobiMatchesEigenOnRandomHermitian) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const std::size_t n = 2 + seed % 14;
    const ComplexMatrix h = random_hermitian(n, rng);
    const auto jac = jacobi_eig(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(Eigen::MatrixXcd(h), Eigen::EigenvaluesOnly);
    EXPECT_LT((jac.eigenvalues - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10) << "seed " << seed;
    const ComplexMatrix recon = jac.eigenvectors * jac.eigenvalues.cast<cplx>().asDiagonal() * jac.eigenvectors.adjoint();
    EXPECT_LT(max_deviation(recon, h), 1e-10);
    EXPECT_TRUE(is_unitary(jac.eigenvectors));
  }
}

TEST(Linalg, LargeDispatchAgreesWithJacobi) {
  Rng rng(9);
  const ComplexMatrix h = random_hermitian(kJacobiMaxDim + 6, rng);
  const RealVector a = hermitian_eigvals(h);
  const RealVector b = jacobi_eig(h).eigenvalues;
  EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Linalg, DegenerateSpectrumIsResolved) {
  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  h(0, 0) = h(1, 1) = 1.0;
  h(2, 2) = h(3, 3) = -2.0;
  Rng rng(10);
  const ComplexMatrix u = haar_unitary(4, rng);
  const auto eig = hermitian_eig(u * h * u.adjoint());
  EXPECT_NEAR(eig.eigenvalues[0], -2.0, 1e-12);
  EXPECT_NEAR(eig.eigenvalues[3], 1.0, 1e-12);
  EXPECT_TRUE(is_unitary(eig.eigenvectors));
}

TEST(Linalg, NonHermitianInputIsRejected) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eig(m), NonHermitianInput);
}

TEST(Linalg, MatrixFunctionSquareRoot) {
  Rng rng(11);
  const ComplexMatrix rho = random_density_matrix(5, rng);
  const ComplexMatrix r = matrix_function(rho, [](double x) { return std::sqrt(std::max(x, 0.0)); });
  EXPECT_LT(max_deviation(r * r, rho), 1e-12);
}

TEST(Linalg, GatesHaveTheirDefiningProperties) {
  using namespace gates;
  EXPECT_LT(max_deviation(pauli_x() * pauli_x(), identity(2)), 1e-15);
  EXPECT_LT(max_deviation(hadamard() * pauli_z() * hadamard(), pauli_x()), 1e-15);
  EXPECT_LT(max_deviation(pauli_x() * pauli_y(), cplx(0, 1) * pauli_z()), 1e-15);
  EXPECT_LT(max_deviation(swap(3) * tensor(ket(3, 1), ket(3, 2)), tensor(ket(3, 2), ket(3, 1))), 1e-15);
  EXPECT_LT(max_deviation(cyclic_shift(4, 3) * ket(4, 2), ket(4, 1)), 1e-15);
  const CompositeSpace q = CompositeSpace::qubits({"c", "t"});
  EXPECT_LT(max_deviation(cnot(q, "c", "t") * tensor(ket(2, 1), ket(2, 0)), tensor(ket(2, 1), ket(2, 1))), 1e-15);
  EXPECT_LT(max_deviation(cnot(q, "t", "c") * tensor(ket(2, 0), ket(2, 1)), tensor(ket(2, 1), ket(2, 1))), 1e-15);
}

TEST(Linalg, HaarUnitaryIsUnitary) {
  Rng rng(12);
  for (std::size_t n : {1, 2, 5, 9}) EXPECT_TRUE(is_unitary(haar_unitary(n, rng), 1e-12));
}

}  // namespace
}  // namespace qec
