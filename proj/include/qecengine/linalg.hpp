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

#ifndef QECENGINE_LINALG_HPP
#define QECENGINE_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "qecengine/space.hpp"

namespace qec {

using cplx = std::complex<double>;
/// Dense complex matrix, row-major storage.
using ComplexMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;
using RealVector = Eigen::VectorXd;

/// Spectral values with |lambda| below this are treated as exactly zero.
inline constexpr double kZeroCutoff = 1e-12;
/// Elementwise tolerance for the Hermitian check, scaled by (1 + max|M|).
inline constexpr double kHermitianTol = 1e-12;
/// Matrices up to this size are diagonalized with the cyclic Jacobi kernel.
inline constexpr std::size_t kJacobiMaxDim = 64;

struct HermitianEigenDecomposition {
  RealVector eigenvalues;      ///< ascending
  ComplexMatrix eigenvectors;  ///< columns, unitary
};

ComplexMatrix identity(std::size_t n);
ComplexMatrix dagger(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_asymmetry(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);
cplx trace(const ComplexMatrix& m);

/// Cyclic Jacobi eigensolver for Hermitian input (no size dispatch).
HermitianEigenDecomposition jacobi_eig(const ComplexMatrix& m);

/// Hermitian eigendecomposition. Throws NonHermitianInput.
HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& m);
/// Eigenvalues only, ascending.
RealVector hermitian_eigvals(const ComplexMatrix& m);

/// V f(Lambda) V^dagger. Eigenvalues with |lambda| < zero_cutoff are fed to f
/// as exact zeros when f(0) is finite and mapped to 0 otherwise.
ComplexMatrix matrix_function(const ComplexMatrix& m, const std::function<double(double)>& f,
                              double zero_cutoff = kZeroCutoff);

/// Kronecker product, `a` is the slow index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(const std::vector<ComplexMatrix>& factors);

/// Reduced matrix on `keep`, kept factors in their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const CompositeSpace& space, const Labels& keep);

/// Re-index `m` so that its factors follow `new_order`.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const CompositeSpace& space, const Labels& new_order);

/// Applies `op` (acting on `labels` in the given order) to the rows of `m`,
/// i.e. returns (op (x) I) m. Works for vectors, factors and operators.
ComplexMatrix apply_left(const ComplexMatrix& m, const CompositeSpace& space, const Labels& labels,
                         const ComplexMatrix& op);

/// op on `labels` lifted to the whole space.
ComplexMatrix embed(const ComplexMatrix& op, const CompositeSpace& space, const Labels& labels);

/// Maximum elementwise deviation.
double max_deviation(const ComplexMatrix& a, const ComplexMatrix& b);

namespace gates {
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
/// Projector |k><k| in dimension d.
ComplexMatrix basis_projector(std::size_t d, std::size_t k);
ComplexMatrix ket(std::size_t d, std::size_t k);
/// |k+j mod d><k|.
ComplexMatrix cyclic_shift(std::size_t d, std::size_t j);
/// SWAP of two factors of dimension d.
ComplexMatrix swap(std::size_t d);
/// CNOT on (control, target) qubits embedded into `labels` of `space`.
ComplexMatrix cnot(const CompositeSpace& space, const std::string& control, const std::string& target);
}  // namespace gates

}  // namespace qec

#endif  // QECENGINE_LINALG_HPP
