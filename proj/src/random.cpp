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

#include "qecengine/random.hpp"

#include <Eigen/QR>
#include <cmath>

#include "qecengine/errors.hpp"

namespace qec {

namespace {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = cplx(n(rng), n(rng));
  }
  return g;
}

}  // namespace

ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
  if (n == 0) throw DimensionMismatch("unitary dimension must be positive");
  const ComplexMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx d = r(k, k);
    const double a = std::abs(d);
    if (a > 0) q.col(k) *= d / a;
  }
  return q;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng, double scale) {
  const ComplexMatrix g = ginibre(n, n, rng);
  return 0.5 * scale * (g + g.adjoint());
}

ComplexMatrix random_density_matrix(std::size_t n, Rng& rng, std::size_t rank) {
  if (rank == 0 || rank > n) rank = n;
  const ComplexMatrix g = ginibre(n, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return 0.5 * (m + m.adjoint());
}

ComplexVector random_pure_vector(std::size_t n, Rng& rng) {
  ComplexVector v = ginibre(n, 1, rng).col(0);
  return v / v.norm();
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

}  // namespace qec
