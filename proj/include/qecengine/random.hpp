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

#ifndef QECENGINE_RANDOM_HPP
#define QECENGINE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qecengine/linalg.hpp"

namespace qec {

using Rng = std::mt19937_64;

/// Haar-distributed unitary from the QR decomposition of a Ginibre matrix,
/// with the phases of R's diagonal absorbed into Q.
ComplexMatrix haar_unitary(std::size_t n, Rng& rng);

/// Hermitian matrix with independent Gaussian entries of width `scale`.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng, double scale = 1.0);

/// G G^dagger / tr for an n x rank Ginibre matrix G (rank 0 means full rank).
ComplexMatrix random_density_matrix(std::size_t n, Rng& rng, std::size_t rank = 0);

/// Unit vector distributed uniformly on the sphere of C^n.
ComplexVector random_pure_vector(std::size_t n, Rng& rng);

double uniform(Rng& rng, double lo, double hi);

}  // namespace qec

#endif  // QECENGINE_RANDOM_HPP
