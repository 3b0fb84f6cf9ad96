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

#ifndef QECENGINE_STATE_HPP
#define QECENGINE_STATE_HPP

#include <string>
#include <vector>

#include "qecengine/linalg.hpp"
#include "qecengine/space.hpp"

namespace qec {

/// Units: k_B = hbar = 1, energies in units of k_B T_ref, entropies in nats.
struct ThermalParams {
  double temperature = 1.0;
  double beta = 1.0;

  static ThermalParams from_temperature(double temperature);
  static ThermalParams from_beta(double beta);
};

/// Hamiltonian of one or more labeled factors.
struct HamiltonianSpec {
  CompositeSpace space;
  ComplexMatrix op;

  HamiltonianSpec() = default;
  HamiltonianSpec(CompositeSpace space, ComplexMatrix op);
  HamiltonianSpec(const std::string& label, const ComplexMatrix& op);

  /// Diagonal Hamiltonian in the computational basis.
  static HamiltonianSpec diagonal(CompositeSpace space, const std::vector<double>& energies);
  static HamiltonianSpec zero(CompositeSpace space);
};

/// Density matrix on a labeled composite space.
///
/// Construction checks Hermiticity (1e-12), unit trace (1e-10) and
/// positivity (minimum eigenvalue >= -1e-10).
class DensityMatrix {
 public:
  DensityMatrix() = default;
  DensityMatrix(CompositeSpace space, ComplexMatrix matrix);

  const CompositeSpace& space() const { return space_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return space_.dim(); }

  /// Marginal on `labels`, kept in this space's factor order.
  DensityMatrix reduced(const Labels& labels) const;
  DensityMatrix permuted(const Labels& new_order) const;

  /// Largest |block| entry of register factors off their pointer-basis diagonal.
  double register_coherence(const Labels& register_labels) const;

 private:
  CompositeSpace space_;
  ComplexMatrix matrix_;
};

/// exp(-beta H)/Z, evaluated with the ground energy shifted to zero.
DensityMatrix gibbs_state(const HamiltonianSpec& h, const ThermalParams& params);

/// Gibbs populations of a spectrum in extended precision.
std::vector<long double> gibbs_populations_extended(const std::vector<double>& energies, double beta);
/// Gibbs entropy -sum p ln p in extended precision, keeping tails far below
/// the double-precision spectral cutoff.
long double gibbs_entropy_extended(const std::vector<double>& energies, double beta);
/// ln of the Gibbs populations, exact for arbitrarily small tails.
std::vector<double> gibbs_log_populations(const std::vector<double>& energies, double beta);

/// |psi><psi| for normalized amplitudes.
DensityMatrix pure_density(const std::vector<cplx>& amplitudes, const CompositeSpace& space);
DensityMatrix pure_density(const ComplexVector& amplitudes, const CompositeSpace& space);

/// Pure state on R (x) S whose S-marginal is `rho`. dim(R) = dim(S).
DensityMatrix purify(const DensityMatrix& rho, const std::string& reference_label = "R");
/// Purifying vector of `rho` on R (x) S.
ComplexVector purification_vector(const DensityMatrix& rho);

/// Re tr(rho O); throws if the imaginary part exceeds 1e-10.
double expectation(const DensityMatrix& rho, const ComplexMatrix& op);
double expectation(const ComplexMatrix& rho, const ComplexMatrix& op);

/// Maximally mixed state.
DensityMatrix maximally_mixed(const CompositeSpace& space);
/// Tensor product of states on disjoint spaces.
DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qec

#endif  // QECENGINE_STATE_HPP
