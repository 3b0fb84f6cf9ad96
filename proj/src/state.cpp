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

#include "qecengine/state.hpp"

#include <algorithm>
#include <cmath>

#include "qecengine/errors.hpp"

namespace qec {

ThermalParams ThermalParams::from_temperature(double temperature) {
  if (!(temperature > 0) || !std::isfinite(temperature)) throw OutOfRange("temperature must be positive");
  return {temperature, 1.0 / temperature};
}

ThermalParams ThermalParams::from_beta(double beta) {
  if (!(beta > 0) || !std::isfinite(beta)) throw OutOfRange("beta must be positive");
  return {1.0 / beta, beta};
}

HamiltonianSpec::HamiltonianSpec(CompositeSpace s, ComplexMatrix o) : space(std::move(s)), op(std::move(o)) {
  if (op.rows() != static_cast<Eigen::Index>(space.dim()) || op.cols() != op.rows()) {
    throw DimensionMismatch("Hamiltonian dimension does not match its space");
  }
  if (!is_hermitian(op)) throw NonHermitianInput(max_asymmetry(op));
}

HamiltonianSpec::HamiltonianSpec(const std::string& label, const ComplexMatrix& o)
    : HamiltonianSpec(CompositeSpace::single(label, static_cast<std::size_t>(o.rows())), o) {}

HamiltonianSpec HamiltonianSpec::diagonal(CompositeSpace space, const std::vector<double>& energies) {
  if (energies.size() != space.dim()) throw DimensionMismatch("energy list does not match space");
  ComplexMatrix op = ComplexMatrix::Zero(energies.size(), energies.size());
  for (std::size_t k = 0; k < energies.size(); ++k) op(k, k) = energies[k];
  return HamiltonianSpec(std::move(space), std::move(op));
}

HamiltonianSpec HamiltonianSpec::zero(CompositeSpace space) {
  const auto d = space.dim();
  return HamiltonianSpec(std::move(space), ComplexMatrix::Zero(d, d));
}

DensityMatrix::DensityMatrix(CompositeSpace space, ComplexMatrix matrix) : space_(std::move(space)) {
  const auto d = static_cast<Eigen::Index>(space_.dim());
  if (matrix.rows() != d || matrix.cols() != d) throw DimensionMismatch("density matrix does not match space");
  const double asym = max_asymmetry(matrix);
  if (asym > kHermitianTol * (1.0 + max_abs(matrix))) throw NonHermitianInput(asym);
  matrix_ = 0.5 * (matrix + matrix.adjoint());
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > 1e-10) throw InvalidState("trace " + std::to_string(tr) + " differs from 1");
  const double min_eig = hermitian_eigvals(matrix_).minCoeff();
  if (min_eig < -1e-10) throw InvalidState("negative eigenvalue " + std::to_string(min_eig));
}

DensityMatrix DensityMatrix::reduced(const Labels& labels) const {
  const Labels kept = space_.in_order(labels);
  return DensityMatrix(space_.subspace(kept), partial_trace(matrix_, space_, kept));
}

DensityMatrix DensityMatrix::permuted(const Labels& new_order) const {
  return DensityMatrix(space_.subspace(new_order), permute_subsystems(matrix_, space_, new_order));
}

double DensityMatrix::register_coherence(const Labels& register_labels) const {
  const IndexSplit s = split_index(space_, register_labels);
  double worst = 0.0;
  for (std::size_t ri = 0; ri < s.rest_dim; ++ri) {
    for (std::size_t ki = 0; ki < s.selected_dim; ++ki) {
      const auto i = static_cast<Eigen::Index>(s.at(ri, ki));
      for (std::size_t rj = 0; rj < s.rest_dim; ++rj) {
        for (std::size_t kj = 0; kj < s.selected_dim; ++kj) {
          if (kj == ki) continue;
          worst = std::max(worst, std::abs(matrix_(i, static_cast<Eigen::Index>(s.at(rj, kj)))));
        }
      }
    }
  }
  return worst;
}

namespace {

/// ln sum exp(-beta (e - e0)) as log1p of the weight above one ground level,
/// so an exponentially small excited weight is not rounded away.
long double log_partition_shifted(const std::vector<double>& energies, double beta) {
  const auto ground = std::min_element(energies.begin(), energies.end());
  long double excess = 0;
  for (auto it = energies.begin(); it != energies.end(); ++it) {
    if (it == ground) continue;
    excess += std::exp(-static_cast<long double>(beta) * (static_cast<long double>(*it) - *ground));
  }
  return std::log1p(excess);
}

}  // namespace

std::vector<long double> gibbs_populations_extended(const std::vector<double>& energies, double beta) {
  if (energies.empty()) throw DimensionMismatch("empty spectrum");
  const double e0 = *std::min_element(energies.begin(), energies.end());
  std::vector<long double> w(energies.size());
  long double z = 0;
  for (std::size_t k = 0; k < energies.size(); ++k) {
    w[k] = std::exp(-static_cast<long double>(beta) * (static_cast<long double>(energies[k]) - e0));
    z += w[k];
  }
  for (auto& x : w) x /= z;
  return w;
}

std::vector<double> gibbs_log_populations(const std::vector<double>& energies, double beta) {
  if (energies.empty()) throw DimensionMismatch("empty spectrum");
  const double e0 = *std::min_element(energies.begin(), energies.end());
  const long double log_z = log_partition_shifted(energies, beta);
  std::vector<double> out(energies.size());
  for (std::size_t k = 0; k < energies.size(); ++k) {
    out[k] = static_cast<double>(-static_cast<long double>(beta) * (static_cast<long double>(energies[k]) - e0) - log_z);
  }
  return out;
}

long double gibbs_entropy_extended(const std::vector<double>& energies, double beta) {
  if (energies.empty()) throw DimensionMismatch("empty spectrum");
  const double e0 = *std::min_element(energies.begin(), energies.end());
  const long double log_z = log_partition_shifted(energies, beta);
  const long double z = std::exp(log_z);
  // H = beta <E - e0> + ln Z, both terms formed without cancellation.
  long double mean = 0;
  for (double e : energies) {
    const long double x = static_cast<long double>(beta) * (static_cast<long double>(e) - e0);
    mean += x * std::exp(-x) / z;
  }
  return mean + log_z;
}

DensityMatrix gibbs_state(const HamiltonianSpec& h, const ThermalParams& params) {
  const auto eig = hermitian_eig(h.op);
  std::vector<double> energies(eig.eigenvalues.data(), eig.eigenvalues.data() + eig.eigenvalues.size());
  const auto pops = gibbs_populations_extended(energies, params.beta);
  RealVector p(pops.size());
  for (std::size_t k = 0; k < pops.size(); ++k) p[k] = static_cast<double>(pops[k]);
  const ComplexMatrix& v = eig.eigenvectors;
  return DensityMatrix(h.space, v * p.cast<cplx>().asDiagonal() * v.adjoint());
}

DensityMatrix pure_density(const ComplexVector& amplitudes, const CompositeSpace& space) {
  if (amplitudes.size() != static_cast<Eigen::Index>(space.dim())) {
    throw DimensionMismatch("amplitude count does not match space");
  }
  const double norm2 = amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-10) throw NotNormalized("squared norm " + std::to_string(norm2));
  return DensityMatrix(space, amplitudes * amplitudes.adjoint());
}

DensityMatrix pure_density(const std::vector<cplx>& amplitudes, const CompositeSpace& space) {
  ComplexVector v(amplitudes.size());
  for (std::size_t k = 0; k < amplitudes.size(); ++k) v[k] = amplitudes[k];
  return pure_density(v, space);
}

ComplexVector purification_vector(const DensityMatrix& rho) {
  const auto eig = hermitian_eig(rho.matrix());
  const auto d = static_cast<Eigen::Index>(rho.dim());
  ComplexVector psi = ComplexVector::Zero(d * d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double lam = std::max(0.0, eig.eigenvalues[k]);
    if (lam == 0.0) continue;
    // Largest eigenvalue pairs with reference ket |0>.
    const Eigen::Index r = d - 1 - k;
    psi.segment(r * d, d) += std::sqrt(lam) * eig.eigenvectors.col(k);
  }
  return psi / psi.norm();
}

DensityMatrix purify(const DensityMatrix& rho, const std::string& reference_label) {
  const CompositeSpace ref = CompositeSpace::single(reference_label, rho.dim());
  return pure_density(purification_vector(rho), ref.concat(rho.space()));
}

double expectation(const ComplexMatrix& rho, const ComplexMatrix& op) {
  if (rho.rows() != op.rows() || rho.cols() != op.cols()) throw DimensionMismatch("observable does not match state");
  const cplx v = (rho.transpose().cwiseProduct(op)).sum();
  if (std::abs(v.imag()) > 1e-10 * (1.0 + std::abs(v.real()))) {
    throw DomainError("expectation has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) { return expectation(rho.matrix(), op); }

DensityMatrix maximally_mixed(const CompositeSpace& space) {
  const auto d = space.dim();
  return DensityMatrix(space, identity(d) / static_cast<double>(d));
}

DensityMatrix product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(a.space().concat(b.space()), tensor(a.matrix(), b.matrix()));
}

}  // namespace qec
