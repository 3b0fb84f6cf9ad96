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

#include "qecengine/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "qecengine/errors.hpp"

namespace qec {

DensityMatrix post_interaction_state(const IndirectMeasurementModel& model, const DensityMatrix& rho,
                                     const std::string& register_label) {
  model.validate();
  if (rho.space() != model.system) throw DimensionMismatch("input state is not on the measured system");
  const std::size_t da = model.system.dim();
  const std::size_t n = model.pointer_projectors.size();
  const ComplexMatrix coupled = model.interaction * tensor(rho.matrix(), model.sigma.matrix()) * model.interaction.adjoint();

  ComplexMatrix w = ComplexMatrix::Zero(coupled.rows() * n, coupled.cols());
  for (std::size_t x = 0; x < n; ++x) w += tensor(tensor(identity(da), model.pointer_projectors[x]), gates::ket(n, x));

  const CompositeSpace space =
      model.system.concat(model.apparatus).concat(CompositeSpace::single(register_label, n, true));
  return DensityMatrix(space, w * coupled * w.adjoint());
}

MeasurementHeatReport measurement_heat(const IndirectMeasurementModel& model, const DensityMatrix& rho) {
  const DensityMatrix tau = gibbs_state(model.hamiltonian, model.thermal);
  if (max_deviation(tau.matrix(), model.sigma.matrix()) > 1e-10) {
    throw ApparatusNotThermal("apparatus state is not the Gibbs state of its Hamiltonian");
  }
  const std::string x_label = "X";
  const DensityMatrix theta = post_interaction_state(model, rho, x_label);
  const Labels a = model.system.labels();
  const Labels m = model.apparatus.labels();
  const Labels x = {x_label};
  Labels ax = a;
  ax.push_back(x_label);
  const double T = model.thermal.temperature;

  MeasurementHeatReport r;
  r.T_m = T;
  const double h_rho = von_neumann(rho);
  r.H_X = entropy(theta, x);
  r.delta_H_AX = entropy(theta, ax) - h_rho;
  r.I_AX_M = mutual_information(theta, ax, m);
  const ComplexMatrix theta_m = partial_trace(theta.matrix(), theta.space(), m);
  r.D_theta_tau = relative_entropy_to_gibbs(theta_m, model.hamiltonian.op, model.thermal.beta);
  r.apparatus_deviation = max_deviation(theta_m, tau.matrix());
  r.apparatus_fixed = r.apparatus_deviation <= 1e-8;

  // A finite D is guaranteed for full-rank Gibbs states; an infinite one
  // cannot arise from a finite energy change.
  r.Q_meas = T * (r.delta_H_AX - r.I_AX_M - r.D_theta_tau.get());
  r.Q_meas_energetic = expectation(tau.matrix(), model.hamiltonian.op) - expectation(theta_m, model.hamiltonian.op);
  r.energetic_agrees = std::abs(r.Q_meas - r.Q_meas_energetic) <= 1e-8 * (1.0 + std::abs(r.Q_meas_energetic));

  r.H_X_given_M = conditional_entropy(theta, x, m);
  r.Q_meas_X = T * r.H_X_given_M;
  r.delta_H_A_given_X = conditional_entropy(theta, a, x) - h_rho;
  r.I_A_M_given_X = conditional_mutual_information(theta, a, m, x);
  r.Q_meas_A_given_X = T * (r.delta_H_A_given_X - r.I_A_M_given_X);
  r.I_G = groenewold_gain(model.realized_instrument(), rho);
  return r;
}

double theorem1_gap(const MeasurementHeatReport& report, double I_G) {
  if (!report.apparatus_fixed) {
    throw HypothesisViolated("apparatus state changed by " + std::to_string(report.apparatus_deviation), 1);
  }
  return -report.T_m * I_G - report.Q_meas_A_given_X;
}

double theorem1_gap(const MeasurementHeatReport& report) { return theorem1_gap(report, report.I_G); }

namespace {

/// Rank-one projectors of a Haar basis, grouped into m nonempty blocks.
std::vector<ComplexMatrix> random_projective_measurement(std::size_t n, std::size_t m, Rng& rng) {
  const ComplexMatrix v = haar_unitary(n, rng);
  std::vector<ComplexMatrix> out(m, ComplexMatrix::Zero(n, n));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t y = k < m ? k : std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
    out[y] += v.col(k) * v.col(k).adjoint();
  }
  return out;
}

}  // namespace

MeasurementInstance random_phase_coupled_instance(Rng& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(2, n)(rng);
  const std::size_t dk = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  const std::size_t dg = 2;
  const auto pis = random_projective_measurement(n, m, rng);

  // M = K (x) G: K is degenerate, G carries the gap.
  const double omega = uniform(rng, 0.3, 3.0);
  const double temperature = uniform(rng, 0.3, 3.0);
  std::vector<double> energies;
  for (std::size_t k = 0; k < dk; ++k) {
    energies.push_back(0.0);
    energies.push_back(omega);
  }
  const CompositeSpace system = CompositeSpace::single("A", n);
  const HamiltonianSpec h = HamiltonianSpec::diagonal(CompositeSpace::single("M", dk * dg), energies);

  ComplexMatrix u = ComplexMatrix::Zero(n * dk * dg, n * dk * dg);
  for (std::size_t y = 0; y < m; ++y) {
    ComplexMatrix w = ComplexMatrix::Zero(dg, dg);
    for (std::size_t k = 0; k < dg; ++k) w(k, k) = std::exp(cplx(0.0, uniform(rng, 0.0, 2.0 * M_PI)));
    u += tensor({pis[y], haar_unitary(dk, rng), w});
  }
  const ComplexMatrix g = haar_unitary(dk, rng);
  std::vector<ComplexMatrix> pointers;
  for (std::size_t x = 0; x < dk; ++x) pointers.push_back(tensor(g.col(x) * g.col(x).adjoint(), identity(dg)));

  return {make_indirect_model(system, "M", h, ThermalParams::from_temperature(temperature), u, pointers),
          DensityMatrix(system, random_density_matrix(n, rng))};
}

MeasurementInstance random_pointer_instance(Rng& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(2, n)(rng);
  const CompositeSpace system = CompositeSpace::single("A", n);
  const QuantumInstrument inst = QuantumInstrument::from_operators(system, random_projective_measurement(n, m, rng));
  ApparatusParams params;
  params.kind = "pointer";
  params.beta_omega = uniform(rng, 0.5, 5.0);
  params.temperature = uniform(rng, 0.3, 3.0);
  return {dilate_projective_instrument(inst, params), DensityMatrix(system, random_density_matrix(n, rng))};
}

}  // namespace qec
