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

#ifndef QECENGINE_MEASUREMENT_HPP
#define QECENGINE_MEASUREMENT_HPP

#include <string>

#include "qecengine/channels.hpp"
#include "qecengine/entropy.hpp"
#include "qecengine/random.hpp"
#include "qecengine/state.hpp"

namespace qec {

/// Heat bookkeeping of one indirect measurement, in energy units of k_B T_m.
struct MeasurementHeatReport {
  double T_m = 1.0;
  /// Entropic assembly T (dH(AX) - I(AX:M) - D(theta^M||tau^M)).
  double Q_meas = 0.0;
  /// <H^M>_tau - <H^M>_theta.
  double Q_meas_energetic = 0.0;
  bool energetic_agrees = true;
  /// T H(X|M).
  double Q_meas_X = 0.0;
  /// T (dH(A|X) - I(A:M|X)).
  double Q_meas_A_given_X = 0.0;
  double I_AX_M = 0.0;
  double I_A_M_given_X = 0.0;
  double H_X = 0.0;
  double H_X_given_M = 0.0;
  double delta_H_AX = 0.0;
  double delta_H_A_given_X = 0.0;
  /// Groenewold gain of the realized instrument on rho.
  double I_G = 0.0;
  ExtendedReal D_theta_tau;
  /// max |theta^M - tau^M|.
  double apparatus_deviation = 0.0;
  /// apparatus_deviation <= 1e-8.
  bool apparatus_fixed = true;
};

/// theta^{AMX} = V^{MX} U (rho (x) sigma^M (x) |0><0|) U^dagger V^{MX dagger}
/// with V^{MX} = sum_x P_x (x) V_x, V_x|0> = |x>, copying the pointer into X.
DensityMatrix post_interaction_state(const IndirectMeasurementModel& model, const DensityMatrix& rho,
                                     const std::string& register_label = "X");

/// Throws ApparatusNotThermal when sigma^M is not the Gibbs state of the
/// declared Hamiltonian to 1e-10, or DimensionMismatch.
MeasurementHeatReport measurement_heat(const IndirectMeasurementModel& model, const DensityMatrix& rho);

/// -T_m I_G - Q^{A|X}; nonnegative whenever the apparatus is left unchanged.
/// Throws HypothesisViolated when report.apparatus_fixed is false.
double theorem1_gap(const MeasurementHeatReport& report, double I_G);
double theorem1_gap(const MeasurementHeatReport& report);

struct MeasurementInstance {
  IndirectMeasurementModel model;
  DensityMatrix rho;
};

/// Random projective measurement {Pi_y} on a qubit or qutrit coupled to
/// M = K (x) G, with K degenerate and G a gapped qubit, through
/// U = sum_y Pi_y (x) U_y (x) W_y: U_y Haar on K, W_y diagonal phases on G.
/// Pointer projectors Q_x (x) I_G for a Haar basis {Q_x} of K. Every step
/// leaves tau^M invariant, so theta^M = tau^M for every input.
MeasurementInstance random_phase_coupled_instance(Rng& rng);

/// Shift-pointer dilation of a random projective instrument with a gapped
/// apparatus at beta omega in [0.5, 5]; theta^M differs from tau^M.
MeasurementInstance random_pointer_instance(Rng& rng);

}  // namespace qec

#endif  // QECENGINE_MEASUREMENT_HPP
