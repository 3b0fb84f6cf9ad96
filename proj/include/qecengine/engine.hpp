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

#ifndef QECENGINE_ENGINE_HPP
#define QECENGINE_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qecengine/codes.hpp"
#include "qecengine/cq_state.hpp"
#include "qecengine/entropy.hpp"

namespace qec {

/// "Much smaller than" in Assumptions 1 and 2: at most this fraction.
inline constexpr double kNegligibleRatio = 0.01;

/// One engine configuration. Energies are absolute; gaps are given in units
/// of k_B T_c.
struct EngineScenario {
  std::string code = "bitflip";
  /// "pure": R S starts in |0> (x) (a|0> + b|1>). "maximally_mixed": Bell pair.
  std::string input = "pure";
  cplx a = cplx(0.70710678118654752, 0.0);
  cplx b = cplx(0.70710678118654752, 0.0);
  /// "flip": flip probability p. "phase_damping": strength lambda.
  std::string noise = "flip";
  double p = 0.01;
  double lambda = 0.0;
  double T_h = 10.0;
  double T_c = 1.0;
  double T_m = 1.0;
  std::size_t bath_degeneracy = 1;
  /// epsilon_1 / k_B T_c.
  double ancilla_gap = 100.0;
  /// epsilon_2 / epsilon_1.
  double ancilla_gap_ratio = 1.01;
  /// "pointer" or "degenerate".
  std::string apparatus = "pointer";
  double apparatus_beta_omega = 100.0;
  /// "unencode" or "correct_only".
  std::string decoder = "unencode";

  /// Flip probability seen by each data qubit.
  double flip_probability() const;
  /// Throws ValidationError naming the field.
  void validate() const;

  bool operator==(const EngineScenario&) const = default;
};

/// Everything the evaluators need besides the states.
struct CycleContext {
  ComplexVector psi_rs;
  Labels e_labels;
  Labels bath_h_labels;
  Labels bath_c_labels;
  Labels data_labels;
  double beta_h = 1.0;
  double beta_c = 1.0;
  double beta_m = 1.0;
  /// Per qubit of the hot bath, ground first.
  std::vector<double> bath_h_energies;
  std::vector<double> bath_h_log_populations;
  /// Per cold-bath qubit k: {0, epsilon_k}.
  std::vector<std::vector<double>> bath_c_energies;
  std::vector<std::vector<double>> bath_c_log_populations;
  /// Diagonal of H^{A1 A2}.
  std::vector<double> ancilla_energies;
  ComplexMatrix apparatus_hamiltonian;
  /// Realized syndrome instrument on the data qubits.
  std::vector<std::vector<ComplexMatrix>> syndrome_kraus;
  double dilation_commutator = 0.0;
};

/// Stage states of one cycle. `two` carries the apparatus M; the others do not.
struct StageSnapshots {
  CqState initial;
  CqState zero;
  CqState enc;
  CqState one;
  CqState two;
  CqState three;
  CqState final_state;
  CqState discarded;
  CycleContext context;
};

/// Entropic quantities of one cycle, evaluated once from the snapshots.
struct CycleEntropies {
  double H_E_i = 0.0;
  double H_E_f = 0.0;
  /// H(EXY) at i, 0, enc, 1, 2, 3, f.
  std::vector<double> H_EXY;
  double H_EMXY_2 = 0.0;
  double H_M_tau = 0.0;
  std::vector<double> p_x;
  std::vector<double> I_G_x;
  std::vector<double> efficacy_x;
  double I_G_avg = 0.0;
  double neg_log_efficacy_avg = 0.0;
  double H_Y_2 = 0.0;
  double H_Y_given_X_2 = 0.0;
  double H_XY_given_E_f = 0.0;
  double H_X_given_E_f = 0.0;
  double H_Y_given_EX_f = 0.0;
  double S_e = 0.0;
  double F_e = 1.0;
  double input_output_fidelity = 1.0;
  double I_RS_B_f = 0.0;
  double I_Bh_Bc_f = 0.0;
  ExtendedReal D_h;
  ExtendedReal D_c;
  double H_A_f = 0.0;
  double I_A_rest_f = 0.0;
  double reset_deviation = 0.0;
  double reference_deviation = 0.0;
  double I_E_M_given_XY_2 = 0.0;
  double I_RSA_M_given_XY_2 = 0.0;
  double I_X_M_2 = 0.0;
  double H_Y_given_XM_2 = 0.0;
  ExtendedReal D_M;
  /// Largest deviation between the dilated and the Kraus syndrome stage.
  double instrument_path_deviation = 0.0;
};

/// Heat, work and entropy ledger. Q's are heats absorbed by the working
/// fluid; energies in the units of the scenario.
struct CycleLedger {
  double Q_h = 0.0;
  double Q_c = 0.0;
  /// <H^M>_1 - <H^M>_2.
  double Q_meas = 0.0;
  /// T_m H(Y|XM).
  double Q_meas_Y = 0.0;
  /// T_m (-sum p I_G - I(E:M|XY) - I(X:M)).
  double Q_meas_RSA_given_Y = 0.0;
  /// T_m D(sigma_2^M || tau^M).
  double Q_meas_D = 0.0;
  /// Reeb-Wolf assembly T_m (dH(EXY) - I(EXY:M) - D).
  double Q_meas_entropic = 0.0;
  /// Landauer-saturated -T_c H(Y|X); modeled, not simulated.
  double Q_Y_erase = 0.0;
  double W_enc = 0.0;
  double W_meas = 0.0;
  double W_dec = 0.0;
  double W_tot = 0.0;
  /// Q_h + Q_meas + Q_c + Q_Y_erase.
  double Q_tot = 0.0;
  double delta_U_RSAY = 0.0;
  /// Delta U - (W_tot + Q_h + Q_meas + Q_c); the modeled erasure heat is
  /// excluded because the register Hamiltonian is zero.
  double first_law_residual = 0.0;
  double S_e = 0.0;
  double F_e = 1.0;
  double I_G_avg = 0.0;
  double H_Y_given_X = 0.0;
  double H_XY_given_E = 0.0;
  ExtendedReal Gamma;
  double Q_input = 0.0;
  /// Undefined when Q_input <= 1e-12.
  std::optional<double> eta;
  double eta_C = 0.0;
  double neg_log_efficacy_avg = 0.0;
  double T_h = 1.0;
  double T_c = 1.0;
  double T_m = 1.0;
  /// Q_c <= 1e-12.
  bool heat_engine_regime = true;
  /// Operator norm of H^S; zero in this model.
  double H_S_norm = 0.0;
  /// dim(H_R (x) H_S).
  std::size_t d_RS = 4;
};

struct CycleResult {
  EngineScenario scenario;
  StageSnapshots snapshots;
  CycleEntropies entropies;
  CycleLedger ledger;
};

CycleResult run_cycle(const EngineScenario& scenario);

/// Entropic quantities from the snapshots.
CycleEntropies evaluate_entropies(const StageSnapshots& snapshots);

/// |dH(E) - [H(Y|X) - sum p I_G - H(XY|E)]|.
double theorem2_gap(const CycleEntropies& e);
/// |dH(E) - [S_e - Q_h/T_h - Q_c/T_c - I(RS:BhBc) - Gamma]|; +inf sentinel if Gamma is.
ExtendedReal theorem3_gap(const CycleEntropies& e, const CycleLedger& ledger);

struct SecondLawReport {
  /// RHS - LHS of the Clausius inequality from ledger terms.
  double slack = 0.0;
  /// I(RS:BhBc) + Gamma from the final bath states.
  ExtendedReal predicted;
  bool consistent = true;
};
SecondLawReport second_law_slack(const CycleLedger& ledger, const CycleEntropies& e);

struct FidelityReport {
  double F_e = 1.0;
  double S_e = 0.0;
  double fano_gap = 0.0;
  double input_output_fidelity = 1.0;
};
FidelityReport fidelity_and_exchange(const StageSnapshots& snapshots);

struct EfficiencyReport {
  double eta = 0.0;
  double eta_C = 0.0;
  double Q_input = 0.0;
  bool assumption1_ok = false;
};
/// Throws DegenerateInput when Q_input <= 1e-12.
EfficiencyReport efficiency_report(const CycleLedger& ledger);

struct AssumptionsReport {
  bool a1 = false;
  double a1_delta_U = 0.0;
  bool a2 = false;
  /// H(Y|EX) - H(X|E).
  double a2_slack = 0.0;
  double a2_H_X_given_E = 0.0;
  double a2_H_Y_given_EX = 0.0;
  /// Landauer saturation is the bookkeeping model.
  bool a3 = true;
  bool a4 = false;
  /// I(RSA:M|XY) + sum p I_G - (T_c/T_h) H(Y|X).
  double a4_slack = 0.0;
  bool all() const { return a1 && a2 && a3 && a4; }
  /// Index of the first failing assumption, 0 when all hold.
  int first_failure() const;
};
AssumptionsReport assumptions_report(const CycleEntropies& e, const CycleLedger& ledger);

struct TradeoffReport {
  /// (Q_input/T_h)(eta - eta_C)/(1 - eta_C), evaluated as (-W_tot - eta_C Q_input)/T_c.
  double efficiency_term = 0.0;
  double theorem4_gap = 0.0;
  double fano_tradeoff_gap = 0.0;
  /// -(efficiency_term + sum p(-ln E)); present when F_e = 1 to 1e-9.
  std::optional<double> corollary4_slack;
  /// False when F_e = 1, -ln E >= 0 and eta > eta_C hold together.
  bool corollary3_consistent = true;
  bool hypotheses_hold = false;
  int violated_assumption = 0;
};
/// With `strict`, throws HypothesisViolated carrying the failing assumption.
TradeoffReport theorem4_and_tradeoff(const CycleLedger& ledger, const AssumptionsReport& assumptions,
                                     bool strict = false);

/// (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double uhlmann_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

}  // namespace qec

#endif  // QECENGINE_ENGINE_HPP
