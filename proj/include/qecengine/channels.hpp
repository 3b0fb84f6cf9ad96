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

#ifndef QECENGINE_CHANNELS_HPP
#define QECENGINE_CHANNELS_HPP

#include <string>
#include <vector>

#include "qecengine/entropy.hpp"
#include "qecengine/linalg.hpp"
#include "qecengine/state.hpp"

namespace qec {

/// Completely positive map in Kraus form, rho -> sum_k K rho K^dagger.
///
/// Construction checks sum K^dagger K <= I + 1e-10, and equality within
/// 1e-10 when flagged trace preserving. Throws InvalidChannel.
class KrausChannel {
 public:
  KrausChannel() = default;
  KrausChannel(CompositeSpace input, CompositeSpace output, std::vector<ComplexMatrix> kraus,
               bool trace_preserving = true);

  static KrausChannel unitary(const CompositeSpace& space, const ComplexMatrix& u);
  static KrausChannel identity(const CompositeSpace& space);

  const CompositeSpace& input_space() const { return input_; }
  const CompositeSpace& output_space() const { return output_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  bool trace_preserving() const { return trace_preserving_; }

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  /// Output of a trace-preserving channel as a validated state.
  DensityMatrix apply(const DensityMatrix& rho) const;
  /// N^dagger(m) = sum K^dagger m K.
  ComplexMatrix apply_adjoint(const ComplexMatrix& m) const;

  /// Kraus set {K^dagger}. The adjoint of a channel is in general not trace
  /// non-increasing, so the result skips construction checks.
  KrausChannel adjoint() const;

  /// sum_ij |i><j| (x) N(|i><j|), input index slow.
  ComplexMatrix choi() const;
  /// sum K^dagger K.
  ComplexMatrix kraus_gram() const;

 private:
  struct Unchecked {};
  KrausChannel(Unchecked, CompositeSpace input, CompositeSpace output, std::vector<ComplexMatrix> kraus);

  CompositeSpace input_;
  CompositeSpace output_;
  std::vector<ComplexMatrix> kraus_;
  bool trace_preserving_ = false;
};

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho);
ComplexMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

enum class Unitality { kUnital, kSubunital, kSuperunital, kNeither };
std::string to_string(Unitality u);

struct UnitalityReport {
  Unitality kind = Unitality::kNeither;
  /// Eigenvalue of N(I) - I with the largest magnitude.
  double slack = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

/// Classifies N(I) - I with tolerance 1e-10.
UnitalityReport unitality_class(const KrausChannel& ch, double tol = 1e-10);

/// tr[N^dagger o N(rho)].
double efficacy(const KrausChannel& ch, const ComplexMatrix& rho);
double efficacy(const KrausChannel& ch, const DensityMatrix& rho);
/// N^dagger o N(rho).
ComplexMatrix adjoint_composed(const KrausChannel& ch, const ComplexMatrix& rho);

/// Outcome-labeled family of CP trace non-increasing maps summing to a channel.
class QuantumInstrument {
 public:
  QuantumInstrument() = default;
  QuantumInstrument(CompositeSpace system, std::vector<KrausChannel> branches, std::vector<std::string> outcomes = {});

  /// Instrument with one Kraus operator per outcome.
  static QuantumInstrument from_operators(const CompositeSpace& system, const std::vector<ComplexMatrix>& ops);

  const CompositeSpace& system() const { return system_; }
  std::size_t size() const { return branches_.size(); }
  const KrausChannel& branch(std::size_t y) const { return branches_.at(y); }
  const std::vector<KrausChannel>& branches() const { return branches_; }
  const std::vector<std::string>& outcomes() const { return outcomes_; }

  /// sum_y N_y, trace preserving.
  KrausChannel summed_channel() const;
  /// N(.) = sum_y N_y(.) (x) |y><y| as a map system -> system (x) register.
  KrausChannel joint_channel(const std::string& register_label = "Y") const;
  std::vector<double> probabilities(const ComplexMatrix& rho) const;
  /// Every branch is a single orthogonal projector.
  bool is_projective(double tol = 1e-10) const;

 private:
  CompositeSpace system_;
  std::vector<KrausChannel> branches_;
  std::vector<std::string> outcomes_;
};

/// sum_y N_y(rho) (x) |y><y| on system (x) register.
DensityMatrix instrument_apply(const QuantumInstrument& inst, const DensityMatrix& rho,
                               const std::string& register_label = "Y");

/// H(rho) - sum_y p_y H(theta_y); outcomes with p_y < 1e-14 contribute zero.
double groenewold_gain(const QuantumInstrument& inst, const ComplexMatrix& rho);
double groenewold_gain(const QuantumInstrument& inst, const DensityMatrix& rho);

struct BdwReport {
  double H_Y = 0.0;
  double I_G = 0.0;
  /// D(rho || rho~) with rho~ the normalized N^dagger o N(rho).
  ExtendedReal D_normalized;
  double efficacy = 1.0;
  double neg_log_efficacy = 0.0;
  /// H(Y) - D(rho || N^dagger o N(rho)) - I_G. The sentinel marks an
  /// infinite relative entropy, for which the bound is reported as trivially true.
  ExtendedReal gap;
};

BdwReport bdw_bound(const QuantumInstrument& inst, const ComplexMatrix& rho);
ExtendedReal bdw_bound_gap(const QuantumInstrument& inst, const ComplexMatrix& rho);

/// Thermal apparatus for an indirect measurement.
struct ApparatusParams {
  /// "pointer": ground level 0, degenerate excited manifold at omega_M.
  /// "degenerate": H^M = 0.
  std::string kind = "pointer";
  /// beta_m * omega_M for the pointer apparatus.
  double beta_omega = 100.0;
  double temperature = 1.0;
};

/// (sigma^M, U^{AM}, {P^M_x}) with sigma^M thermal for `hamiltonian`.
struct IndirectMeasurementModel {
  CompositeSpace system;
  CompositeSpace apparatus;
  HamiltonianSpec hamiltonian;
  ThermalParams thermal;
  DensityMatrix sigma;
  ComplexMatrix interaction;
  std::vector<ComplexMatrix> pointer_projectors;

  /// Checks unitarity (1e-10) and projector completeness and orthogonality.
  void validate() const;
  /// Instrument realized by the model, with Kraus operators
  /// sqrt(q_k) (I (x) <j|) U (I (x) |k>) for sigma^M = sum q_k |k><k| and
  /// P_x = sum_j |j><j|.
  QuantumInstrument realized_instrument() const;
};

/// Thermal indirect model from its parts; sigma^M is the Gibbs state of
/// `apparatus_hamiltonian`.
IndirectMeasurementModel make_indirect_model(const CompositeSpace& system, const std::string& apparatus_label,
                                             const HamiltonianSpec& apparatus_hamiltonian,
                                             const ThermalParams& thermal, const ComplexMatrix& interaction,
                                             const std::vector<ComplexMatrix>& pointer_projectors);

/// Pointer model U = sum_y Pi_y (x) Shift_y for a projective instrument.
/// Throws NotProjective.
IndirectMeasurementModel dilate_projective_instrument(const QuantumInstrument& inst, const ApparatusParams& params,
                                                      const std::string& apparatus_label = "M");

/// Largest Choi deviation between the realized and the target branches.
double branch_reproduction_error(const IndirectMeasurementModel& model, const QuantumInstrument& target);

/// Max elementwise deviation of Choi matrices.
double choi_distance(const KrausChannel& a, const KrausChannel& b);

/// Thermal-operation realization of a Pauli flip channel
/// (1-p) rho + p P rho P through U = I (x) P_0 + P (x) P_1 on a Gibbs bath.
struct FlipDilation {
  KrausChannel channel;
  /// On S (x) B.
  ComplexMatrix unitary;
  CompositeSpace joint_space;
  /// Bath levels: ground plus g degenerate excited levels.
  std::vector<double> bath_energies;
  std::vector<double> bath_populations;
  std::vector<double> bath_log_populations;
  DensityMatrix bath_state;
  /// Gap epsilon; +inf at p = 0.
  double gap = 0.0;
  double temperature = 1.0;
  std::size_t degeneracy = 1;

  /// Bath Hamiltonian; throws DomainError when the gap is infinite.
  HamiltonianSpec bath_hamiltonian() const;
};

/// Bit flip (P = X). Throws InvalidProbability when p > g/(1+g).
FlipDilation thermal_operation_bitflip(double p, double temperature, std::size_t degeneracy = 1,
                                       const std::string& system_label = "S", const std::string& bath_label = "B");
/// Flip channel for an arbitrary Pauli operator.
FlipDilation thermal_operation_flip(const ComplexMatrix& pauli, double p, double temperature, std::size_t degeneracy,
                                    const std::string& system_label, const std::string& bath_label);

/// Operator norm of [U, H_total].
double thermality_diagnostic(const ComplexMatrix& u, const ComplexMatrix& h_total);

}  // namespace qec

#endif  // QECENGINE_CHANNELS_HPP
