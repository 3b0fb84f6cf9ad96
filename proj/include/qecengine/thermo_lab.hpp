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

#ifndef QECENGINE_THERMO_LAB_HPP
#define QECENGINE_THERMO_LAB_HPP

#include <optional>
#include <string>
#include <vector>

#include "qecengine/entropy.hpp"
#include "qecengine/random.hpp"
#include "qecengine/state.hpp"

namespace qec {

/// One piece of a piecewise-constant protocol. At the start of the segment
/// the Hamiltonian of A and the interaction are switched to `h_a` and `v_ab`
/// (a work event), then `unitary` acts on AB.
struct ProtocolSegment {
  ComplexMatrix h_a;
  /// Interaction on AB; empty means zero.
  ComplexMatrix v_ab;
  ComplexMatrix unitary;
};

/// Two systems A and B evolving unitarily from sigma^{AB}_0.
///
/// H^B is fixed. A's Hamiltonian and the interaction follow the segments; the
/// final Hamiltonian is that of the last segment. With no segments V = I.
struct TwoSystemExperiment {
  std::size_t d_a = 2;
  std::size_t d_b = 2;
  ComplexMatrix h_a;
  ComplexMatrix h_b;
  /// Interaction at t = 0; empty means zero.
  ComplexMatrix v_ab;
  std::vector<ProtocolSegment> segments;
  DensityMatrix initial;
  /// Inverse temperature of B when B is Gibbs-initialized.
  std::optional<double> beta;

  /// Throws DimensionMismatch, NonHermitianInput or InvalidChannel
  /// (non-unitary segment, tolerance 1e-10).
  void validate() const;
  CompositeSpace space() const;
  /// Product of the segment unitaries, last segment leftmost.
  ComplexMatrix total_unitary() const;
  DensityMatrix final_state() const;
  /// H^A (x) I + I (x) H^B + V at t = 0 and at the end.
  ComplexMatrix initial_hamiltonian() const;
  ComplexMatrix final_hamiltonian() const;
  const ComplexMatrix& final_h_a() const;
  ComplexMatrix final_v_ab() const;
  /// sigma^B_0 equals exp(-beta H^B)/Z to 1e-10.
  bool bath_is_gibbs() const;
  /// I(A:B)_0 <= 1e-10.
  bool initially_product() const;
};

/// exp(-i h t) for Hermitian h.
ComplexMatrix time_evolution(const ComplexMatrix& h, double t);
/// cos(theta) I + i sin(theta) SWAP on two d-level systems.
ComplexMatrix partial_swap(std::size_t d, double theta);

struct EntropyBalanceReport {
  double delta_H_A = 0.0;
  double delta_H_B = 0.0;
  double delta_I_AB = 0.0;
  /// tr_B[(sigma^B_0 - sigma^B_t) ln sigma^B_0].
  ExtendedReal lhs;
  ExtendedReal D_B;
  /// -dH(A) + dI(A:B) + D(sigma^B_t||sigma^B_0).
  ExtendedReal rhs;
  /// |lhs - rhs|; the sentinel when either side is infinite.
  ExtendedReal gap;
  /// dH(A) + dH(B) - dI(A:B), zero for any unitary.
  double total_entropy_residual = 0.0;
};

EntropyBalanceReport entropy_balance(const TwoSystemExperiment& exp);

struct ReebWolfReport {
  double beta = 1.0;
  /// <H^B>_t - <H^B>_0.
  double Q_S_to_B = 0.0;
  double delta_H_S = 0.0;
  double I_SB = 0.0;
  ExtendedReal D_B;
  /// |beta Q - (-dH(S) + I(S:B) + D)|.
  double gap = 0.0;
  /// beta Q + dH(S), nonnegative.
  double landauer_slack = 0.0;
};

/// Throws HypothesisViolated with index 2 (B not Gibbs) or 3 (correlated
/// start). Unitarity, hypothesis 1, is checked by validate().
ReebWolfReport reeb_wolf(const TwoSystemExperiment& exp);

struct FirstLawReport {
  /// tr[sigma (H^A + V)] at the end minus the start.
  double delta_U_A = 0.0;
  /// Total-energy change of AB.
  double W = 0.0;
  /// Sum of the Hamiltonian switch contributions tr[sigma (H_new - H_old)].
  double W_switches = 0.0;
  /// <H^B>_0 - <H^B>_t, heat absorbed by A.
  double Q = 0.0;
  /// Delta U^A - W - Q.
  double first_law_residual = 0.0;
  double delta_H_A = 0.0;
  double delta_F_A = 0.0;
  /// W + T dH(A) - dU^A; set for a Gibbs bath and product start.
  std::optional<double> inequality_slack;
  /// W - dF^A; same hypotheses.
  std::optional<double> thomson_slack;
};

FirstLawReport first_law_report(const TwoSystemExperiment& exp);

/// Random qubit-qubit experiment: random H^A, H^B, beta in [0.2, 3], Gibbs B,
/// and a Haar interaction unitary. `correlated` replaces the product start by
/// a random full-rank state of AB. `quench` adds a Hamiltonian switch of A.
TwoSystemExperiment random_experiment(Rng& rng, bool correlated = false, bool quench = false);

/// V = I on rho^A (x) tau^B.
TwoSystemExperiment idle_experiment(const ComplexMatrix& h_a, const ComplexMatrix& h_b, const ComplexMatrix& rho_a,
                                    double beta);

}  // namespace qec

#endif  // QECENGINE_THERMO_LAB_HPP
