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

#include "qecengine/thermo_lab.hpp"

#include <cmath>

#include "qecengine/errors.hpp"

namespace qec {

namespace {

constexpr double kUnitaryTol = 1e-10;

ComplexMatrix or_zero(const ComplexMatrix& m, std::size_t d) {
  return m.size() == 0 ? ComplexMatrix::Zero(d, d) : m;
}

void require_square(const ComplexMatrix& m, std::size_t d, const char* what) {
  if (m.rows() != static_cast<Eigen::Index>(d) || m.cols() != m.rows()) {
    throw DimensionMismatch(std::string(what) + " has the wrong dimension");
  }
}

double h_of(const DensityMatrix& rho, const char* label) { return entropy(rho, {label}); }

}  // namespace

CompositeSpace TwoSystemExperiment::space() const {
  return CompositeSpace({{"A", d_a, false}, {"B", d_b, false}});
}

void TwoSystemExperiment::validate() const {
  const std::size_t d = d_a * d_b;
  require_square(h_a, d_a, "H^A");
  require_square(h_b, d_b, "H^B");
  if (!is_hermitian(h_a)) throw NonHermitianInput(max_asymmetry(h_a));
  if (!is_hermitian(h_b)) throw NonHermitianInput(max_asymmetry(h_b));
  if (v_ab.size() != 0) {
    require_square(v_ab, d, "V^{AB}");
    if (!is_hermitian(v_ab)) throw NonHermitianInput(max_asymmetry(v_ab));
  }
  for (const auto& s : segments) {
    require_square(s.h_a, d_a, "segment H^A");
    if (!is_hermitian(s.h_a)) throw NonHermitianInput(max_asymmetry(s.h_a));
    if (s.v_ab.size() != 0) {
      require_square(s.v_ab, d, "segment V^{AB}");
      if (!is_hermitian(s.v_ab)) throw NonHermitianInput(max_asymmetry(s.v_ab));
    }
    require_square(s.unitary, d, "segment unitary");
    if (!is_unitary(s.unitary, kUnitaryTol)) throw InvalidChannel("segment unitary is not unitary to 1e-10");
  }
  if (!(initial.space() == space())) throw DimensionMismatch("initial state is not on the space A (x) B");
  if (beta && !(*beta > 0 && std::isfinite(*beta))) throw OutOfRange("beta must be positive");
}

ComplexMatrix TwoSystemExperiment::total_unitary() const {
  ComplexMatrix u = identity(d_a * d_b);
  for (const auto& s : segments) u = s.unitary * u;
  return u;
}

DensityMatrix TwoSystemExperiment::final_state() const {
  const ComplexMatrix u = total_unitary();
  return DensityMatrix(space(), u * initial.matrix() * u.adjoint());
}

const ComplexMatrix& TwoSystemExperiment::final_h_a() const {
  return segments.empty() ? h_a : segments.back().h_a;
}

ComplexMatrix TwoSystemExperiment::final_v_ab() const {
  return or_zero(segments.empty() ? v_ab : segments.back().v_ab, d_a * d_b);
}

ComplexMatrix TwoSystemExperiment::initial_hamiltonian() const {
  return tensor(h_a, identity(d_b)) + tensor(identity(d_a), h_b) + or_zero(v_ab, d_a * d_b);
}

ComplexMatrix TwoSystemExperiment::final_hamiltonian() const {
  return tensor(final_h_a(), identity(d_b)) + tensor(identity(d_a), h_b) + final_v_ab();
}

bool TwoSystemExperiment::bath_is_gibbs() const {
  if (!beta) return false;
  const DensityMatrix tau = gibbs_state(HamiltonianSpec("B", h_b), ThermalParams::from_beta(*beta));
  return max_deviation(initial.reduced({"B"}).matrix(), tau.matrix()) <= 1e-10;
}

bool TwoSystemExperiment::initially_product() const {
  return mutual_information(initial, {"A"}, {"B"}) <= 1e-10;
}

ComplexMatrix time_evolution(const ComplexMatrix& h, double t) {
  const auto eig = hermitian_eig(h);
  ComplexVector phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases[k] = std::exp(cplx(0.0, -eig.eigenvalues[k] * t));
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix partial_swap(std::size_t d, double theta) {
  return std::cos(theta) * identity(d * d) + cplx(0.0, std::sin(theta)) * gates::swap(d);
}

EntropyBalanceReport entropy_balance(const TwoSystemExperiment& exp) {
  exp.validate();
  const DensityMatrix& s0 = exp.initial;
  const DensityMatrix st = exp.final_state();
  const DensityMatrix b0 = s0.reduced({"B"});
  const DensityMatrix bt = st.reduced({"B"});

  EntropyBalanceReport r;
  r.delta_H_A = h_of(st, "A") - h_of(s0, "A");
  r.delta_H_B = h_of(st, "B") - h_of(s0, "B");
  r.delta_I_AB = mutual_information(st, {"A"}, {"B"}) - mutual_information(s0, {"A"}, {"B"});
  r.total_entropy_residual = r.delta_H_A + r.delta_H_B - r.delta_I_AB;

  const auto eig = hermitian_eig(b0.matrix());
  double lhs = 0.0;
  bool lhs_infinite = false;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const auto v = eig.eigenvectors.col(k);
    const double q = (v.adjoint() * bt.matrix() * v)(0, 0).real();
    const double p = eig.eigenvalues[k];
    if (p < kZeroCutoff) {
      if (q > 1e-10) lhs_infinite = true;
      continue;
    }
    lhs += (p - q) * std::log(p);
  }
  r.lhs = lhs_infinite ? ExtendedReal::inf() : ExtendedReal::finite(lhs);
  r.D_B = relative_entropy(bt, b0);
  r.rhs = r.D_B + (r.delta_I_AB - r.delta_H_A);
  if (r.lhs.infinite || r.rhs.infinite) {
    r.gap = ExtendedReal::inf();
  } else {
    r.gap = ExtendedReal::finite(std::abs(r.lhs.value - r.rhs.value));
  }
  return r;
}

ReebWolfReport reeb_wolf(const TwoSystemExperiment& exp) {
  exp.validate();
  if (!exp.bath_is_gibbs()) throw HypothesisViolated("B is not initialized in its Gibbs state", 2);
  if (!exp.initially_product()) throw HypothesisViolated("S and B are initially correlated", 3);
  const DensityMatrix st = exp.final_state();
  const ComplexMatrix hb = tensor(identity(exp.d_a), exp.h_b);

  ReebWolfReport r;
  r.beta = *exp.beta;
  r.Q_S_to_B = expectation(st, hb) - expectation(exp.initial, hb);
  r.delta_H_S = h_of(st, "A") - h_of(exp.initial, "A");
  r.I_SB = mutual_information(st, {"A"}, {"B"});
  r.D_B = relative_entropy_to_gibbs(st.reduced({"B"}).matrix(), exp.h_b, r.beta);
  const double rhs = -r.delta_H_S + r.I_SB + r.D_B.get();
  r.gap = std::abs(r.beta * r.Q_S_to_B - rhs);
  r.landauer_slack = r.beta * r.Q_S_to_B + r.delta_H_S;
  return r;
}

FirstLawReport first_law_report(const TwoSystemExperiment& exp) {
  exp.validate();
  const std::size_t d = exp.d_a * exp.d_b;
  const ComplexMatrix hb = tensor(identity(exp.d_a), exp.h_b);
  const DensityMatrix st = exp.final_state();

  FirstLawReport r;
  const ComplexMatrix ua0 = tensor(exp.h_a, identity(exp.d_b)) + or_zero(exp.v_ab, d);
  const ComplexMatrix uat = tensor(exp.final_h_a(), identity(exp.d_b)) + exp.final_v_ab();
  const double u0 = expectation(exp.initial, ua0);
  const double ut = expectation(st, uat);
  r.delta_U_A = ut - u0;
  r.W = expectation(st, exp.final_hamiltonian()) - expectation(exp.initial, exp.initial_hamiltonian());

  ComplexMatrix sigma = exp.initial.matrix();
  ComplexMatrix h_prev = exp.initial_hamiltonian();
  for (const auto& s : exp.segments) {
    const ComplexMatrix h_new = tensor(s.h_a, identity(exp.d_b)) + hb + or_zero(s.v_ab, d);
    r.W_switches += expectation(sigma, h_new - h_prev);
    sigma = s.unitary * sigma * s.unitary.adjoint();
    h_prev = h_new;
  }

  r.Q = expectation(exp.initial, hb) - expectation(st, hb);
  r.first_law_residual = r.delta_U_A - r.W - r.Q;
  r.delta_H_A = h_of(st, "A") - h_of(exp.initial, "A");
  if (exp.beta) {
    const double t = 1.0 / *exp.beta;
    r.delta_F_A = r.delta_U_A - t * r.delta_H_A;
    if (exp.bath_is_gibbs() && exp.initially_product()) {
      r.inequality_slack = r.W + t * r.delta_H_A - r.delta_U_A;
      r.thomson_slack = r.W - r.delta_F_A;
    }
  }
  return r;
}

TwoSystemExperiment idle_experiment(const ComplexMatrix& h_a, const ComplexMatrix& h_b, const ComplexMatrix& rho_a,
                                    double beta) {
  TwoSystemExperiment e;
  e.d_a = static_cast<std::size_t>(h_a.rows());
  e.d_b = static_cast<std::size_t>(h_b.rows());
  e.h_a = h_a;
  e.h_b = h_b;
  e.beta = beta;
  const DensityMatrix tau = gibbs_state(HamiltonianSpec("B", h_b), ThermalParams::from_beta(beta));
  e.initial = DensityMatrix(e.space(), tensor(rho_a, tau.matrix()));
  e.validate();
  return e;
}

TwoSystemExperiment random_experiment(Rng& rng, bool correlated, bool quench) {
  const ComplexMatrix h_a = random_hermitian(2, rng);
  const ComplexMatrix h_b = random_hermitian(2, rng);
  const double beta = uniform(rng, 0.2, 3.0);
  TwoSystemExperiment e = idle_experiment(h_a, h_b, random_density_matrix(2, rng), beta);
  if (correlated) e.initial = DensityMatrix(e.space(), random_density_matrix(4, rng));
  ComplexMatrix h_run = h_a;
  if (quench) {
    h_run = random_hermitian(2, rng);
    e.segments.push_back({h_run, {}, identity(4)});
  }
  e.segments.push_back({h_run, {}, haar_unitary(4, rng)});
  e.validate();
  return e;
}

}  // namespace qec
