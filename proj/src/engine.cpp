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

#include "qecengine/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qecengine/channels.hpp"
#include "qecengine/errors.hpp"

namespace qec {

namespace {

const Labels kData = {"S", "A1", "A2"};
const Labels kAncilla = {"A1", "A2"};
const Labels kHot = {"Bh1", "Bh2", "Bh3"};
const Labels kCold = {"Bc1", "Bc2"};
const Labels kRS = {"R", "S"};

Labels concat(Labels a, const Labels& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<double> two_level_populations(double gap, double beta) {
  const auto pops = gibbs_populations_extended({0.0, gap}, beta);
  return {static_cast<double>(pops[0]), static_cast<double>(pops[1])};
}

ComplexMatrix sqrt_diagonal(const std::vector<double>& pops) {
  ComplexMatrix f = ComplexMatrix::Zero(pops.size(), pops.size());
  for (std::size_t k = 0; k < pops.size(); ++k) f(k, k) = std::sqrt(pops[k]);
  return drop_zero_columns(f);
}

/// sum_k sigma_kk E_k with empty levels of infinite energy contributing 0.
double diagonal_energy(const ComplexMatrix& sigma, const std::vector<double>& energies) {
  double e = 0.0;
  for (std::size_t k = 0; k < energies.size(); ++k) {
    const double w = sigma(k, k).real();
    if (std::isinf(energies[k])) {
      if (w > 1e-300) return std::numeric_limits<double>::infinity();
      continue;
    }
    e += w * energies[k];
  }
  return e;
}

/// Log-populations of a product of diagonal Gibbs states.
std::vector<double> product_log_populations(const std::vector<std::vector<double>>& factors) {
  std::vector<double> out = {0.0};
  for (const auto& f : factors) {
    std::vector<double> next;
    next.reserve(out.size() * f.size());
    for (double a : out) {
      for (double b : f) next.push_back(a + b);
    }
    out = std::move(next);
  }
  return out;
}

double normalized_entropy(const ComplexMatrix& factor, double p) {
  return (factor_entropy({factor}) + p * std::log(p)) / p;
}

}  // namespace

double EngineScenario::flip_probability() const {
  if (noise == "flip") return p;
  if (noise == "phase_damping") return phase_damping_flip_prob(lambda);
  throw ValidationError("noise", "must be \"flip\" or \"phase_damping\"");
}

void EngineScenario::validate() const {
  if (code != "bitflip" && code != "phaseflip") throw ValidationError("code", "must be \"bitflip\" or \"phaseflip\"");
  if (input != "pure" && input != "maximally_mixed") {
    throw ValidationError("input", "must be \"pure\" or \"maximally_mixed\"");
  }
  if (input == "pure") {
    const double n = std::norm(a) + std::norm(b);
    if (std::abs(n - 1.0) > 1e-10) throw ValidationError("a", "|a|^2 + |b|^2 must equal 1");
  }
  if (noise != "flip" && noise != "phase_damping") throw ValidationError("noise", "must be \"flip\" or \"phase_damping\"");
  if (noise == "phase_damping" && code != "phaseflip") {
    throw ValidationError("noise", "phase damping is corrected by the phaseflip code only");
  }
  if (noise == "phase_damping" && !(lambda >= 0.0 && lambda <= 1.0)) throw ValidationError("lambda", "must lie in [0, 1]");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p", "must lie in [0, 1]");
  for (const auto& [name, t] : {std::pair<const char*, double>{"T_h", T_h}, {"T_c", T_c}, {"T_m", T_m}}) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ValidationError(name, "temperature must be positive and finite");
  }
  if (bath_degeneracy < 1 || bath_degeneracy > 4) throw ValidationError("bath_degeneracy", "must lie in [1, 4]");
  const double g = static_cast<double>(bath_degeneracy);
  if (flip_probability() > g / (1.0 + g)) {
    throw ValidationError(noise == "flip" ? "p" : "lambda",
                          "bath construction infeasible: flip probability must not exceed g/(1+g)");
  }
  if (!(ancilla_gap > 0.0) || !std::isfinite(ancilla_gap)) throw ValidationError("ancilla_gap", "must be positive");
  if (!(ancilla_gap_ratio > 0.0) || !std::isfinite(ancilla_gap_ratio)) {
    throw ValidationError("ancilla_gap_ratio", "must be positive");
  }
  if (apparatus != "pointer" && apparatus != "degenerate") {
    throw ValidationError("apparatus", "must be \"pointer\" or \"degenerate\"");
  }
  if (!(apparatus_beta_omega > 0.0) || !std::isfinite(apparatus_beta_omega)) {
    throw ValidationError("apparatus_beta_omega", "must be positive");
  }
  if (decoder != "unencode" && decoder != "correct_only") {
    throw ValidationError("decoder", "must be \"unencode\" or \"correct_only\"");
  }
}

CycleEntropies evaluate_entropies(const StageSnapshots& s) {
  const CycleContext& ctx = s.context;
  const Labels& E = ctx.e_labels;
  const Labels EXY = concat(E, {"X", "Y"});
  const CqState two_e = s.two.trace_out({"M"});

  CycleEntropies e;
  e.H_E_i = s.initial.entropy(E);
  for (const CqState* st : {&s.initial, &s.zero, &s.enc, &s.one, &two_e, &s.three, &s.final_state}) {
    e.H_EXY.push_back(st->entropy(EXY));
  }
  e.H_EMXY_2 = s.two.entropy(concat(EXY, {"M"}));
  const auto h_eig = hermitian_eig(ctx.apparatus_hamiltonian);
  std::vector<double> m_energies(h_eig.eigenvalues.data(), h_eig.eigenvalues.data() + h_eig.eigenvalues.size());
  e.H_M_tau = static_cast<double>(gibbs_entropy_extended(m_energies, ctx.beta_m));

  // Kraus path for the syndrome stage, independent of the dilation.
  const CqState two_k = s.one.instrument_into_y(
      ctx.data_labels, [&](std::size_t, std::size_t y) { return ctx.syndrome_kraus.at(y); });
  const std::size_t nx = s.one.x_dim();
  const std::size_t ny = s.one.y_dim();
  e.p_x.assign(nx, 0.0);
  e.I_G_x.assign(nx, 0.0);
  e.efficacy_x.assign(nx, 1.0);
  for (std::size_t x = 0; x < nx; ++x) {
    const double px = s.one.probability_x(x);
    e.p_x[x] = px;
    if (px < 1e-14) continue;
    double gain = normalized_entropy(s.one.block(x, 0), px);
    double eff = 0.0;
    const ComplexMatrix rho = s.one.block_marginal(x, 0, ctx.data_labels) / px;
    for (std::size_t y = 0; y < ny; ++y) {
      const double pxy = two_k.probability(x, y);
      if (pxy >= 1e-14) gain -= (pxy / px) * normalized_entropy(two_k.block(x, y), pxy);
      const auto& ks = ctx.syndrome_kraus.at(y);
      ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
      ComplexMatrix gram = ComplexMatrix::Zero(rho.rows(), rho.cols());
      for (const auto& k : ks) {
        out += k * rho * k.adjoint();
        gram += k * k.adjoint();
      }
      eff += trace(gram * out).real();
    }
    e.I_G_x[x] = gain;
    e.efficacy_x[x] = eff;
    e.I_G_avg += px * gain;
    e.neg_log_efficacy_avg += px * (-std::log(eff));
  }
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      const double pk = two_k.probability(x, y);
      const double pd = two_e.probability(x, y);
      double dev = std::abs(pk - pd);
      if (pk > 0.0 || pd > 0.0) {
        dev = std::max(dev, std::abs(factor_entropy({two_k.block(x, y)}) - factor_entropy({two_e.block(x, y)})));
        dev = std::max(dev, max_deviation(two_k.block_marginal(x, y, concat(kRS, kAncilla)),
                                          two_e.block_marginal(x, y, concat(kRS, kAncilla))));
      }
      e.instrument_path_deviation = std::max(e.instrument_path_deviation, dev);
    }
  }

  e.H_Y_2 = two_e.entropy({"Y"});
  e.H_Y_given_X_2 = two_e.conditional_entropy({"Y"}, {"X"});

  const CqState& f = s.final_state;
  e.H_E_f = f.entropy(E);
  const double h_ex = f.entropy(concat(E, {"X"}));
  const double h_exy = e.H_EXY.back();
  e.H_XY_given_E_f = h_exy - e.H_E_f;
  e.H_X_given_E_f = h_ex - e.H_E_f;
  e.H_Y_given_EX_f = h_exy - h_ex;

  const DensityMatrix rs_f = f.reduced(kRS);
  e.S_e = von_neumann(rs_f);
  e.F_e = (ctx.psi_rs.adjoint() * rs_f.matrix() * ctx.psi_rs)(0, 0).real();
  e.input_output_fidelity =
      uhlmann_fidelity(f.reduced({"S"}).matrix(), s.initial.reduced({"S"}).matrix());

  const Labels baths = concat(kHot, kCold);
  e.I_RS_B_f = f.mutual_information(kRS, baths);
  e.I_Bh_Bc_f = f.mutual_information(kHot, kCold);
  {
    std::vector<std::vector<double>> hot(kHot.size(), ctx.bath_h_log_populations);
    e.D_h = relative_entropy_to_log_diagonal(f.reduced(kHot).matrix(), product_log_populations(hot));
    e.D_c = relative_entropy_to_log_diagonal(f.reduced(kCold).matrix(), product_log_populations(ctx.bath_c_log_populations));
  }

  e.H_A_f = f.entropy(kAncilla);
  e.I_A_rest_f = e.H_A_f + f.entropy(concat(kRS, baths)) - e.H_E_f;
  {
    ComplexMatrix tau_a = ComplexMatrix::Zero(4, 4);
    const auto pops = gibbs_populations_extended(ctx.ancilla_energies, ctx.beta_c);
    for (std::size_t k = 0; k < 4; ++k) tau_a(k, k) = static_cast<double>(pops[k]);
    e.reset_deviation = max_deviation(f.reduced(kAncilla).matrix(), tau_a);
  }
  const ComplexMatrix r_i = s.initial.reduced({"R"}).matrix();
  for (const CqState* st : {&s.zero, &s.enc, &s.one, &two_e, &s.three, &s.final_state, &s.discarded}) {
    e.reference_deviation = std::max(e.reference_deviation, max_deviation(st->reduced({"R"}).matrix(), r_i));
  }

  const Labels rsa = concat(kRS, kAncilla);
  e.I_E_M_given_XY_2 = s.two.conditional_mutual_information(E, {"M"}, {"X", "Y"});
  e.I_RSA_M_given_XY_2 = s.two.conditional_mutual_information(rsa, {"M"}, {"X", "Y"});
  e.I_X_M_2 = s.two.mutual_information({"X"}, {"M"});
  e.H_Y_given_XM_2 = s.two.conditional_entropy({"Y"}, {"X", "M"});
  e.D_M = relative_entropy_to_gibbs(s.two.reduced({"M"}).matrix(), ctx.apparatus_hamiltonian, ctx.beta_m);
  return e;
}

CycleResult run_cycle(const EngineScenario& sc) {
  sc.validate();
  const CodeSpec code = code_by_name(sc.code);
  const DecoderKind decoder = parse_decoder(sc.decoder);
  const std::size_t g = sc.bath_degeneracy;
  const double eps1 = sc.ancilla_gap * sc.T_c;
  const double eps2 = sc.ancilla_gap_ratio * eps1;
  const double flip = sc.flip_probability();

  CycleResult result;
  result.scenario = sc;
  StageSnapshots& snap = result.snapshots;
  CycleContext& ctx = snap.context;
  ctx.beta_h = 1.0 / sc.T_h;
  ctx.beta_c = 1.0 / sc.T_c;
  ctx.beta_m = 1.0 / sc.T_m;
  ctx.data_labels = kData;
  ctx.bath_h_labels = kHot;
  ctx.bath_c_labels = kCold;

  std::vector<Factor> factors = {{"R", 2, false}, {"S", 2, false}, {"A1", 2, false}, {"A2", 2, false}};
  for (const auto& l : kHot) factors.push_back({l, g + 1, false});
  for (const auto& l : kCold) factors.push_back({l, 2, false});
  const CompositeSpace espace(factors);
  ctx.e_labels = espace.labels();

  ctx.psi_rs = ComplexVector::Zero(4);
  if (sc.input == "pure") {
    ctx.psi_rs[0] = sc.a;
    ctx.psi_rs[1] = sc.b;
  } else {
    ctx.psi_rs[0] = 1.0 / std::sqrt(2.0);
    ctx.psi_rs[3] = 1.0 / std::sqrt(2.0);
  }

  const auto pops_a1 = two_level_populations(eps1, ctx.beta_c);
  const auto pops_a2 = two_level_populations(eps2, ctx.beta_c);
  ctx.ancilla_energies = {0.0, eps2, eps1, eps1 + eps2};
  ctx.bath_c_energies = {{0.0, eps1}, {0.0, eps2}};
  ctx.bath_c_log_populations = {gibbs_log_populations({0.0, eps1}, ctx.beta_c),
                                gibbs_log_populations({0.0, eps2}, ctx.beta_c)};

  const FlipDilation dil = thermal_operation_flip(code.noise_pauli, flip, sc.T_h, g, "S", "B");
  ctx.bath_h_energies = dil.bath_energies;
  ctx.bath_h_log_populations = dil.bath_log_populations;
  if (std::isfinite(dil.gap)) {
    const ComplexMatrix h_total = tensor(ComplexMatrix::Zero(2, 2), identity(g + 1)) +
                                  tensor(identity(2), dil.bath_hamiltonian().op);
    ctx.dilation_commutator = thermality_diagnostic(dil.unitary, h_total);
  }

  // Initial product state.
  std::vector<ComplexMatrix> init = {ComplexMatrix(ctx.psi_rs), sqrt_diagonal(pops_a1), sqrt_diagonal(pops_a2)};
  for (std::size_t k = 0; k < kHot.size(); ++k) init.push_back(sqrt_diagonal(dil.bath_populations));
  init.push_back(sqrt_diagonal(pops_a1));
  init.push_back(sqrt_diagonal(pops_a2));
  snap.initial = CqState::from_factor(espace, drop_zero_columns(tensor(init)), 4, 4);

  // Energy-basis measurement of A into X.
  std::vector<ComplexMatrix> energy_projectors;
  for (std::size_t x = 0; x < 4; ++x) energy_projectors.push_back(gates::basis_projector(4, x));
  snap.zero = snap.initial.measure_into_x(kAncilla, energy_projectors);

  snap.enc = snap.zero;
  snap.enc.apply_controlled(kData, [&](std::size_t x, std::size_t) { return code.encoders.at(x); });

  snap.one = snap.enc;
  for (std::size_t k = 0; k < kData.size(); ++k) snap.one.apply({kData[k], kHot[k]}, dil.unitary);

  // Syndrome measurement through the thermal pointer.
  ApparatusParams ap;
  ap.kind = sc.apparatus;
  ap.beta_omega = sc.apparatus_beta_omega;
  ap.temperature = sc.T_m;
  const QuantumInstrument syndrome = code.syndrome_instrument();
  const IndirectMeasurementModel model = dilate_projective_instrument(syndrome, ap, "M");
  ctx.apparatus_hamiltonian = model.hamiltonian.op;
  const QuantumInstrument realized = model.realized_instrument();
  for (std::size_t y = 0; y < realized.size(); ++y) ctx.syndrome_kraus.push_back(realized.branch(y).kraus());
  snap.two = snap.one.tensor_factor(model.apparatus, psd_factor(model.sigma.matrix()));
  snap.two.apply(concat(kData, {"M"}), model.interaction);
  snap.two = snap.two.measure_into_y({"M"}, model.pointer_projectors);

  snap.three = snap.two.trace_out({"M"});
  snap.three.apply_controlled(kData, [&](std::size_t x, std::size_t y) { return code.decoder(x, y, decoder); });

  snap.final_state = snap.three;
  snap.final_state.apply({"A1", "Bc1"}, gates::swap(2));
  snap.final_state.apply({"A2", "Bc2"}, gates::swap(2));
  snap.discarded = snap.final_state.discard_registers();

  const CycleEntropies& e = result.entropies = evaluate_entropies(snap);

  // Energetics.
  auto ancilla_energy = [&](const CqState& st) { return diagonal_energy(st.reduced(kAncilla).matrix(), ctx.ancilla_energies); };
  auto hot_energy = [&](const CqState& st) {
    double total = 0.0;
    for (const auto& l : kHot) total += diagonal_energy(st.reduced({l}).matrix(), ctx.bath_h_energies);
    return total;
  };
  auto cold_energy = [&](const CqState& st) {
    double total = 0.0;
    for (std::size_t k = 0; k < kCold.size(); ++k) {
      total += diagonal_energy(st.reduced({kCold[k]}).matrix(), ctx.bath_c_energies[k]);
    }
    return total;
  };
  const DensityMatrix m2 = snap.two.reduced({"M"});

  CycleLedger& L = result.ledger;
  L.T_h = sc.T_h;
  L.T_c = sc.T_c;
  L.T_m = sc.T_m;
  const double u_i = ancilla_energy(snap.initial);
  const double u_0 = ancilla_energy(snap.zero);
  const double u_3 = ancilla_energy(snap.three);
  const double u_f = ancilla_energy(snap.final_state);
  L.Q_h = hot_energy(snap.initial) - hot_energy(snap.final_state);
  L.Q_c = cold_energy(snap.initial) - cold_energy(snap.final_state);
  L.Q_meas = expectation(model.sigma, ctx.apparatus_hamiltonian) - expectation(m2, ctx.apparatus_hamiltonian);
  L.Q_meas_Y = sc.T_m * e.H_Y_given_XM_2;
  L.Q_meas_RSA_given_Y = sc.T_m * (-e.I_G_avg - e.I_E_M_given_XY_2 - e.I_X_M_2);
  L.Q_meas_D = e.D_M.is_finite() ? sc.T_m * e.D_M.value : std::numeric_limits<double>::infinity();
  {
    const double h_m2 = von_neumann(m2);
    const double i_exy_m = e.H_EXY[4] + h_m2 - e.H_EMXY_2;
    L.Q_meas_entropic = sc.T_m * (e.H_EXY[4] - e.H_EXY[3] - i_exy_m) - L.Q_meas_D;
  }
  L.Q_Y_erase = -sc.T_c * e.H_Y_given_X_2;
  L.W_enc = -u_0;
  L.W_meas = -L.Q_meas;
  L.W_dec = u_3;
  L.W_tot = L.W_enc + L.W_meas + L.W_dec;
  L.Q_tot = L.Q_h + L.Q_meas + L.Q_c + L.Q_Y_erase;
  L.delta_U_RSAY = u_f - u_i;
  L.first_law_residual = L.delta_U_RSAY - (L.W_tot + L.Q_h + L.Q_meas + L.Q_c);
  L.S_e = e.S_e;
  L.F_e = e.F_e;
  L.I_G_avg = e.I_G_avg;
  L.H_Y_given_X = e.H_Y_given_X_2;
  L.H_XY_given_E = e.H_XY_given_E_f;
  L.Gamma = e.D_h + e.D_c + e.I_Bh_Bc_f;
  L.Q_input = L.Q_h + L.Q_meas_Y;
  if (L.Q_input > 1e-12) L.eta = -L.W_tot / L.Q_input;
  L.eta_C = 1.0 - sc.T_c / sc.T_h;
  L.neg_log_efficacy_avg = e.neg_log_efficacy_avg;
  L.heat_engine_regime = L.Q_c <= 1e-12;
  L.H_S_norm = 0.0;
  L.d_RS = 4;
  return result;
}

double theorem2_gap(const CycleEntropies& e) {
  const double lhs = e.H_E_f - e.H_E_i;
  const double rhs = e.H_Y_given_X_2 - e.I_G_avg - e.H_XY_given_E_f;
  return std::abs(lhs - rhs);
}

ExtendedReal theorem3_gap(const CycleEntropies& e, const CycleLedger& L) {
  if (!L.Gamma.is_finite()) return ExtendedReal::inf();
  const double lhs = e.H_E_f - e.H_E_i;
  const double rhs = e.S_e - L.Q_h / L.T_h - L.Q_c / L.T_c - e.I_RS_B_f - L.Gamma.value;
  return ExtendedReal::finite(std::abs(lhs - rhs));
}

SecondLawReport second_law_slack(const CycleLedger& L, const CycleEntropies& e) {
  SecondLawReport r;
  r.slack = L.S_e + L.I_G_avg - L.H_Y_given_X + L.H_XY_given_E - L.Q_h / L.T_h - L.Q_c / L.T_c;
  r.predicted = L.Gamma + e.I_RS_B_f;
  r.consistent = r.predicted.is_finite() && std::abs(r.slack - r.predicted.value) <= 1e-8;
  return r;
}

FidelityReport fidelity_and_exchange(const StageSnapshots& s) {
  FidelityReport r;
  const DensityMatrix rs = s.final_state.reduced(kRS);
  r.F_e = std::clamp((s.context.psi_rs.adjoint() * rs.matrix() * s.context.psi_rs)(0, 0).real(), 0.0, 1.0);
  r.S_e = von_neumann(rs);
  r.fano_gap = fano_gap(r.F_e, 4, r.S_e);
  r.input_output_fidelity = uhlmann_fidelity(s.final_state.reduced({"S"}).matrix(), s.initial.reduced({"S"}).matrix());
  return r;
}

namespace {

bool assumption1(const CycleLedger& L) {
  if (L.H_S_norm == 0.0) return true;
  const double bound = L.Q_input / (2.0 * L.H_S_norm);
  return 1.0 - L.F_e <= kNegligibleRatio * bound * bound;
}

}  // namespace

EfficiencyReport efficiency_report(const CycleLedger& L) {
  EfficiencyReport r;
  r.Q_input = L.Q_h + L.Q_meas_Y;
  r.eta_C = 1.0 - L.T_c / L.T_h;
  if (r.Q_input <= 1e-12) throw DegenerateInput("Q_input <= 1e-12: efficiency undefined");
  r.eta = -L.W_tot / r.Q_input;
  r.assumption1_ok = assumption1(L);
  return r;
}

int AssumptionsReport::first_failure() const {
  if (!a1) return 1;
  if (!a2) return 2;
  if (!a3) return 3;
  if (!a4) return 4;
  return 0;
}

AssumptionsReport assumptions_report(const CycleEntropies& e, const CycleLedger& L) {
  AssumptionsReport r;
  r.a1 = assumption1(L);
  r.a1_delta_U = std::abs(L.delta_U_RSAY);
  r.a2_H_X_given_E = e.H_X_given_E_f;
  r.a2_H_Y_given_EX = e.H_Y_given_EX_f;
  r.a2_slack = e.H_Y_given_EX_f - e.H_X_given_E_f;
  r.a2 = e.H_X_given_E_f <= kNegligibleRatio * e.H_Y_given_EX_f + 1e-9;
  r.a3 = true;
  r.a4_slack = e.I_RSA_M_given_XY_2 + e.I_G_avg - (L.T_c / L.T_h) * e.H_Y_given_X_2;
  r.a4 = r.a4_slack >= -1e-9;
  return r;
}

TradeoffReport theorem4_and_tradeoff(const CycleLedger& L, const AssumptionsReport& a, bool strict) {
  TradeoffReport r;
  r.hypotheses_hold = a.all();
  r.violated_assumption = a.first_failure();
  if (strict && !r.hypotheses_hold) {
    throw HypothesisViolated("assumption " + std::to_string(r.violated_assumption) + " fails", r.violated_assumption);
  }
  r.efficiency_term = (-L.W_tot - L.eta_C * L.Q_input) / L.T_c;
  r.theorem4_gap = L.S_e - r.efficiency_term - L.neg_log_efficacy_avg;
  const double f = std::clamp(L.F_e, 0.0, 1.0);
  r.fano_tradeoff_gap = fano_gap(f, L.d_RS, 0.0) - r.efficiency_term - L.neg_log_efficacy_avg;
  const bool perfect = std::abs(1.0 - L.F_e) <= 1e-9;
  if (perfect) r.corollary4_slack = -(r.efficiency_term + L.neg_log_efficacy_avg);
  if (perfect && L.neg_log_efficacy_avg >= -1e-12 && L.eta.has_value() && *L.eta > L.eta_C + 1e-12) {
    r.corollary3_consistent = false;
  }
  return r;
}

double uhlmann_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  const ComplexMatrix sr = matrix_function(rho, [](double v) { return std::sqrt(std::max(0.0, v)); });
  const ComplexMatrix inner = sr * sigma * sr;
  const RealVector ev = hermitian_eigvals(0.5 * (inner + inner.adjoint()));
  double t = 0.0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) t += std::sqrt(std::max(0.0, ev[k]));
  return t * t;
}

}  // namespace qec
