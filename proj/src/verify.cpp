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

#include "qecengine/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "json.hpp"
#include "qecengine/entropy.hpp"
#include "qecengine/measurement.hpp"
#include "qecengine/random.hpp"
#include "qecengine/report.hpp"
#include "qecengine/thermo_lab.hpp"

namespace qec {

namespace {

// Basis index r*8 + s*4 + a1*2 + a2; qubit bits q0 = S, q1 = A1, q2 = A2.
constexpr std::size_t kBits = 3;

std::size_t code_bits(std::size_t index) { return index & 7u; }

ComplexVector permute(const ComplexVector& v, const std::function<std::size_t(std::size_t)>& f) {
  ComplexVector out = ComplexVector::Zero(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(f(static_cast<std::size_t>(i)))] += v[i];
  return out;
}

/// CNOT from S onto both ancillas (its own inverse).
std::size_t fan_out(std::size_t i) {
  const std::size_t s = (i >> 2) & 1u;
  return i ^ (s ? 3u : 0u);
}

/// Qubit flipped by the majority-vote correction for a code basis state.
int correction_for(std::size_t bits) {
  const std::size_t q0 = (bits >> 2) & 1u;
  const std::size_t q1 = (bits >> 1) & 1u;
  const std::size_t q2 = bits & 1u;
  const std::size_t s1 = q0 ^ q1;
  const std::size_t s2 = q0 ^ q2;
  if (s1 && s2) return 0;
  if (s1) return 1;
  if (s2) return 2;
  return -1;
}

std::size_t syndrome_index(std::size_t bits) { return static_cast<std::size_t>(correction_for(bits) + 1); }

std::size_t flip_mask(int qubit) { return qubit < 0 ? 0u : (1u << (2 - qubit)); }

double pattern_probability(std::size_t e, double p) {
  double w = 1.0;
  for (std::size_t k = 0; k < kBits; ++k) w *= ((e >> k) & 1u) ? p : 1.0 - p;
  return w;
}

ComplexVector input_vector(cplx a, cplx b, bool maximally_mixed) {
  ComplexVector psi = ComplexVector::Zero(4);
  if (maximally_mixed) {
    psi[0] = psi[3] = 1.0 / std::sqrt(2.0);
  } else {
    psi[0] = a;
    psi[1] = b;
  }
  return psi;
}

}  // namespace

double brute_force_entanglement_fidelity(cplx a, cplx b, bool maximally_mixed, double p) {
  const ComplexVector psi = input_vector(a, b, maximally_mixed);
  ComplexVector v = ComplexVector::Zero(16);
  for (std::size_t rs = 0; rs < 4; ++rs) v[static_cast<Eigen::Index>(rs * 4)] = psi[static_cast<Eigen::Index>(rs)];
  const ComplexVector encoded = permute(v, fan_out);

  double f = 0.0;
  for (std::size_t e = 0; e < 8; ++e) {
    const ComplexVector err = permute(encoded, [e](std::size_t i) { return i ^ e; });
    std::size_t bits = 0;
    for (Eigen::Index i = 0; i < 16; ++i) {
      if (std::abs(err[i]) > 0) bits = code_bits(static_cast<std::size_t>(i));
    }
    const std::size_t mask = flip_mask(correction_for(bits));
    const ComplexVector fixed = permute(err, [mask](std::size_t i) { return i ^ mask; });
    const ComplexVector out = permute(fixed, fan_out);
    double branch = 0.0;
    for (std::size_t anc = 0; anc < 4; ++anc) {
      cplx overlap = 0.0;
      for (std::size_t rs = 0; rs < 4; ++rs) {
        overlap += std::conj(psi[static_cast<Eigen::Index>(rs)]) * out[static_cast<Eigen::Index>(rs * 4 + anc)];
      }
      branch += std::norm(overlap);
    }
    f += pattern_probability(e, p) * branch;
  }
  return f;
}

std::vector<double> brute_force_syndrome_distribution(double p) {
  std::vector<double> py(4, 0.0);
  for (std::size_t e = 0; e < 8; ++e) {
    // Codewords 000 and 111 share syndromes, so the pattern alone fixes y.
    py[syndrome_index(e)] += pattern_probability(e, p);
  }
  return py;
}

std::vector<EngineScenario> certification_grid() {
  std::vector<EngineScenario> out;
  for (double p : {0.0, 0.01, 0.05, 0.1, 0.25}) {
    for (double r : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      EngineScenario s;
      s.p = p;
      s.T_h = 10.0;
      s.T_c = r * s.T_h;
      out.push_back(s);
    }
  }
  return out;
}

std::vector<EngineScenario> amplitude_seed_scenarios(std::size_t n) {
  std::vector<EngineScenario> out;
  for (std::size_t seed = 1; seed <= n; ++seed) {
    Rng rng(seed);
    const double t = uniform(rng, 0.0, M_PI);
    const double f = uniform(rng, 0.0, 2.0 * M_PI);
    EngineScenario s;
    s.a = std::cos(t);
    s.b = std::polar(1.0, f) * std::sin(t);
    s.p = uniform(rng, 0.0, 0.3);
    s.T_h = 10.0;
    s.T_c = uniform(rng, 0.1, 0.9) * s.T_h;
    out.push_back(s);
  }
  return out;
}

bool VerifyResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::string VerifyResult::table() const {
  std::string o;
  char buf[512];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, "%-4s  %-30s  %-24.10g  %-12s  %s\n", c.passed ? "PASS" : "FAIL", c.label.c_str(),
                  c.value, c.rule.c_str(), c.description.c_str());
    o += buf;
    if (!c.detail.empty()) o += "      " + c.detail + "\n";
  }
  std::snprintf(buf, sizeof buf, "%zu checks, %zu failed, %zu engine cycles, %.1f s\n", checks.size(),
                static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(),
                                                       [](const VerifyCheck& c) { return !c.passed; })),
                cycles, seconds);
  return o + buf;
}

std::string VerifyResult::json() const {
  nlohmann::ordered_json j;
  j["passed"] = all_passed();
  j["seconds"] = seconds;
  j["cycles"] = cycles;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["label"] = c.label;
    e["passed"] = c.passed;
    e["value"] = std::isfinite(c.value) ? nlohmann::ordered_json(c.value) : nlohmann::ordered_json("inf");
    e["rule"] = c.rule;
    e["description"] = c.description;
    e["detail"] = c.detail;
    j["checks"].push_back(e);
  }
  return j.dump(2);
}

namespace {

std::string g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

class Battery {
 public:
  void at_most(const std::string& label, const std::string& description, double value, double tol,
               std::string detail = "") {
    add(label, description, value <= tol, value, "<= " + g(tol), std::move(detail));
  }
  void at_least(const std::string& label, const std::string& description, double value, double tol,
                std::string detail = "") {
    add(label, description, value >= tol, value, ">= " + g(tol), std::move(detail));
  }
  void flag(const std::string& label, const std::string& description, bool ok, double value, std::string detail = "") {
    add(label, description, ok, value, "true", std::move(detail));
  }
  std::vector<VerifyCheck> take() { return std::move(checks_); }

 private:
  void add(const std::string& label, const std::string& description, bool ok, double value, std::string rule,
           std::string detail) {
    checks_.push_back({label, description, ok && !std::isnan(value), value, std::move(rule), std::move(detail)});
  }
  std::vector<VerifyCheck> checks_;
};

/// Worst value and where it happened.
struct Worst {
  double value;
  std::string where;
  bool maximize;
  explicit Worst(bool max) : value(max ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity()), maximize(max) {}
  void see(double v, const std::string& w) {
    if (std::isnan(v) || (maximize ? v > value : v < value)) {
      value = v;
      where = w;
    }
  }
  double get() const { return std::isinf(value) ? 0.0 : value; }
};

std::string describe(const EngineScenario& s) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "code=%s input=%s decoder=%s p=%.4g T_c/T_h=%.4g", s.code.c_str(), s.input.c_str(),
                s.decoder.c_str(), s.p, s.T_c / s.T_h);
  return buf;
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyResult result;
  Battery b;

  auto cycle = [&](const EngineScenario& s) {
    CycleResult r = run_cycle(s);
    if (options.flip_qc_sign) r.ledger.Q_c = -r.ledger.Q_c;
    ++result.cycles;
    return r;
  };

  // Reference values.
  {
    EngineScenario s;
    const CycleResult r = cycle(s);
    b.at_most("reference_H_Y", "H(Y) at p = 0.01 reproduces 0.166 nats", std::abs(r.entropies.H_Y_2 - 0.166), 1e-3,
              "H(Y) = " + std::to_string(r.entropies.H_Y_2));
    b.at_most("syndrome_gain_equals_H_Y_given_X", "projective syndrome gain I_G = H(Y|X)",
              std::abs(r.entropies.I_G_avg - r.entropies.H_Y_given_X_2), 1e-9);
    const auto py = brute_force_syndrome_distribution(s.p);
    double h = 0.0;
    for (double q : py) h -= q > 0 ? q * std::log(q) : 0.0;
    b.at_most("syndrome_statistics", "H(Y) equals the entropy of the enumerated syndrome distribution",
              std::abs(r.entropies.H_Y_2 - h), 1e-9);
    double eff = 0.0;
    for (double e : r.entropies.efficacy_x) eff = std::max(eff, std::abs(e - 1.0));
    b.at_most("syndrome_efficacy", "efficacy of the projective syndrome instrument is 1", eff, 1e-10);

    const double e1 = s.ancilla_gap * s.T_c;
    const double e2 = e1 * s.ancilla_gap_ratio;
    const long double h_a = gibbs_entropy_extended({0.0, e2, e1, e1 + e2}, 1.0 / s.T_c);
    const double ratio = std::abs(std::log10(static_cast<double>(h_a)) + 42.0);
    b.at_most("ancilla_gibbs_entropy", "H(A) of the ancilla Gibbs state within a factor 10 of 1e-42", ratio, 1.0,
              "H(A) = " + std::to_string(static_cast<double>(h_a)) + " nats");
  }

  // Engine identity and inequality suite.
  {
    std::vector<EngineScenario> scenarios = certification_grid();
    if (options.reduced) scenarios = {scenarios.front(), scenarios.back()};
    for (const auto& s : amplitude_seed_scenarios(options.reduced ? 0 : options.amplitude_seeds)) {
      scenarios.push_back(s);
    }
    for (double p : options.reduced ? std::vector<double>{0.05} : std::vector<double>{0.01, 0.05, 0.1}) {
      EngineScenario s;
      s.input = "maximally_mixed";
      s.decoder = "correct_only";
      s.p = p;
      scenarios.push_back(s);
    }
    Worst t2(true), t3(true), clausius(false), identity(true), first_law(true), fano(false), t4(false), tradeoff(false),
        cor4(false), path(true);
    std::size_t cor3_bad = 0;
    std::size_t hyp = 0;
    std::size_t inf_gaps = 0;
    for (const auto& s : scenarios) {
      const CycleResult r = cycle(s);
      const CycleChecks c = check_cycle(r);
      const std::string w = describe(s);
      t2.see(c.theorem2_gap, w);
      if (c.theorem3_gap.is_finite()) {
        t3.see(c.theorem3_gap.value, w);
      } else {
        ++inf_gaps;
      }
      clausius.see(c.second_law.slack, w);
      identity.see(c.second_law.predicted.is_finite() ? std::abs(c.second_law.slack - c.second_law.predicted.value)
                                                      : std::numeric_limits<double>::infinity(),
                   w);
      first_law.see(std::abs(r.ledger.first_law_residual), w);
      fano.see(c.fidelity.fano_gap, w);
      path.see(r.entropies.instrument_path_deviation, w);
      if (c.tradeoff.hypotheses_hold) {
        ++hyp;
        t4.see(c.tradeoff.theorem4_gap, w);
        tradeoff.see(c.tradeoff.fano_tradeoff_gap, w);
        if (c.tradeoff.corollary4_slack) cor4.see(*c.tradeoff.corollary4_slack, w);
      }
      if (!c.tradeoff.corollary3_consistent) ++cor3_bad;
    }
    const std::string n = std::to_string(scenarios.size()) + " cycles";
    b.at_most("theorem2", "Theorem 2 entropy balance of the engine, max gap over " + n, t2.get(), 1e-8, t2.where);
    b.at_most("theorem3", "Theorem 3 heat-entropy balance, max gap over " + n, t3.get(), 1e-8, t3.where);
    b.at_most("theorem3_finite", "Theorem 3 gap finite (no infinite Gamma)", static_cast<double>(inf_gaps), 0.0);
    b.at_least("second_law", "Clausius inequality of the cycle, min slack", clausius.get(), -1e-9, clausius.where);
    b.at_most("second_law_identity", "second-law slack equals I(RS:BhBc) + Gamma", identity.get(), 1e-8,
              identity.where);
    b.at_most("first_law", "first law of the working fluid, max residual", first_law.get(), 1e-8, first_law.where);
    b.at_least("quantum_fano", "quantum Fano inequality, min slack", fano.get(), -1e-9, fano.where);
    b.at_most("instrument_paths", "dilated and Kraus syndrome stages agree", path.get(), 1e-9, path.where);
    b.flag("assumptions_present", "Assumptions 1-4 hold on at least one grid point", hyp > 0,
           static_cast<double>(hyp));
    b.at_least("theorem4", "Theorem 4 where Assumptions 1-4 hold, min slack", t4.get(), -1e-9, t4.where);
    b.at_least("triple_tradeoff", "fidelity-efficiency-efficacy trade-off, min slack", tradeoff.get(), -1e-9,
               tradeoff.where);
    b.at_least("corollary4", "Corollary 4 at F_e = 1, min slack", cor4.get(), -1e-9, cor4.where);
    b.at_most("corollary3", "no point with F_e = 1, -ln efficacy >= 0 and eta > eta_C",
              static_cast<double>(cor3_bad), 0.0);
  }

  // Fidelity oracle and the phase-flip code.
  {
    Worst closed(true), enumer(true), pure(true), phase(true);
    const std::vector<double> ps = options.reduced ? std::vector<double>{0.25} : std::vector<double>{0.0, 0.01, 0.05, 0.1, 0.25};
    for (double p : ps) {
      EngineScenario s;
      s.input = "maximally_mixed";
      s.p = p;
      const CycleResult bit = cycle(s);
      const double f = bit.entropies.F_e;
      const std::string w = "p=" + g(p);
      closed.see(std::abs(f - (1.0 - 3.0 * p * p + 2.0 * p * p * p)), w);
      enumer.see(std::abs(f - brute_force_entanglement_fidelity(0.0, 0.0, true, p)), w);

      EngineScenario ph = s;
      ph.code = "phaseflip";
      const CycleResult phr = cycle(ph);
      phase.see(std::max({std::abs(phr.entropies.F_e - f), std::abs(phr.entropies.H_Y_2 - bit.entropies.H_Y_2),
                          std::abs(phr.entropies.S_e - bit.entropies.S_e),
                          std::abs(phr.ledger.Q_meas - bit.ledger.Q_meas),
                          std::abs(phr.entropies.I_G_avg - bit.entropies.I_G_avg)}),
                w);
    }
    for (const auto& s : amplitude_seed_scenarios(options.reduced ? 1 : 3)) {
      const CycleResult r = cycle(s);
      pure.see(std::abs(r.entropies.F_e - brute_force_entanglement_fidelity(s.a, s.b, false, s.p)), describe(s));
    }
    b.at_most("fidelity_closed_form", "F_e = 1 - 3p^2 + 2p^3 for the Bell-purified input", closed.get(), 1e-9,
              closed.where);
    b.at_most("fidelity_enumeration", "F_e equals the 8-branch enumeration", enumer.get(), 1e-9, enumer.where);
    b.at_most("fidelity_pure_inputs", "F_e equals the enumeration on random pure inputs", pure.get(), 1e-9,
              pure.where);
    b.at_most("phaseflip_conjugation", "phase-flip code matches bit-flip under Hadamard conjugation", phase.get(),
              1e-10, phase.where);
  }

  // Measurement heat.
  {
    Rng rng(20260101);
    Worst gap_id(true), gap_min(false), energetic(true), fixed(true);
    for (int i = 0; i < 50; ++i) {
      const MeasurementInstance in = random_phase_coupled_instance(rng);
      const MeasurementHeatReport r = measurement_heat(in.model, in.rho);
      fixed.see(r.apparatus_deviation, "instance " + std::to_string(i));
      const double gap = theorem1_gap(r);
      gap_id.see(std::abs(gap - r.T_m * r.I_A_M_given_X), "instance " + std::to_string(i));
      gap_min.see(gap, "instance " + std::to_string(i));
    }
    for (int i = 0; i < 50; ++i) {
      const MeasurementInstance in = random_pointer_instance(rng);
      const MeasurementHeatReport r = measurement_heat(in.model, in.rho);
      energetic.see(std::abs(r.Q_meas - r.Q_meas_energetic), "pointer instance " + std::to_string(i));
    }
    b.at_most("theorem1_apparatus_fixed", "apparatus state unchanged on the Theorem 1 family", fixed.get(), 1e-8,
              fixed.where);
    b.at_most("theorem1_identity", "Theorem 1 gap equals T I(A:M|X) on 50 instances", gap_id.get(), 1e-8,
              gap_id.where);
    b.at_least("theorem1", "Theorem 1 gap nonnegative on 50 instances", gap_min.get(), -1e-9, gap_min.where);
    b.at_most("measurement_heat_energetic", "Reeb-Wolf and energetic measurement heat agree on 50 gapped pointers",
              energetic.get(), 1e-8, energetic.where);
  }

  // Two-system laboratory.
  {
    Rng rng(424242);
    Worst a1(false), balance(true), rw(true), landauer(false), ineq(false), thomson(false), first(true), total(true);
    for (int i = 0; i < 100; ++i) {
      const TwoSystemExperiment e = random_experiment(rng, false, i % 2 == 1);
      const std::string w = "experiment " + std::to_string(i);
      const EntropyBalanceReport eb = entropy_balance(e);
      a1.see(eb.delta_I_AB, w);
      total.see(std::abs(eb.total_entropy_residual), w);
      balance.see(eb.gap.is_finite() ? eb.gap.value : std::numeric_limits<double>::infinity(), w);
      const ReebWolfReport r = reeb_wolf(e);
      rw.see(r.gap, w);
      landauer.see(r.landauer_slack, w);
      const FirstLawReport f = first_law_report(e);
      first.see(std::abs(f.first_law_residual), w);
      ineq.see(f.inequality_slack.value_or(-1.0), w);
      thomson.see(f.thomson_slack.value_or(-1.0), w);
      const TwoSystemExperiment c = random_experiment(rng, true, false);
      const EntropyBalanceReport ec = entropy_balance(c);
      balance.see(ec.gap.is_finite() ? ec.gap.value : std::numeric_limits<double>::infinity(), w + " (correlated)");
    }
    b.at_least("appendix_entropy_production", "dH(A) + dH(B) = dI(A:B) >= 0 from a product start", a1.get(), -1e-9,
               a1.where);
    b.at_most("appendix_entropy_sum", "dH(A) + dH(B) - dI(A:B) vanishes", total.get(), 1e-9, total.where);
    b.at_most("appendix_entropy_balance", "bath entropy balance with the effective Hamiltonian", balance.get(), 1e-9,
              balance.where);
    b.at_most("appendix_reeb_wolf", "Reeb-Wolf equality", rw.get(), 1e-9, rw.where);
    b.at_least("appendix_landauer", "Landauer bound beta Q >= -dH(S)", landauer.get(), -1e-9, landauer.where);
    b.at_most("appendix_first_law", "Delta U^A = W + Q with the nonlocal internal energy", first.get(), 1e-9,
              first.where);
    b.at_least("appendix_first_law_inequality", "Delta U^A <= W + T dH(A)", ineq.get(), -1e-9, ineq.where);
    b.at_least("appendix_thomson", "Thomson bound W >= Delta F^A", thomson.get(), -1e-9, thomson.where);

    Worst idle(true);
    for (int i = 0; i < 10; ++i) {
      const TwoSystemExperiment e =
          idle_experiment(random_hermitian(2, rng), random_hermitian(2, rng), random_density_matrix(2, rng), 1.3);
      const FirstLawReport f = first_law_report(e);
      const ReebWolfReport r = reeb_wolf(e);
      idle.see(std::max({std::abs(*f.inequality_slack), std::abs(r.gap), std::abs(r.landauer_slack),
                         std::abs(f.W), std::abs(f.Q)}),
               "idle " + std::to_string(i));
    }
    b.at_most("appendix_equality_at_identity", "V = I saturates every appendix bound", idle.get(), 1e-12, idle.where);
  }

  result.checks = b.take();
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace qec
