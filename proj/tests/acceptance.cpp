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

// Acceptance runner: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qecengine/codes.hpp"
#include "qecengine/engine.hpp"
#include "qecengine/measurement.hpp"
#include "qecengine/random.hpp"
#include "qecengine/report.hpp"
#include "qecengine/scenario.hpp"
#include "qecengine/thermo_lab.hpp"
#include "qecengine/verify.hpp"

namespace {

using namespace qec;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  int id;
  std::string name;
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Criterion syndrome_entropy_value() {
  Criterion c{1, "syndrome entropy and Groenewold gain at p = 0.01"};
  const auto t0 = Clock::now();
  const CycleResult r = run_cycle(EngineScenario{});
  const double t = seconds_since(t0);
  const double h = r.entropies.H_Y_2;
  c.require(std::abs(h - 0.166) <= 1e-3, "H(Y) = " + fmt("%.10f", h));
  c.require(std::abs(r.entropies.I_G_avg - r.entropies.H_Y_given_X_2) <= 1e-9, "I_G differs from H(Y|X)");
  c.require(t < 5.0, "runtime " + fmt("%.2f s", t));
  c.detail = c.detail.empty() ? "H(Y) = " + fmt("%.10f", h) + ", cycle " + fmt("%.2f s", t) : c.detail;
  return c;
}

Criterion ancilla_tail_entropy() {
  Criterion c{2, "ancilla Gibbs entropy at beta epsilon = 100"};
  const double beta = 1.0;
  const double e1 = 100.0;
  const double e2 = 1.01 * e1;
  const long double h = gibbs_entropy_extended({0.0, e2, e1, e1 + e2}, beta);
  // Two independent levels: sum of binary entropies of the excited populations.
  long double oracle = 0;
  for (double e : {e1, e2}) {
    const long double q = std::exp(-static_cast<long double>(e)) / (1 + std::exp(-static_cast<long double>(e)));
    oracle += -q * std::log(q) - (1 - q) * std::log1p(-q);
  }
  const double ratio = static_cast<double>(h) / 1e-42;
  c.require(ratio >= 0.1 && ratio <= 10.0, "H(A) = " + fmt("%.3e", static_cast<double>(h)));
  c.require(std::abs(static_cast<double>((h - oracle) / oracle)) <= 1e-12, "extended path disagrees with oracle");
  if (c.passed) c.detail = "H(A) = " + fmt("%.4e", static_cast<double>(h)) + " nats";
  return c;
}

struct GridRows {
  std::vector<ReportRow> serial;
  std::vector<ReportRow> parallel;
  double seconds = 0.0;
};

double number(const ReportRow& row, const char* name) {
  const ReportValue* v = row.find(name);
  if (v == nullptr || v->kind() == ReportValue::Kind::kNull) return std::nan("");
  if (v->kind() == ReportValue::Kind::kInf) return INFINITY;
  if (v->kind() == ReportValue::Kind::kInteger) return static_cast<double>(v->as_integer());
  return v->as_number();
}

bool flag(const ReportRow& row, const char* name) {
  const ReportValue* v = row.find(name);
  return v != nullptr && v->kind() == ReportValue::Kind::kBool && v->as_bool();
}

SweepPlan certification_plan() {
  SweepPlan plan;
  plan.base.T_h = 10.0;
  plan.axes = {{"p", {0.0, 0.01, 0.05, 0.1, 0.25}}, {"T_c_over_T_h", {0.1, 0.25, 0.5, 0.75, 0.9}}};
  plan.validate();
  return plan;
}

void check_identity_row(Criterion& c, const CycleResult& r, const std::string& where) {
  c.require(theorem2_gap(r.entropies) <= 1e-8, where + ": entropy-change identity");
  const ExtendedReal g3 = theorem3_gap(r.entropies, r.ledger);
  c.require(g3.is_finite() && g3.value <= 1e-8, where + ": heat-entropy identity");
  const SecondLawReport sl = second_law_slack(r.ledger, r.entropies);
  c.require(sl.slack >= -1e-9, where + ": second-law slack " + fmt("%.3e", sl.slack));
  c.require(sl.predicted.is_finite() && std::abs(sl.slack - sl.predicted.value) <= 1e-8,
            where + ": slack differs from I(RS:B) + Gamma");
}

Criterion identity_suite(const GridRows& grid) {
  Criterion c{3, "entropy identities on the 25-point grid and 20 amplitude seeds"};
  c.require(grid.serial.size() == 25, "grid has " + std::to_string(grid.serial.size()) + " rows");
  double worst2 = 0.0, worst3 = 0.0, min_slack = INFINITY, worst_pred = 0.0;
  for (const auto& row : grid.serial) {
    const std::string where = "grid row " + std::to_string(static_cast<long long>(number(row, "index")));
    c.require(row.find("error") == nullptr || row.find("error")->kind() == ReportValue::Kind::kNull,
              where + " failed");
    const double g2 = number(row, "theorem2_gap");
    const double g3 = number(row, "theorem3_gap");
    const double slack = number(row, "second_law_slack");
    const double pred = number(row, "second_law_predicted");
    c.require(g2 <= 1e-8, where + ": entropy-change identity");
    c.require(g3 <= 1e-8, where + ": heat-entropy identity");
    c.require(slack >= -1e-9, where + ": second-law slack");
    c.require(std::abs(slack - pred) <= 1e-8, where + ": slack differs from I(RS:B) + Gamma");
    worst2 = std::max(worst2, g2);
    worst3 = std::max(worst3, g3);
    min_slack = std::min(min_slack, slack);
    worst_pred = std::max(worst_pred, std::abs(slack - pred));
  }
  const auto seeds = amplitude_seed_scenarios(20);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const CycleResult r = run_cycle(seeds[i]);
    check_identity_row(c, r, "seed " + std::to_string(i + 1));
    worst2 = std::max(worst2, theorem2_gap(r.entropies));
    worst3 = std::max(worst3, theorem3_gap(r.entropies, r.ledger).value);
  }
  if (c.passed) {
    c.detail = "max gaps " + fmt("%.1e", worst2) + ", " + fmt("%.1e", worst3) + "; min slack " +
               fmt("%.3e", min_slack) + "; slack vs prediction " + fmt("%.1e", worst_pred);
  }
  return c;
}

Criterion fidelity_oracle() {
  Criterion c{4, "entanglement fidelity and phase-flip equivalence"};
  double worst = 0.0;
  for (double p : {0.0, 0.01, 0.05, 0.1, 0.25}) {
    EngineScenario s;
    s.input = "maximally_mixed";
    s.p = p;
    const double f = run_cycle(s).entropies.F_e;
    const double closed = 1.0 - 3 * p * p + 2 * p * p * p;
    const double brute = brute_force_entanglement_fidelity(0, 0, true, p);
    worst = std::max({worst, std::abs(f - closed), std::abs(f - brute)});
    c.require(std::abs(f - closed) <= 1e-9 && std::abs(f - brute) <= 1e-9, "F_e mismatch at p = " + fmt("%g", p));
  }
  const CodeSpec bit = bitflip_code();
  const CodeSpec phase = phaseflip_code();
  const ComplexMatrix h3 = tensor({gates::hadamard(), gates::hadamard(), gates::hadamard()});
  double op_dev = 0.0;
  for (std::size_t y = 0; y < 4; ++y) {
    op_dev = std::max(op_dev, max_deviation(phase.syndrome_projectors[y], h3 * bit.syndrome_projectors[y] * h3));
    op_dev = std::max(op_dev, max_deviation(phase.corrections[y], h3 * bit.corrections[y] * h3));
  }
  c.require(op_dev <= 1e-10, "code operators differ by " + fmt("%.1e", op_dev));
  double cycle_dev = 0.0;
  for (const char* input : {"maximally_mixed", "pure"}) {
    EngineScenario s;
    s.input = input;
    s.p = 0.05;
    const CycleResult rb = run_cycle(s);
    s.code = "phaseflip";
    const CycleResult rp = run_cycle(s);
    // For a = b the bit-flip input |+> maps to |0> in the conjugated frame;
    // the syndrome statistics and the maximally mixed fidelity are frame-free.
    cycle_dev = std::max(cycle_dev, std::abs(rb.entropies.H_Y_2 - rp.entropies.H_Y_2));
    cycle_dev = std::max(cycle_dev, std::abs(rb.entropies.I_G_avg - rp.entropies.I_G_avg));
    if (std::string(input) == "maximally_mixed") {
      cycle_dev = std::max(cycle_dev, std::abs(rb.entropies.F_e - rp.entropies.F_e));
    }
  }
  c.require(cycle_dev <= 1e-10, "phase-flip cycle differs by " + fmt("%.1e", cycle_dev));
  if (c.passed) {
    c.detail = "F_e max deviation " + fmt("%.1e", worst) + "; conjugation " + fmt("%.1e", std::max(op_dev, cycle_dev));
  }
  return c;
}

Criterion measurement_heat_suite() {
  Criterion c{5, "measurement heat decomposition on indirect models"};
  Rng rng(5150);
  double worst_id = 0.0, min_gap = INFINITY, worst_e = 0.0;
  for (int i = 0; i < 50; ++i) {
    const MeasurementInstance in = random_phase_coupled_instance(rng);
    const MeasurementHeatReport r = measurement_heat(in.model, in.rho);
    c.require(r.apparatus_fixed, "instance " + std::to_string(i) + " changes the apparatus");
    if (!r.apparatus_fixed) continue;
    const double gap = theorem1_gap(r);
    worst_id = std::max(worst_id, std::abs(gap - r.T_m * r.I_A_M_given_X));
    min_gap = std::min(min_gap, gap);
  }
  for (int i = 0; i < 50; ++i) {
    const MeasurementInstance in = random_pointer_instance(rng);
    const MeasurementHeatReport r = measurement_heat(in.model, in.rho);
    worst_e = std::max(worst_e, std::abs(r.Q_meas - r.Q_meas_energetic));
  }
  c.require(worst_id <= 1e-8, "gap vs T I(A:M|X) " + fmt("%.1e", worst_id));
  c.require(min_gap >= -1e-9, "min gap " + fmt("%.3e", min_gap));
  c.require(worst_e <= 1e-8, "energetic vs entropic " + fmt("%.1e", worst_e));
  if (c.passed) {
    c.detail = "identity " + fmt("%.1e", worst_id) + ", min gap " + fmt("%.2e", min_gap) + ", energetic " +
               fmt("%.1e", worst_e);
  }
  return c;
}

Criterion tradeoff_suite(const GridRows& grid) {
  Criterion c{6, "fidelity-efficiency-efficacy trade-off"};
  std::size_t with_hypotheses = 0;
  double min_slack = INFINITY;
  for (const auto& row : grid.serial) {
    const std::string where = "grid row " + std::to_string(static_cast<long long>(number(row, "index")));
    c.require(flag(row, "corollary3_consistent"), where + ": eta > eta_C with F_e = 1");
    if (!flag(row, "assumptions_hold")) continue;
    ++with_hypotheses;
    const double t4 = number(row, "theorem4_gap");
    const double tr = number(row, "tradeoff_gap");
    c.require(t4 >= -1e-9, where + ": theorem4 slack " + fmt("%.3e", t4));
    c.require(tr >= -1e-9, where + ": trade-off slack " + fmt("%.3e", tr));
    min_slack = std::min({min_slack, t4, tr});
  }
  Rng rng(66);
  double eff_dev = 0.0;
  for (const CodeSpec& code : {bitflip_code(), phaseflip_code()}) {
    const KrausChannel ch = code.syndrome_instrument().summed_channel();
    for (int i = 0; i < 5; ++i) {
      eff_dev = std::max(eff_dev, std::abs(efficacy(ch, random_density_matrix(8, rng)) - 1.0));
    }
  }
  c.require(eff_dev <= 1e-10, "syndrome efficacy deviates by " + fmt("%.1e", eff_dev));
  if (c.passed) {
    c.detail = std::to_string(with_hypotheses) + " grid points with all assumptions, min slack " +
               (with_hypotheses ? fmt("%.3e", min_slack) : std::string("n/a")) + "; efficacy " + fmt("%.1e", eff_dev);
  }
  return c;
}

Criterion appendix_suite() {
  Criterion c{7, "two-system entropy and energy relations"};
  Rng rng(7007);
  double worst_identity = 0.0, min_ineq = INFINITY;
  for (int i = 0; i < 100; ++i) {
    const TwoSystemExperiment e = random_experiment(rng, false, i % 2 == 1);
    const std::string w = "experiment " + std::to_string(i);
    const EntropyBalanceReport eb = entropy_balance(e);
    const ReebWolfReport rw = reeb_wolf(e);
    const FirstLawReport f = first_law_report(e);
    c.require(eb.delta_I_AB >= -1e-9, w + ": entropy production negative");
    c.require(eb.gap.is_finite() && eb.gap.value <= 1e-9, w + ": entropy balance");
    c.require(std::abs(eb.total_entropy_residual) <= 1e-9, w + ": entropy sum");
    c.require(rw.gap <= 1e-9, w + ": Reeb-Wolf equality");
    c.require(rw.landauer_slack >= -1e-9, w + ": Landauer bound");
    c.require(std::abs(f.first_law_residual) <= 1e-9, w + ": first law");
    c.require(f.inequality_slack.has_value() && *f.inequality_slack >= -1e-9, w + ": first-law inequality");
    c.require(f.thomson_slack.has_value() && *f.thomson_slack >= -1e-9, w + ": Thomson bound");
    worst_identity = std::max({worst_identity, eb.gap.is_finite() ? eb.gap.value : INFINITY, rw.gap,
                               std::abs(f.first_law_residual), std::abs(eb.total_entropy_residual)});
    min_ineq = std::min({min_ineq, eb.delta_I_AB, rw.landauer_slack, f.inequality_slack.value_or(-INFINITY),
                         f.thomson_slack.value_or(-INFINITY)});
  }
  double idle = 0.0;
  for (int i = 0; i < 10; ++i) {
    const TwoSystemExperiment e =
        idle_experiment(random_hermitian(2, rng), random_hermitian(2, rng), random_density_matrix(2, rng), 0.9);
    const EntropyBalanceReport eb = entropy_balance(e);
    const ReebWolfReport rw = reeb_wolf(e);
    const FirstLawReport f = first_law_report(e);
    idle = std::max({idle, std::abs(eb.delta_I_AB), std::abs(rw.landauer_slack), std::abs(*f.inequality_slack),
                     std::abs(*f.thomson_slack), std::abs(f.W), std::abs(f.Q)});
  }
  c.require(idle <= 1e-12, "V = I does not saturate: " + fmt("%.1e", idle));
  if (c.passed) {
    c.detail = "identities " + fmt("%.1e", worst_identity) + ", min inequality slack " + fmt("%.2e", min_ineq) +
               ", V = I " + fmt("%.1e", idle);
  }
  return c;
}

std::string csv_of(const std::vector<ReportRow>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) out += r.to_csv() + "\n";
  return out;
}

Criterion determinism_and_battery(const GridRows& grid) {
  Criterion c{8, "sweep determinism and full verification battery"};
  const bool same = csv_of(grid.serial) == csv_of(grid.parallel);
  c.require(same, "CSV differs between parallelism 1 and 8");
  const VerifyResult v = run_verify();
  c.require(v.all_passed(), "verification battery has failures");
  for (const auto& chk : v.checks) {
    if (!chk.passed) c.require(false, chk.label);
  }
  c.require(v.seconds < 120.0, "battery took " + fmt("%.1f s", v.seconds));
  if (c.passed) {
    c.detail = "CSV identical (" + std::to_string(grid.serial.size()) + " rows); " + std::to_string(v.checks.size()) +
               " checks in " + fmt("%.1f s", v.seconds);
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> out;
  auto report = [&](Criterion c) {
    std::printf("%s criterion %d: %s: %s\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
    std::fflush(stdout);
    out.push_back(std::move(c));
  };
  auto guarded = [&](int id, const char* name, auto&& fn) {
    try {
      report(fn());
    } catch (const std::exception& e) {
      report(Criterion{id, name, false, std::string("exception: ") + e.what()});
    }
  };

  guarded(1, "syndrome entropy", syndrome_entropy_value);
  guarded(2, "ancilla entropy", ancilla_tail_entropy);

  GridRows grid;
  try {
    const SweepPlan plan = certification_plan();
    const auto t0 = Clock::now();
    grid.serial = compute_rows(plan, 1);
    grid.parallel = compute_rows(plan, 8);
    grid.seconds = seconds_since(t0);
  } catch (const std::exception& e) {
    std::printf("grid evaluation failed: %s\n", e.what());
  }

  guarded(3, "identity suite", [&] { return identity_suite(grid); });
  guarded(4, "fidelity oracle", fidelity_oracle);
  guarded(5, "measurement heat", measurement_heat_suite);
  guarded(6, "trade-off suite", [&] { return tradeoff_suite(grid); });
  guarded(7, "two-system suite", appendix_suite);
  guarded(8, "determinism", [&] { return determinism_and_battery(grid); });

  const bool ok = std::all_of(out.begin(), out.end(), [](const Criterion& c) { return c.passed; });
  std::printf("%s: %zu of %zu criteria passed\n", ok ? "PASS" : "FAIL",
              static_cast<std::size_t>(std::count_if(out.begin(), out.end(), [](const Criterion& c) { return c.passed; })),
              out.size());
  return ok ? 0 : 1;
}
