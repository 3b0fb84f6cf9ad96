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

#include "qecengine/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "json.hpp"
#include "qecengine/errors.hpp"

namespace qec {

ReportValue ReportValue::number(double v) {
  if (std::isnan(v)) throw DomainError("report value is NaN");
  if (std::isinf(v)) {
    if (v < 0) throw DomainError("report value is -inf");
    return extended(ExtendedReal::inf());
  }
  ReportValue r;
  r.kind_ = Kind::kNumber;
  r.number_ = v;
  return r;
}

ReportValue ReportValue::integer(long long v) {
  ReportValue r;
  r.kind_ = Kind::kInteger;
  r.integer_ = v;
  return r;
}

ReportValue ReportValue::extended(const ExtendedReal& v) {
  if (!v.infinite) return number(v.value);
  ReportValue r;
  r.kind_ = Kind::kInf;
  return r;
}

ReportValue ReportValue::optional(const std::optional<double>& v) { return v ? number(*v) : null(); }

ReportValue ReportValue::boolean(bool v) {
  ReportValue r;
  r.kind_ = Kind::kBool;
  r.integer_ = v ? 1 : 0;
  return r;
}

ReportValue ReportValue::text(std::string v) {
  ReportValue r;
  r.kind_ = Kind::kString;
  r.text_ = std::move(v);
  return r;
}

ReportValue ReportValue::null() { return {}; }

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string ReportValue::json() const {
  switch (kind_) {
    case Kind::kNumber:
      return g17(number_);
    case Kind::kInteger:
      return std::to_string(integer_);
    case Kind::kInf:
      return "\"inf\"";
    case Kind::kNull:
      return "null";
    case Kind::kBool:
      return integer_ ? "true" : "false";
    case Kind::kString:
      return nlohmann::json(text_).dump();
  }
  return "null";
}

std::string ReportValue::csv() const {
  switch (kind_) {
    case Kind::kNumber:
      return g17(number_);
    case Kind::kInteger:
      return std::to_string(integer_);
    case Kind::kInf:
      return "inf";
    case Kind::kNull:
      return "";
    case Kind::kBool:
      return integer_ ? "true" : "false";
    case Kind::kString: {
      if (text_.find_first_of(",\"\n\r") == std::string::npos) return text_;
      std::string q = "\"";
      for (char c : text_) {
        if (c == '"') q += '"';
        q += c;
      }
      return q + "\"";
    }
  }
  return "";
}

void ReportRow::set(const std::string& name, ReportValue value) {
  for (auto& [n, v] : fields_) {
    if (n == name) {
      v = std::move(value);
      return;
    }
  }
  fields_.emplace_back(name, std::move(value));
}

const ReportValue* ReportRow::find(const std::string& name) const {
  for (const auto& [n, v] : fields_) {
    if (n == name) return &v;
  }
  return nullptr;
}

std::string ReportRow::to_jsonl() const {
  std::string o = "{";
  bool first = true;
  for (const auto& [n, v] : fields_) {
    if (!first) o += ",";
    first = false;
    o += nlohmann::json(n).dump() + ":" + v.json();
  }
  return o + "}";
}

std::string ReportRow::to_csv() const {
  std::string o;
  bool first = true;
  for (const auto& c : csv_columns()) {
    if (!first) o += ",";
    first = false;
    if (const ReportValue* v = find(c)) o += v->csv();
  }
  return o;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "index", "error", "violations", "violated",
      "code", "input", "a_re", "a_im", "b_re", "b_im", "noise", "p", "lambda", "T_h", "T_c", "T_m",
      "bath_degeneracy", "ancilla_gap", "ancilla_gap_ratio", "apparatus", "apparatus_beta_omega", "decoder",
      "Q_h", "Q_c", "Q_meas", "Q_meas_Y", "Q_meas_RSA_given_Y", "Q_meas_D", "Q_meas_entropic", "Q_Y_erase",
      "Q_tot", "Q_input", "W_enc", "W_meas", "W_dec", "W_tot", "delta_U_RSAY", "first_law_residual",
      "H_Y_given_X", "H_XY_given_E", "Gamma", "neg_log_efficacy_avg", "eta", "eta_C", "heat_engine_regime",
      "H_Y", "I_G_avg", "S_e", "F_e", "input_output_fidelity",
      "theorem2_gap", "theorem3_gap", "second_law_slack", "second_law_predicted", "fano_gap",
      "efficiency_term", "theorem4_gap", "tradeoff_gap", "corollary4_slack", "corollary3_consistent",
      "assumption1", "assumption2", "assumption3", "assumption4", "assumptions_hold",
  };
  return cols;
}

std::string csv_header() {
  std::string o;
  for (const auto& c : csv_columns()) o += (o.empty() ? "" : ",") + c;
  return o;
}

CycleChecks check_cycle(const CycleResult& r) {
  CycleChecks c;
  const CycleLedger& L = r.ledger;
  const CycleEntropies& e = r.entropies;
  c.theorem2_gap = theorem2_gap(e);
  c.theorem3_gap = theorem3_gap(e, L);
  c.second_law = second_law_slack(L, e);
  c.fidelity = fidelity_and_exchange(r.snapshots);
  c.assumptions = assumptions_report(e, L);
  c.tradeoff = theorem4_and_tradeoff(L, c.assumptions);

  auto fail = [&c](const char* name) { c.violated.emplace_back(name); };
  if (!(c.theorem2_gap <= kIdentityTol)) fail("theorem2");
  if (c.theorem3_gap.is_finite() && !(c.theorem3_gap.value <= kIdentityTol)) fail("theorem3");
  if (!(c.second_law.slack >= -kInequalityTol)) fail("second_law");
  if (!c.second_law.consistent) fail("second_law_identity");
  if (!(std::abs(L.first_law_residual) <= kIdentityTol)) fail("first_law");
  if (!(c.fidelity.fano_gap >= -kInequalityTol)) fail("fano");
  if (c.tradeoff.hypotheses_hold) {
    if (!(c.tradeoff.theorem4_gap >= -kInequalityTol)) fail("theorem4");
    if (!(c.tradeoff.fano_tradeoff_gap >= -kInequalityTol)) fail("tradeoff");
    if (c.tradeoff.corollary4_slack && !(*c.tradeoff.corollary4_slack >= -kInequalityTol)) fail("corollary4");
  }
  if (!c.tradeoff.corollary3_consistent) fail("corollary3");
  return c;
}

namespace {

void put_scenario(ReportRow& row, const EngineScenario& s) {
  using V = ReportValue;
  row.set("code", V::text(s.code));
  row.set("input", V::text(s.input));
  row.set("a_re", V::number(s.a.real()));
  row.set("a_im", V::number(s.a.imag()));
  row.set("b_re", V::number(s.b.real()));
  row.set("b_im", V::number(s.b.imag()));
  row.set("noise", V::text(s.noise));
  row.set("p", V::number(s.p));
  row.set("lambda", V::number(s.lambda));
  row.set("T_h", V::number(s.T_h));
  row.set("T_c", V::number(s.T_c));
  row.set("T_m", V::number(s.T_m));
  row.set("bath_degeneracy", V::integer(static_cast<long long>(s.bath_degeneracy)));
  row.set("ancilla_gap", V::number(s.ancilla_gap));
  row.set("ancilla_gap_ratio", V::number(s.ancilla_gap_ratio));
  row.set("apparatus", V::text(s.apparatus));
  row.set("apparatus_beta_omega", V::number(s.apparatus_beta_omega));
  row.set("decoder", V::text(s.decoder));
}

std::string join(const std::vector<std::string>& names) {
  std::string o;
  for (const auto& n : names) o += (o.empty() ? "" : ";") + n;
  return o;
}

}  // namespace

ReportRow make_row(const SweepPoint& point, const CycleResult& result) {
  using V = ReportValue;
  const CycleChecks c = check_cycle(result);
  const CycleLedger& L = result.ledger;
  const CycleEntropies& e = result.entropies;

  ReportRow row;
  row.set("index", V::integer(static_cast<long long>(point.index)));
  row.set("error", V::null());
  row.set("violations", V::integer(static_cast<long long>(c.violated.size())));
  row.set("violated", V::text(join(c.violated)));
  put_scenario(row, result.scenario);

  row.set("Q_h", V::number(L.Q_h));
  row.set("Q_c", V::number(L.Q_c));
  row.set("Q_meas", V::number(L.Q_meas));
  row.set("Q_meas_Y", V::number(L.Q_meas_Y));
  row.set("Q_meas_RSA_given_Y", V::number(L.Q_meas_RSA_given_Y));
  row.set("Q_meas_D", V::number(L.Q_meas_D));
  row.set("Q_meas_entropic", V::number(L.Q_meas_entropic));
  row.set("Q_Y_erase", V::number(L.Q_Y_erase));
  row.set("Q_tot", V::number(L.Q_tot));
  row.set("Q_input", V::number(L.Q_input));
  row.set("W_enc", V::number(L.W_enc));
  row.set("W_meas", V::number(L.W_meas));
  row.set("W_dec", V::number(L.W_dec));
  row.set("W_tot", V::number(L.W_tot));
  row.set("delta_U_RSAY", V::number(L.delta_U_RSAY));
  row.set("first_law_residual", V::number(L.first_law_residual));
  row.set("H_Y_given_X", V::number(L.H_Y_given_X));
  row.set("H_XY_given_E", V::number(L.H_XY_given_E));
  row.set("Gamma", V::extended(L.Gamma));
  row.set("neg_log_efficacy_avg", V::number(L.neg_log_efficacy_avg));
  row.set("eta", V::optional(L.eta));
  row.set("eta_C", V::number(L.eta_C));
  row.set("heat_engine_regime", V::boolean(L.heat_engine_regime));

  row.set("H_Y", V::number(e.H_Y_2));
  row.set("I_G_avg", V::number(L.I_G_avg));
  row.set("S_e", V::number(c.fidelity.S_e));
  row.set("F_e", V::number(c.fidelity.F_e));
  row.set("input_output_fidelity", V::number(c.fidelity.input_output_fidelity));

  row.set("theorem2_gap", V::number(c.theorem2_gap));
  row.set("theorem3_gap", V::extended(c.theorem3_gap));
  row.set("second_law_slack", V::number(c.second_law.slack));
  row.set("second_law_predicted", V::extended(c.second_law.predicted));
  row.set("fano_gap", V::number(c.fidelity.fano_gap));
  row.set("efficiency_term", V::number(c.tradeoff.efficiency_term));
  row.set("theorem4_gap", V::number(c.tradeoff.theorem4_gap));
  row.set("tradeoff_gap", V::number(c.tradeoff.fano_tradeoff_gap));
  row.set("corollary4_slack", V::optional(c.tradeoff.corollary4_slack));
  row.set("corollary3_consistent", V::boolean(c.tradeoff.corollary3_consistent));
  row.set("assumption1", V::boolean(c.assumptions.a1));
  row.set("assumption2", V::boolean(c.assumptions.a2));
  row.set("assumption3", V::boolean(c.assumptions.a3));
  row.set("assumption4", V::boolean(c.assumptions.a4));
  row.set("assumptions_hold", V::boolean(c.assumptions.all()));

  // JSON-lines only.
  static const char* kStages[] = {"i", "0", "enc", "1", "2", "3", "f"};
  for (std::size_t k = 0; k < e.H_EXY.size() && k < 7; ++k) {
    row.set(std::string("H_EXY_") + kStages[k], V::number(e.H_EXY[k]));
  }
  for (std::size_t x = 0; x < e.p_x.size(); ++x) {
    row.set("p_x" + std::to_string(x), V::number(e.p_x[x]));
    row.set("I_G_x" + std::to_string(x), V::number(e.I_G_x[x]));
  }
  row.set("H_E_i", V::number(e.H_E_i));
  row.set("H_E_f", V::number(e.H_E_f));
  row.set("I_RS_B_f", V::number(e.I_RS_B_f));
  row.set("I_Bh_Bc_f", V::number(e.I_Bh_Bc_f));
  row.set("D_h", V::extended(e.D_h));
  row.set("D_c", V::extended(e.D_c));
  row.set("D_M", V::extended(e.D_M));
  row.set("H_Y_given_XM", V::number(e.H_Y_given_XM_2));
  row.set("I_RSA_M_given_XY", V::number(e.I_RSA_M_given_XY_2));
  row.set("a2_slack", V::number(c.assumptions.a2_slack));
  row.set("a4_slack", V::number(c.assumptions.a4_slack));
  row.set("reset_deviation", V::number(e.reset_deviation));
  row.set("reference_deviation", V::number(e.reference_deviation));
  row.set("instrument_path_deviation", V::number(e.instrument_path_deviation));
  row.set("dilation_commutator", V::number(result.snapshots.context.dilation_commutator));
  return row;
}

ReportRow make_error_row(const SweepPoint& point, const std::string& error, const EngineScenario* scenario) {
  ReportRow row;
  row.set("index", ReportValue::integer(static_cast<long long>(point.index)));
  row.set("error", ReportValue::text(error));
  row.set("violations", ReportValue::integer(0));
  row.set("violated", ReportValue::text(""));
  if (scenario) put_scenario(row, *scenario);
  for (const auto& [name, value] : point.assignments) {
    if (const double* d = std::get_if<double>(&value)) {
      row.set("axis_" + name, ReportValue::number(*d));
    } else {
      row.set("axis_" + name, ReportValue::text(std::get<std::string>(value)));
    }
  }
  return row;
}

namespace {

ReportRow compute_row(const SweepPlan& plan, const SweepPoint& point) {
  std::optional<EngineScenario> scenario;
  try {
    scenario = plan.scenario_at(point);
    return make_row(point, run_cycle(*scenario));
  } catch (const std::exception& ex) {
    return make_error_row(point, ex.what(), scenario ? &*scenario : nullptr);
  }
}

}  // namespace

std::vector<ReportRow> compute_rows(const SweepPlan& plan, std::size_t parallelism) {
  const auto points = plan.points();
  std::vector<ReportRow> rows(points.size());
  const std::size_t threads = std::max<std::size_t>(1, std::min(parallelism ? parallelism : plan.parallelism, points.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) rows[i] = compute_row(plan, points[i]);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

SweepSummary write_report(const std::vector<ReportRow>& rows, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw QecError("cannot create '" + out_dir + "': " + ec.message());
  SweepSummary s;
  s.jsonl_path = (std::filesystem::path(out_dir) / "report.jsonl").string();
  s.csv_path = (std::filesystem::path(out_dir) / "report.csv").string();
  std::ofstream jl(s.jsonl_path, std::ios::binary);
  std::ofstream csv(s.csv_path, std::ios::binary);
  if (!jl || !csv) throw QecError("cannot write report files in '" + out_dir + "'");
  csv << csv_header() << "\n";
  for (const auto& row : rows) {
    jl << row.to_jsonl() << "\n";
    csv << row.to_csv() << "\n";
    ++s.rows;
    if (const ReportValue* v = row.find("violations")) s.violations += static_cast<std::size_t>(v->as_integer());
    if (const ReportValue* e = row.find("error"); e && e->kind() == ReportValue::Kind::kString) ++s.failed_rows;
  }
  jl.flush();
  csv.flush();
  if (!jl || !csv) throw QecError("write to report files in '" + out_dir + "' failed");
  return s;
}

SweepSummary run_sweep(const SweepPlan& plan, const std::string& out_dir, std::size_t parallelism) {
  return write_report(compute_rows(plan, parallelism), out_dir);
}

}  // namespace qec
