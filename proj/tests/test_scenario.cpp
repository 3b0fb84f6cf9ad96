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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qecengine/errors.hpp"
#include "qecengine/report.hpp"
#include "qecengine/scenario.hpp"

namespace qec {
namespace {

const std::string kScenarioDir = std::string(QEC_SOURCE_DIR) + "/scenarios";

std::string csv_of(const std::vector<ReportRow>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) out += r.to_csv() + "\n";
  return out;
}

TEST(Scenario, ShippedDefaultFileLoads) {
  const EngineScenario s = load_scenario(kScenarioDir + "/bitflip_p001.json");
  EXPECT_EQ(s.code, "bitflip");
  EXPECT_EQ(s.p, 0.01);
  EXPECT_EQ(s.a, cplx(M_SQRT1_2, 0.0));
  EXPECT_EQ(s.b, cplx(M_SQRT1_2, 0.0));
  EXPECT_EQ(s.ancilla_gap, 100.0);
  EXPECT_EQ(s, EngineScenario{});
}

TEST(Scenario, ShippedFilesAreValid) {
  EXPECT_NO_THROW(load_scenario(kScenarioDir + "/phaseflip_damping.json").validate());
  const SweepPlan grid = load_sweep_plan(kScenarioDir + "/grid_p_tratio.json");
  EXPECT_EQ(grid.size(), 25u);
  EXPECT_EQ(grid.parallelism, 4u);
}

TEST(Scenario, MalformedInputReportsPosition) {
  EXPECT_THROW(parse_scenario(""), ParseError);
  EXPECT_THROW(parse_scenario("[1, 2]"), ParseError);
  try {
    parse_scenario("{\n  \"p\": 0.1,\n  \"T_h\": ,\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 3u);
    EXPECT_GE(e.column, 9u);
  }
}

TEST(Scenario, UnknownAndInvalidFieldsAreRejected) {
  try {
    parse_scenario(R"({"p": 0.1, "temperature": 3})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field, "temperature");
  }
  try {
    parse_scenario(R"({"p": 0.7, "bath_degeneracy": 1})");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field, "p");
  }
  EXPECT_NO_THROW(parse_scenario(R"({"p": 0.7, "bath_degeneracy": 3})"));
  EXPECT_THROW(parse_scenario(R"({"p": "high"})"), ValidationError);
  EXPECT_THROW(parse_scenario(R"({"bath_degeneracy": 1.5})"), ValidationError);
  EXPECT_THROW(load_scenario(kScenarioDir + "/no_such_file.json"), QecError);
}

TEST(Scenario, ComplexAmplitudesParse) {
  const EngineScenario s = parse_scenario(R"({"a": [0.6, 0], "b": [0, 0.8]})");
  EXPECT_EQ(s.a, cplx(0.6, 0.0));
  EXPECT_EQ(s.b, cplx(0.0, 0.8));
  const EngineScenario r = parse_scenario(R"({"a": 1, "b": 0})");
  EXPECT_EQ(r.a, cplx(1.0, 0.0));
}

TEST(Scenario, JsonRoundTripIsExact) {
  EngineScenario s;
  s.code = "phaseflip";
  s.input = "maximally_mixed";
  s.noise = "phase_damping";
  s.lambda = 0.1234567890123456789;
  s.a = cplx(0.1, std::sqrt(0.99));
  s.b = 0.0;
  s.T_h = 7.0 / 3.0;
  s.T_c = 0.1;
  s.bath_degeneracy = 2;
  s.decoder = "correct_only";
  s.apparatus = "degenerate";
  EXPECT_EQ(parse_scenario(scenario_to_json(s)), s);
  const std::string path = (std::filesystem::temp_directory_path() / "qec_roundtrip.json").string();
  write_scenario(s, path);
  EXPECT_EQ(load_scenario(path), s);
  std::filesystem::remove(path);
}

TEST(Sweep, GridOrderIsFirstAxisSlowest) {
  SweepPlan plan;
  plan.axes = {{"p", {0.0, 0.01, 0.05}}, {"T_c_over_T_h", {0.1, 0.5}}};
  plan.validate();
  const auto pts = plan.points();
  ASSERT_EQ(pts.size(), 6u);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(pts[i].index, i);
  EXPECT_EQ(std::get<double>(pts[1].assignments[0].second), 0.0);
  EXPECT_EQ(std::get<double>(pts[1].assignments[1].second), 0.5);
  EXPECT_EQ(std::get<double>(pts[2].assignments[0].second), 0.01);
  const EngineScenario s = plan.scenario_at(pts[3]);
  EXPECT_EQ(s.p, 0.01);
  EXPECT_DOUBLE_EQ(s.T_c, 0.5 * s.T_h);
}

TEST(Sweep, RatioAxisUsesTheSweptHotTemperature) {
  SweepPlan plan;
  plan.axes = {{"T_c_over_T_h", {0.25}}, {"T_h", {4.0}}};
  const EngineScenario s = plan.scenario_at(plan.points()[0]);
  EXPECT_EQ(s.T_h, 4.0);
  EXPECT_EQ(s.T_c, 1.0);
}

TEST(Sweep, PlanValidation) {
  SweepPlan plan;
  plan.axes = {{"temperature", {1.0}}};
  EXPECT_THROW(plan.validate(), ValidationError);
  plan.axes = {{"p", {}}};
  EXPECT_THROW(plan.validate(), ValidationError);
  EXPECT_TRUE(is_axis_parameter("T_c_over_T_h"));
  EXPECT_TRUE(is_axis_parameter("decoder"));
  EXPECT_FALSE(is_axis_parameter("eta"));
  const SweepPlan single = parse_sweep_plan(R"({"p": 0.05})");
  EXPECT_EQ(single.size(), 1u);
  EXPECT_EQ(single.base.p, 0.05);
  const SweepPlan axes = parse_sweep_plan(R"({"base": {"p": 0.05}, "axes": [{"parameter": "decoder",
      "values": ["unencode", "correct_only"]}], "parallelism": 2})");
  EXPECT_EQ(axes.size(), 2u);
  EXPECT_EQ(std::get<std::string>(axes.points()[1].assignments[0].second), "correct_only");
  EXPECT_THROW(parse_sweep_plan(R"({"axes": [{"parameter": "p"}]})"), ValidationError);
}

TEST(Report, ValueFormatting) {
  EXPECT_EQ(ReportValue::number(0.1).csv(), "0.10000000000000001");
  EXPECT_EQ(ReportValue::extended(ExtendedReal::inf()).csv(), "inf");
  EXPECT_EQ(ReportValue::extended(ExtendedReal::inf()).json(), "\"inf\"");
  EXPECT_EQ(ReportValue::number(INFINITY).kind(), ReportValue::Kind::kInf);
  EXPECT_THROW(ReportValue::number(-INFINITY), DomainError);
  EXPECT_THROW(ReportValue::number(NAN), DomainError);
  EXPECT_EQ(ReportValue::optional(std::nullopt).json(), "null");
  EXPECT_EQ(ReportValue::optional(std::nullopt).csv(), "");
  EXPECT_EQ(ReportValue::boolean(true).csv(), "true");
  EXPECT_EQ(ReportValue::integer(42).json(), "42");
}

TEST(Report, RowsFollowTheFixedColumns) {
  ReportRow row;
  row.set("index", ReportValue::integer(3));
  row.set("eta", ReportValue::null());
  row.set("Gamma", ReportValue::extended(ExtendedReal::inf()));
  const std::string csv = row.to_csv();
  const auto& cols = csv_columns();
  std::vector<std::string> cells;
  std::stringstream ss(csv);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!csv.empty() && csv.back() == ',') cells.push_back("");
  ASSERT_EQ(cells.size(), cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == "index") EXPECT_EQ(cells[i], "3");
    if (cols[i] == "eta") EXPECT_EQ(cells[i], "");
    if (cols[i] == "Gamma") EXPECT_EQ(cells[i], "inf");
  }
  EXPECT_NE(row.to_jsonl().find("\"eta\":null"), std::string::npos);
  EXPECT_NE(row.to_jsonl().find("\"Gamma\":\"inf\""), std::string::npos);
}

TEST(Sweep, SinglePointPlanHasNoViolations) {
  const SweepPlan plan = parse_sweep_plan("{}");
  const auto rows = compute_rows(plan, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].find("violations")->as_integer(), 0);
  EXPECT_EQ(rows[0].find("eta")->kind(), ReportValue::Kind::kNull);
  EXPECT_NEAR(rows[0].find("H_Y")->as_number(), 0.1663265721, 1e-9);
}

TEST(Sweep, InfeasiblePointBecomesErrorRow) {
  SweepPlan plan;
  plan.axes = {{"p", {0.7}}};
  const auto rows = compute_rows(plan, 1);
  ASSERT_EQ(rows.size(), 1u);
  ASSERT_NE(rows[0].find("error"), nullptr);
  EXPECT_NE(rows[0].find("error")->as_text().find("p"), std::string::npos);
}

TEST(Sweep, ParallelRunIsByteIdentical) {
  SweepPlan plan;
  plan.axes = {{"p", {0.01, 0.1}}, {"T_c_over_T_h", {0.1, 0.5}}};
  const std::string serial = csv_of(compute_rows(plan, 1));
  const std::string parallel = csv_of(compute_rows(plan, 8));
  EXPECT_EQ(serial, parallel);

  const auto dir = std::filesystem::temp_directory_path() / "qec_sweep_test";
  std::filesystem::remove_all(dir);
  const SweepSummary summary = run_sweep(plan, dir.string(), 3);
  EXPECT_EQ(summary.rows, 4u);
  EXPECT_EQ(summary.failed_rows, 0u);
  std::ifstream in(summary.csv_path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), serial);
  std::ifstream jl(summary.jsonl_path);
  std::string line;
  std::size_t n = 0;
  while (std::getline(jl, line)) ++n;
  EXPECT_EQ(n, 4u);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace qec
