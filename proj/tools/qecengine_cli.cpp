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

// Command-line driver: run, sweep, verify, describe.
//
// Exit status: 0 success, 1 a certification check failed, 2 usage or input
// error.

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qecengine/channels.hpp"
#include "qecengine/errors.hpp"
#include "qecengine/report.hpp"
#include "qecengine/scenario.hpp"
#include "qecengine/verify.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void print_row(const qec::ReportRow& row) {
  for (const auto& [name, value] : row.fields()) std::printf("%-28s %s\n", name.c_str(), value.csv().c_str());
}

int cmd_run(const std::string& path, const std::string& out, bool json) {
  const qec::SweepPlan plan = qec::load_sweep_plan(path);
  if (plan.size() != 1) {
    std::fprintf(stderr, "run expects a single scenario; use sweep for grids\n");
    return kExitUsage;
  }
  const auto rows = qec::compute_rows(plan, 1);
  const qec::ReportRow& row = rows.front();
  if (json) {
    std::printf("%s\n", row.to_jsonl().c_str());
  } else {
    print_row(row);
  }
  if (!out.empty()) qec::write_report(rows, out);
  const auto* err = row.find("error");
  if (err && err->kind() == qec::ReportValue::Kind::kString) {
    std::fprintf(stderr, "cycle failed: %s\n", err->as_text().c_str());
    return kExitUsage;
  }
  return row.find("violations")->as_integer() == 0 ? 0 : kExitCheckFailed;
}

int cmd_sweep(const std::string& path, const std::string& out, std::size_t parallel, bool json) {
  const qec::SweepPlan plan = qec::load_sweep_plan(path);
  const qec::SweepSummary s = qec::run_sweep(plan, out, parallel);
  if (json) {
    std::printf("{\"rows\":%zu,\"violations\":%zu,\"failed_rows\":%zu,\"jsonl\":\"%s\",\"csv\":\"%s\"}\n", s.rows,
                s.violations, s.failed_rows, s.jsonl_path.c_str(), s.csv_path.c_str());
  } else {
    std::printf("rows %zu, violations %zu, failed rows %zu\n%s\n%s\n", s.rows, s.violations, s.failed_rows,
                s.jsonl_path.c_str(), s.csv_path.c_str());
  }
  return s.violations == 0 ? 0 : kExitCheckFailed;
}

int cmd_verify(bool json) {
  const qec::VerifyResult r = qec::run_verify();
  std::printf("%s", json ? (r.json() + "\n").c_str() : r.table().c_str());
  return r.all_passed() ? 0 : kExitCheckFailed;
}

int cmd_describe(const std::string& path, bool json) {
  const qec::EngineScenario s = qec::load_scenario(path);
  const double flip = s.flip_probability();
  const double eps1 = s.ancilla_gap * s.T_c;
  const double eps2 = eps1 * s.ancilla_gap_ratio;
  std::string bath_gap = "inf";
  if (flip > 0.0) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", qec::thermal_operation_bitflip(flip, s.T_h, s.bath_degeneracy).gap);
    bath_gap = buf;
  }
  const double eta_c = 1.0 - s.T_c / s.T_h;
  if (json) {
    std::printf("{\"scenario\":%s,\"flip_probability\":%.17g,\"hot_bath_gap\":\"%s\",\"ancilla_energies\":[0,%.17g,%.17g,%.17g],"
                "\"eta_C\":%.17g}\n",
                qec::scenario_to_json(s).c_str(), flip, bath_gap.c_str(), eps2, eps1, eps1 + eps2, eta_c);
  } else {
    std::printf("%s", qec::scenario_to_json(s).c_str());
    std::printf("flip probability     %.17g\n", flip);
    std::printf("hot bath gap         %s\n", bath_gap.c_str());
    std::printf("ancilla energies     0 %.17g %.17g %.17g\n", eps2, eps1, eps1 + eps2);
    std::printf("Carnot efficiency    %.17g\n", eta_c);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermodynamic quantum error correction engine"};
  app.require_subcommand(1);

  std::string run_path;
  std::string out;
  std::size_t parallel = 0;
  bool json = false;

  CLI::App* run = app.add_subcommand("run", "Run one engine cycle and certify it");
  run->add_option("scenario", run_path, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out, "Directory for report.jsonl and report.csv");
  run->add_flag("--json", json, "Print the report row as JSON");

  std::string sweep_path;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a sweep plan and write JSON-lines and CSV reports");
  sweep->add_option("plan", sweep_path, "Sweep plan or scenario JSON file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", out, "Output directory")->required();
  sweep->add_option("--parallel", parallel, "Worker threads (default: the plan's hint)")->check(CLI::PositiveNumber);
  sweep->add_flag("--json", json, "Print the summary as JSON");

  CLI::App* verify = app.add_subcommand("verify", "Run the certification battery");
  verify->add_flag("--json", json, "Machine-readable results");

  std::string describe_path;
  CLI::App* describe = app.add_subcommand("describe", "Validate a scenario and print derived parameters");
  describe->add_option("scenario", describe_path, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  describe->add_flag("--json", json, "Print as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(run_path, out, json);
    if (*sweep) return cmd_sweep(sweep_path, out, parallel, json);
    if (*verify) return cmd_verify(json);
    if (*describe) return cmd_describe(describe_path, json);
  } catch (const qec::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitUsage;
  } catch (const qec::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
