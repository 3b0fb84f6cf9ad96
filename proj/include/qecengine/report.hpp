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

#ifndef QECENGINE_REPORT_HPP
#define QECENGINE_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qecengine/engine.hpp"
#include "qecengine/scenario.hpp"

namespace qec {

/// Cell of a report row. Numbers print with 17 significant digits; the +inf
/// sentinel prints as "inf"; an absent value is JSON null and an empty CSV cell.
class ReportValue {
 public:
  enum class Kind { kNumber, kInteger, kInf, kNull, kBool, kString };

  static ReportValue number(double v);
  static ReportValue integer(long long v);
  static ReportValue extended(const ExtendedReal& v);
  static ReportValue optional(const std::optional<double>& v);
  static ReportValue boolean(bool v);
  static ReportValue text(std::string v);
  static ReportValue null();

  Kind kind() const { return kind_; }
  double as_number() const { return number_; }
  long long as_integer() const { return integer_; }
  bool as_bool() const { return integer_ != 0; }
  const std::string& as_text() const { return text_; }

  std::string json() const;
  std::string csv() const;

 private:
  Kind kind_ = Kind::kNull;
  double number_ = 0.0;
  long long integer_ = 0;
  std::string text_;
};

/// Ordered (name, value) fields of one grid point.
class ReportRow {
 public:
  void set(const std::string& name, ReportValue value);
  /// nullptr when absent.
  const ReportValue* find(const std::string& name) const;
  const std::vector<std::pair<std::string, ReportValue>>& fields() const { return fields_; }

  /// One JSON object without a trailing newline.
  std::string to_jsonl() const;
  /// Cells of csv_columns() in order, absent fields empty.
  std::string to_csv() const;

 private:
  std::vector<std::pair<std::string, ReportValue>> fields_;
};

/// Fixed CSV columns. JSON-lines rows carry these plus per-stage diagnostics.
///
/// index, error, violations, violated: bookkeeping ("violated" joins check
///   names with ';').
/// code ... decoder: the scenario (a and b split into _re/_im).
/// Q_h ... eta_C: CycleLedger. H_Y, I_G_avg, S_e, F_e, input_output_fidelity:
///   information terms.
/// theorem2_gap, theorem3_gap, second_law_slack, second_law_predicted,
///   fano_gap, efficiency_term, theorem4_gap, tradeoff_gap, corollary4_slack,
///   corollary3_consistent: certification.
/// assumption1 ... assumption4, assumptions_hold: flags.
const std::vector<std::string>& csv_columns();
std::string csv_header();

/// Tolerances applied to every cycle.
inline constexpr double kIdentityTol = 1e-8;
inline constexpr double kInequalityTol = 1e-9;

struct CycleChecks {
  double theorem2_gap = 0.0;
  ExtendedReal theorem3_gap;
  SecondLawReport second_law;
  FidelityReport fidelity;
  AssumptionsReport assumptions;
  TradeoffReport tradeoff;
  /// Names of failed identities and inequalities.
  std::vector<std::string> violated;
};

/// Evaluates every identity and inequality on one cycle. The trade-off
/// inequalities count as violated only where Assumptions 1-4 hold.
CycleChecks check_cycle(const CycleResult& result);

ReportRow make_row(const SweepPoint& point, const CycleResult& result);
/// Row for a grid point whose scenario or cycle failed.
ReportRow make_error_row(const SweepPoint& point, const std::string& error, const EngineScenario* scenario);

/// One row per grid point in grid order, computed on up to `parallelism`
/// threads (0 uses the plan's hint).
std::vector<ReportRow> compute_rows(const SweepPlan& plan, std::size_t parallelism = 0);

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t violations = 0;
  std::size_t failed_rows = 0;
  std::string jsonl_path;
  std::string csv_path;
};

/// Writes `<out_dir>/report.jsonl` and `<out_dir>/report.csv`, creating the
/// directory. Throws QecError on IO failure.
SweepSummary write_report(const std::vector<ReportRow>& rows, const std::string& out_dir);
SweepSummary run_sweep(const SweepPlan& plan, const std::string& out_dir, std::size_t parallelism = 0);

}  // namespace qec

#endif  // QECENGINE_REPORT_HPP
