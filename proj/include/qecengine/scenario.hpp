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

#ifndef QECENGINE_SCENARIO_HPP
#define QECENGINE_SCENARIO_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qecengine/engine.hpp"

namespace qec {

/// Scenario files are JSON objects whose keys mirror EngineScenario:
///
///   code, input, noise, apparatus, decoder          strings
///   a, b                                            [re, im] or a number
///   p, lambda, T_h, T_c, T_m, ancilla_gap,
///   ancilla_gap_ratio, apparatus_beta_omega         numbers
///   bath_degeneracy                                 positive integer
///
/// Missing keys keep their defaults. Unknown keys are rejected.

/// Throws ParseError (with line and column) or ValidationError.
EngineScenario parse_scenario(const std::string& text);
/// Reads and parses a file; throws QecError when it cannot be opened.
EngineScenario load_scenario(const std::string& path);
/// Every field, floats at 17 significant digits.
std::string scenario_to_json(const EngineScenario& s);
void write_scenario(const EngineScenario& s, const std::string& path);

using AxisValue = std::variant<double, std::string>;

/// Parameter paths are scenario keys, plus "T_c_over_T_h", which sets
/// T_c = value * T_h after the other assignments of the grid point.
struct SweepAxis {
  std::string parameter;
  std::vector<AxisValue> values;
};

struct SweepPoint {
  std::size_t index = 0;
  std::vector<std::pair<std::string, AxisValue>> assignments;
};

/// Cartesian grid over a base scenario. Points enumerate with the first
/// axis slowest.
struct SweepPlan {
  EngineScenario base;
  std::vector<SweepAxis> axes;
  std::size_t parallelism = 1;

  /// Throws ValidationError for an empty grid or an unknown parameter.
  void validate() const;
  std::size_t size() const;
  std::vector<SweepPoint> points() const;
  /// Base scenario with the point's assignments; throws ValidationError when
  /// the result is not a valid scenario.
  EngineScenario scenario_at(const SweepPoint& point) const;
};

/// Plan files: {"base": {...} or "base_file": "path", "axes": [{"parameter":
/// "p", "values": [...]}, ...], "parallelism": n}. "base_file" resolves
/// relative to the plan file. A plain scenario file is a 1-point plan.
SweepPlan parse_sweep_plan(const std::string& text, const std::string& base_dir = ".");
SweepPlan load_sweep_plan(const std::string& path);

bool is_axis_parameter(const std::string& name);

}  // namespace qec

#endif  // QECENGINE_SCENARIO_HPP
