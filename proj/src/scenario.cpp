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

#include "qecengine/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "qecengine/errors.hpp"

namespace qec {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  // nlohmann reports the 1-based offset of the offending byte.
  const std::size_t end = std::min(text.size(), byte > 0 ? byte - 1 : 0);
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    if (pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line, column);
  }
}

double number(const std::string& key, const json& v) {
  if (!v.is_number()) throw ValidationError(key, "expected a number");
  return v.get<double>();
}

std::string string_value(const std::string& key, const json& v) {
  if (!v.is_string()) throw ValidationError(key, "expected a string");
  return v.get<std::string>();
}

cplx amplitude(const std::string& key, const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ValidationError(key, "expected [re, im] or a number");
}

using Setter = std::function<void(EngineScenario&, const std::string&, const json&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"code", [](EngineScenario& s, const std::string& k, const json& v) { s.code = string_value(k, v); }},
      {"input", [](EngineScenario& s, const std::string& k, const json& v) { s.input = string_value(k, v); }},
      {"a", [](EngineScenario& s, const std::string& k, const json& v) { s.a = amplitude(k, v); }},
      {"b", [](EngineScenario& s, const std::string& k, const json& v) { s.b = amplitude(k, v); }},
      {"noise", [](EngineScenario& s, const std::string& k, const json& v) { s.noise = string_value(k, v); }},
      {"p", [](EngineScenario& s, const std::string& k, const json& v) { s.p = number(k, v); }},
      {"lambda", [](EngineScenario& s, const std::string& k, const json& v) { s.lambda = number(k, v); }},
      {"T_h", [](EngineScenario& s, const std::string& k, const json& v) { s.T_h = number(k, v); }},
      {"T_c", [](EngineScenario& s, const std::string& k, const json& v) { s.T_c = number(k, v); }},
      {"T_m", [](EngineScenario& s, const std::string& k, const json& v) { s.T_m = number(k, v); }},
      {"bath_degeneracy",
       [](EngineScenario& s, const std::string& k, const json& v) {
         const double g = number(k, v);
         if (!(g >= 1.0) || g != std::floor(g) || g > 1e6) throw ValidationError(k, "expected a positive integer");
         s.bath_degeneracy = static_cast<std::size_t>(g);
       }},
      {"ancilla_gap", [](EngineScenario& s, const std::string& k, const json& v) { s.ancilla_gap = number(k, v); }},
      {"ancilla_gap_ratio",
       [](EngineScenario& s, const std::string& k, const json& v) { s.ancilla_gap_ratio = number(k, v); }},
      {"apparatus", [](EngineScenario& s, const std::string& k, const json& v) { s.apparatus = string_value(k, v); }},
      {"apparatus_beta_omega",
       [](EngineScenario& s, const std::string& k, const json& v) { s.apparatus_beta_omega = number(k, v); }},
      {"decoder", [](EngineScenario& s, const std::string& k, const json& v) { s.decoder = string_value(k, v); }},
  };
  return table;
}

constexpr const char* kRatioAxis = "T_c_over_T_h";

EngineScenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("<root>", "scenario must be a JSON object");
  EngineScenario s;
  const auto& table = setters();
  for (const auto& [key, value] : j.items()) {
    const auto it = table.find(key);
    if (it == table.end()) throw ValidationError(key, "unknown key");
    it->second(s, key, value);
  }
  s.validate();
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw QecError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

json axis_json(const AxisValue& v) {
  if (const double* d = std::get_if<double>(&v)) return *d;
  return std::get<std::string>(v);
}

}  // namespace

EngineScenario parse_scenario(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("scenario must be a JSON object", 1, 1);
  return scenario_from_json(j);
}

EngineScenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

std::string scenario_to_json(const EngineScenario& s) {
  std::string o = "{\n";
  auto field = [&o](const std::string& key, const std::string& value, bool last = false) {
    o += "  \"" + key + "\": " + value + (last ? "\n" : ",\n");
  };
  auto amp = [](cplx z) { return "[" + g17(z.real()) + ", " + g17(z.imag()) + "]"; };
  field("code", quoted(s.code));
  field("input", quoted(s.input));
  field("a", amp(s.a));
  field("b", amp(s.b));
  field("noise", quoted(s.noise));
  field("p", g17(s.p));
  field("lambda", g17(s.lambda));
  field("T_h", g17(s.T_h));
  field("T_c", g17(s.T_c));
  field("T_m", g17(s.T_m));
  field("bath_degeneracy", std::to_string(s.bath_degeneracy));
  field("ancilla_gap", g17(s.ancilla_gap));
  field("ancilla_gap_ratio", g17(s.ancilla_gap_ratio));
  field("apparatus", quoted(s.apparatus));
  field("apparatus_beta_omega", g17(s.apparatus_beta_omega));
  field("decoder", quoted(s.decoder), true);
  return o + "}\n";
}

void write_scenario(const EngineScenario& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw QecError("cannot write '" + path + "'");
  out << scenario_to_json(s);
  if (!out) throw QecError("write to '" + path + "' failed");
}

bool is_axis_parameter(const std::string& name) { return name == kRatioAxis || setters().count(name) > 0; }

void SweepPlan::validate() const {
  for (const auto& axis : axes) {
    if (!is_axis_parameter(axis.parameter)) throw ValidationError(axis.parameter, "unknown sweep parameter");
    if (axis.values.empty()) throw ValidationError(axis.parameter, "grid must not be empty");
    if (axis.parameter == kRatioAxis) {
      for (const auto& v : axis.values) {
        if (!std::holds_alternative<double>(v)) throw ValidationError(axis.parameter, "expected numbers");
      }
    }
  }
  if (parallelism == 0) throw ValidationError("parallelism", "must be at least 1");
}

std::size_t SweepPlan::size() const {
  std::size_t n = 1;
  for (const auto& axis : axes) n *= axis.values.size();
  return n;
}

std::vector<SweepPoint> SweepPlan::points() const {
  validate();
  const std::size_t n = size();
  std::vector<SweepPoint> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].index = i;
    std::size_t rem = i;
    std::size_t stride = n;
    for (const auto& axis : axes) {
      stride /= axis.values.size();
      out[i].assignments.emplace_back(axis.parameter, axis.values[rem / stride]);
      rem %= stride;
    }
  }
  return out;
}

EngineScenario SweepPlan::scenario_at(const SweepPoint& point) const {
  EngineScenario s = base;
  std::optional<double> ratio;
  for (const auto& [name, value] : point.assignments) {
    if (name == kRatioAxis) {
      ratio = std::get<double>(value);
      continue;
    }
    const auto it = setters().find(name);
    if (it == setters().end()) throw ValidationError(name, "unknown sweep parameter");
    it->second(s, name, axis_json(value));
  }
  if (ratio) s.T_c = *ratio * s.T_h;
  s.validate();
  return s;
}

SweepPlan parse_sweep_plan(const std::string& text, const std::string& base_dir) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("plan must be a JSON object", 1, 1);
  SweepPlan plan;
  if (!j.contains("axes") && !j.contains("base") && !j.contains("base_file")) {
    plan.base = scenario_from_json(j);
    return plan;
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "base") {
      plan.base = scenario_from_json(value);
    } else if (key == "base_file") {
      const std::filesystem::path p = std::filesystem::path(base_dir) / string_value(key, value);
      plan.base = load_scenario(p.string());
    } else if (key == "parallelism") {
      const double n = number(key, value);
      if (!(n >= 1.0) || n != std::floor(n) || n > 4096) throw ValidationError(key, "expected a positive integer");
      plan.parallelism = static_cast<std::size_t>(n);
    } else if (key == "axes") {
      if (!value.is_array()) throw ValidationError(key, "expected an array");
      for (const auto& a : value) {
        if (!a.is_object()) throw ValidationError(key, "each axis must be an object");
        SweepAxis axis;
        for (const auto& [ak, av] : a.items()) {
          if (ak == "parameter") {
            axis.parameter = string_value("axes.parameter", av);
          } else if (ak == "values") {
            if (!av.is_array()) throw ValidationError("axes.values", "expected an array");
            for (const auto& v : av) {
              if (v.is_number()) {
                axis.values.emplace_back(v.get<double>());
              } else if (v.is_string()) {
                axis.values.emplace_back(v.get<std::string>());
              } else {
                throw ValidationError("axes.values", "expected numbers or strings");
              }
            }
          } else {
            throw ValidationError("axes." + ak, "unknown key");
          }
        }
        plan.axes.push_back(std::move(axis));
      }
    } else {
      throw ValidationError(key, "unknown key");
    }
  }
  plan.validate();
  return plan;
}

SweepPlan load_sweep_plan(const std::string& path) {
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_sweep_plan(read_file(path), dir.empty() ? "." : dir.string());
}

}  // namespace qec
