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

#ifndef QECENGINE_VERIFY_HPP
#define QECENGINE_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qecengine/engine.hpp"

namespace qec {

struct VerifyCheck {
  /// Short machine name, e.g. "theorem3".
  std::string label;
  std::string description;
  bool passed = false;
  /// Worst observed value of the checked quantity.
  double value = 0.0;
  /// Human-readable acceptance rule, e.g. "<= 1e-08".
  std::string rule;
  std::string detail;
};

struct VerifyOptions {
  /// Test fixture: negates Q_c in every engine ledger before certification.
  bool flip_qc_sign = false;
  /// Random-amplitude seeds added to the (p, T_c/T_h) grid.
  std::size_t amplitude_seeds = 20;
  /// Corner grid points only, for fixtures that need a fast battery.
  bool reduced = false;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  double seconds = 0.0;
  std::size_t cycles = 0;

  bool all_passed() const;
  /// One PASS/FAIL line per check.
  std::string table() const;
  std::string json() const;
};

VerifyResult run_verify(const VerifyOptions& options = {});

/// p in {0, 0.01, 0.05, 0.1, 0.25} by T_c/T_h in {0.1, 0.25, 0.5, 0.75, 0.9}
/// with T_h = 10, pure input a = b = 1/sqrt(2). p is slowest.
std::vector<EngineScenario> certification_grid();

/// Pure inputs a = cos t, b = e^{i f} sin t from seeds 1..n, with p and
/// T_c/T_h also drawn per seed.
std::vector<EngineScenario> amplitude_seed_scenarios(std::size_t n);

/// Entanglement fidelity of the repetition code against independent bit
/// flips, from explicit enumeration of the 8 error patterns on the 16-level
/// vector R S A1 A2. `maximally_mixed` replaces the input by a Bell pair.
double brute_force_entanglement_fidelity(cplx a, cplx b, bool maximally_mixed, double p);

/// Syndrome distribution {P(y)} from the same enumeration.
std::vector<double> brute_force_syndrome_distribution(double p);

}  // namespace qec

#endif  // QECENGINE_VERIFY_HPP
