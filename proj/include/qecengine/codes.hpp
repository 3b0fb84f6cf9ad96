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

#ifndef QECENGINE_CODES_HPP
#define QECENGINE_CODES_HPP

#include <string>
#include <vector>

#include "qecengine/channels.hpp"
#include "qecengine/linalg.hpp"

namespace qec {

enum class DecoderKind {
  /// C_y followed by U_enc,x^dagger; returns A to |x> and S to the input.
  kUnencode,
  /// C_y only; leaves SA in the codeword.
  kCorrectOnly,
};

DecoderKind parse_decoder(const std::string& name);
std::string to_string(DecoderKind kind);

/// Three-qubit repetition code on S, A1, A2 (in that order, 8 dimensions).
struct CodeSpec {
  std::string name;
  std::size_t ancillas = 2;
  CompositeSpace space;
  /// Single-qubit Pauli the code protects against.
  ComplexMatrix noise_pauli;
  /// U_enc,x for x = 2 a1 + a2, the ancilla energy-basis outcome.
  std::vector<ComplexMatrix> encoders;
  std::vector<ComplexMatrix> syndrome_projectors;
  /// C_y for each syndrome y.
  std::vector<ComplexMatrix> corrections;

  ComplexMatrix decoder(std::size_t x, std::size_t y, DecoderKind kind = DecoderKind::kUnencode) const;
  /// Projective instrument {Pi_y} on `space`.
  QuantumInstrument syndrome_instrument() const;
  /// Unitarity (1e-10), projector completeness and orthogonality.
  void validate() const;
};

CodeSpec bitflip_code();
/// Bit-flip code conjugated by H on every qubit.
CodeSpec phaseflip_code();
CodeSpec code_by_name(const std::string& name);

/// Kraus pair {|0><0| + sqrt(1-lambda)|1><1|, sqrt(lambda)|1><1|}. Throws OutOfRange.
KrausChannel phase_damping_channel(double lambda, const std::string& label = "S");
/// q = (1 - sqrt(1-lambda))/2, the Z probability of the equivalent phase flip.
double phase_damping_flip_prob(double lambda);
/// (1-p) rho + p P rho P on one qubit.
KrausChannel pauli_flip_channel(const ComplexMatrix& pauli, double p, const std::string& label = "S");

}  // namespace qec

#endif  // QECENGINE_CODES_HPP
