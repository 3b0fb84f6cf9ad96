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

#include "qecengine/codes.hpp"

#include <cmath>

#include "qecengine/errors.hpp"

namespace qec {

DecoderKind parse_decoder(const std::string& name) {
  if (name == "unencode") return DecoderKind::kUnencode;
  if (name == "correct_only") return DecoderKind::kCorrectOnly;
  throw DomainError("unknown decoder '" + name + "'");
}

std::string to_string(DecoderKind kind) { return kind == DecoderKind::kUnencode ? "unencode" : "correct_only"; }

ComplexMatrix CodeSpec::decoder(std::size_t x, std::size_t y, DecoderKind kind) const {
  const ComplexMatrix& c = corrections.at(y);
  if (kind == DecoderKind::kCorrectOnly) return c;
  return encoders.at(x).adjoint() * c;
}

QuantumInstrument CodeSpec::syndrome_instrument() const {
  return QuantumInstrument::from_operators(space, syndrome_projectors);
}

void CodeSpec::validate() const {
  for (const auto& u : encoders) {
    if (!is_unitary(u)) throw InvalidChannel(name + ": encoder is not unitary");
  }
  for (const auto& c : corrections) {
    if (!is_unitary(c)) throw InvalidChannel(name + ": correction is not unitary");
  }
  ComplexMatrix total = ComplexMatrix::Zero(space.dim(), space.dim());
  for (std::size_t y = 0; y < syndrome_projectors.size(); ++y) {
    const ComplexMatrix& p = syndrome_projectors[y];
    if (max_deviation(p * p, p) > 1e-10 || max_asymmetry(p) > 1e-10) throw NotProjective(name + ": syndrome operator");
    for (std::size_t z = y + 1; z < syndrome_projectors.size(); ++z) {
      if (max_abs(p * syndrome_projectors[z]) > 1e-10) throw NotProjective(name + ": syndromes overlap");
    }
    total += p;
  }
  if (max_deviation(total, identity(space.dim())) > 1e-10) throw NotProjective(name + ": syndromes incomplete");
}

namespace {

ComplexMatrix basis_pair(std::size_t a, std::size_t b) {
  return gates::basis_projector(8, a) + gates::basis_projector(8, b);
}

}  // namespace

CodeSpec bitflip_code() {
  CodeSpec code;
  code.name = "bitflip";
  code.space = CompositeSpace::qubits({"S", "A1", "A2"});
  code.noise_pauli = gates::pauli_x();
  const ComplexMatrix i2 = identity(2);
  const ComplexMatrix x = gates::pauli_x();
  const ComplexMatrix cnots = gates::cnot(code.space, "S", "A2") * gates::cnot(code.space, "S", "A1");
  for (std::size_t outcome = 0; outcome < 4; ++outcome) {
    const ComplexMatrix& r1 = (outcome & 2) ? x : i2;
    const ComplexMatrix& r2 = (outcome & 1) ? x : i2;
    code.encoders.push_back(cnots * tensor({i2, r1, r2}));
  }
  // Basis index s*4 + a1*2 + a2.
  code.syndrome_projectors = {basis_pair(0b000, 0b111), basis_pair(0b100, 0b011), basis_pair(0b010, 0b101),
                              basis_pair(0b001, 0b110)};
  code.corrections = {identity(8), tensor({x, i2, i2}), tensor({i2, x, i2}), tensor({i2, i2, x})};
  code.validate();
  return code;
}

CodeSpec phaseflip_code() {
  CodeSpec code = bitflip_code();
  code.name = "phaseflip";
  code.noise_pauli = gates::pauli_z();
  const ComplexMatrix h3 = tensor({gates::hadamard(), gates::hadamard(), gates::hadamard()});
  // The ancilla pre-rotation acts before the basis change, so the encoded
  // state is H^3 (a|000> + b|111>) = a|+++> + b|--->.
  for (auto& u : code.encoders) u = h3 * u;
  for (auto& p : code.syndrome_projectors) p = h3 * p * h3;
  for (auto& c : code.corrections) c = h3 * c * h3;
  code.validate();
  return code;
}

CodeSpec code_by_name(const std::string& name) {
  if (name == "bitflip") return bitflip_code();
  if (name == "phaseflip") return phaseflip_code();
  throw DomainError("unknown code '" + name + "'");
}

KrausChannel phase_damping_channel(double lambda, const std::string& label) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw OutOfRange("phase damping strength outside [0, 1]");
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - lambda);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k1(1, 1) = std::sqrt(lambda);
  const CompositeSpace s = CompositeSpace::single(label, 2);
  return KrausChannel(s, s, {k0, k1});
}

double phase_damping_flip_prob(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw OutOfRange("phase damping strength outside [0, 1]");
  return 0.5 * (1.0 - std::sqrt(1.0 - lambda));
}

KrausChannel pauli_flip_channel(const ComplexMatrix& pauli, double p, const std::string& label) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbability("flip probability outside [0, 1]");
  const CompositeSpace s = CompositeSpace::single(label, 2);
  return KrausChannel(s, s, {std::sqrt(1.0 - p) * identity(2), std::sqrt(p) * pauli});
}

}  // namespace qec
