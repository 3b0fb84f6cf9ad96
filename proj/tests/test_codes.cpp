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

#include "qecengine/codes.hpp"
#include "qecengine/errors.hpp"
#include "qecengine/random.hpp"

namespace qec {
namespace {

ComplexVector three_qubit(const ComplexVector& s, std::size_t a1, std::size_t a2) {
  ComplexVector v = ComplexVector::Zero(8);
  for (std::size_t k = 0; k < 2; ++k) v[static_cast<Eigen::Index>(k * 4 + a1 * 2 + a2)] = s[k];
  return v;
}

ComplexVector single_qubit(cplx a, cplx b) {
  ComplexVector v(2);
  v << a, b;
  return v;
}

ComplexMatrix flip_on(const ComplexMatrix& pauli, std::size_t qubit) {
  std::vector<ComplexMatrix> f(3, identity(2));
  f[qubit] = pauli;
  return tensor(f);
}

TEST(Codes, BitflipEncodersProduceTheCodeword) {
  const CodeSpec code = bitflip_code();
  const ComplexVector s = single_qubit({0.6, 0.0}, {0.0, 0.8});
  ComplexVector target = ComplexVector::Zero(8);
  target[0] = s[0];
  target[7] = s[1];
  for (std::size_t x = 0; x < 4; ++x) {
    const ComplexVector out = code.encoders[x] * three_qubit(s, x >> 1, x & 1);
    EXPECT_LT((out - target).norm(), 1e-14) << "ancilla outcome " << x;
  }
}

TEST(Codes, SingleFlipsAreDetectedAndCorrected) {
  Rng rng(201);
  for (const CodeSpec& code : {bitflip_code(), phaseflip_code()}) {
    const ComplexVector psi = random_pure_vector(2, rng);
    const ComplexVector logical = code.encoders[0] * three_qubit(psi, 0, 0);
    EXPECT_NEAR((code.syndrome_projectors[0] * logical).norm(), 1.0, 1e-12) << code.name;
    for (std::size_t q = 0; q < 3; ++q) {
      const ComplexVector hit = flip_on(code.noise_pauli, q) * logical;
      const std::size_t y = q + 1;
      EXPECT_NEAR((code.syndrome_projectors[y] * hit).norm(), 1.0, 1e-12) << code.name << " qubit " << q;
      const ComplexVector fixed = code.corrections[y] * hit;
      EXPECT_LT((fixed - logical).norm(), 1e-12);
      // The full decoder returns the input on S with the ancillas in |00>.
      const ComplexVector decoded = code.decoder(0, y) * hit;
      EXPECT_LT((decoded - three_qubit(psi, 0, 0)).norm(), 1e-12);
      EXPECT_LT((code.decoder(0, y, DecoderKind::kCorrectOnly) * hit - logical).norm(), 1e-12);
    }
  }
}

TEST(Codes, PhaseflipIsHadamardConjugatedBitflip) {
  const CodeSpec bit = bitflip_code();
  const CodeSpec phase = phaseflip_code();
  const ComplexMatrix h3 = tensor({gates::hadamard(), gates::hadamard(), gates::hadamard()});
  for (std::size_t y = 0; y < 4; ++y) {
    EXPECT_LT(max_deviation(phase.syndrome_projectors[y], h3 * bit.syndrome_projectors[y] * h3), 1e-14);
    EXPECT_LT(max_deviation(phase.corrections[y], h3 * bit.corrections[y] * h3), 1e-14);
  }
  EXPECT_LT(max_deviation(phase.noise_pauli, gates::hadamard() * bit.noise_pauli * gates::hadamard()), 1e-15);
  // The phase-flip codeword is a|+++> + b|--->.
  const ComplexVector s = single_qubit({0.8, 0.0}, {0.6, 0.0});
  ComplexVector plus(2), minus(2);
  plus << M_SQRT1_2, M_SQRT1_2;
  minus << M_SQRT1_2, -M_SQRT1_2;
  const ComplexVector ppp = tensor({plus, plus, plus});
  const ComplexVector mmm = tensor({minus, minus, minus});
  const ComplexVector target = s[0] * ppp + s[1] * mmm;
  EXPECT_LT((phase.encoders[0] * three_qubit(s, 0, 0) - target).norm(), 1e-14);
}

TEST(Codes, InvalidSyndromesAreRejected) {
  CodeSpec code = bitflip_code();
  code.syndrome_projectors.pop_back();
  EXPECT_THROW(code.validate(), NotProjective);
  code = bitflip_code();
  code.syndrome_projectors[1] = code.syndrome_projectors[0];
  EXPECT_THROW(code.validate(), NotProjective);
  code = bitflip_code();
  code.corrections[2] *= 2.0;
  EXPECT_THROW(code.validate(), InvalidChannel);
}

TEST(Codes, LookupByName) {
  EXPECT_EQ(code_by_name("bitflip").name, "bitflip");
  EXPECT_EQ(code_by_name("phaseflip").name, "phaseflip");
  EXPECT_THROW(code_by_name("shor"), DomainError);
  EXPECT_EQ(parse_decoder("correct_only"), DecoderKind::kCorrectOnly);
  EXPECT_EQ(to_string(parse_decoder("unencode")), "unencode");
  EXPECT_THROW(parse_decoder("majority"), DomainError);
}

TEST(Codes, PhaseDampingEqualsPhaseFlip) {
  for (double lambda : {0.0, 0.1, 0.37, 0.9, 1.0}) {
    const double mu = (1.0 - std::sqrt(1.0 - lambda)) / 2.0;
    EXPECT_NEAR(phase_damping_flip_prob(lambda), mu, 1e-15);
    const KrausChannel damping = phase_damping_channel(lambda);
    const KrausChannel flip = pauli_flip_channel(gates::pauli_z(), mu);
    EXPECT_LT(choi_distance(damping, flip), 1e-14) << "lambda " << lambda;
  }
  EXPECT_THROW(phase_damping_channel(1.5), OutOfRange);
  EXPECT_THROW(phase_damping_flip_prob(-0.1), OutOfRange);
  EXPECT_THROW(pauli_flip_channel(gates::pauli_x(), 1.1), InvalidProbability);
}

TEST(Codes, SyndromeInstrumentIsProjective) {
  EXPECT_TRUE(bitflip_code().syndrome_instrument().is_projective());
  EXPECT_TRUE(phaseflip_code().syndrome_instrument().is_projective());
}

}  // namespace
}  // namespace qec
