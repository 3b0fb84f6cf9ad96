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

#ifndef QECENGINE_ENTROPY_HPP
#define QECENGINE_ENTROPY_HPP

#include <string>
#include <vector>

#include "qecengine/linalg.hpp"
#include "qecengine/state.hpp"

namespace qec {

/// Real number or the +inf sentinel. Arithmetic propagates the tag, so no
/// floating-point infinity ever enters a sum.
struct ExtendedReal {
  double value = 0.0;
  bool infinite = false;

  static ExtendedReal inf() { return {0.0, true}; }
  static ExtendedReal finite(double v) { return {v, false}; }

  bool is_finite() const { return !infinite; }
  /// Finite value; throws DomainError on the sentinel.
  double get() const;
  std::string to_string() const;

  ExtendedReal operator+(const ExtendedReal& o) const;
  ExtendedReal operator+(double v) const;
  ExtendedReal operator-(double v) const;
};

/// -sum lambda ln lambda over eigenvalues >= kZeroCutoff.
double entropy_of_spectrum(const RealVector& eigenvalues);

/// Von Neumann entropy in nats, clamped to 0 when within 1e-10 below zero.
double von_neumann(const DensityMatrix& rho);
/// Same functional on an arbitrary PSD matrix (no normalization).
double von_neumann(const ComplexMatrix& m);

/// H(labels) of the marginal.
double entropy(const DensityMatrix& rho, const Labels& labels);
/// H(A|B) = H(AB) - H(B).
double conditional_entropy(const DensityMatrix& rho, const Labels& a, const Labels& b);
/// I(A:B) = H(A) + H(B) - H(AB).
double mutual_information(const DensityMatrix& rho, const Labels& a, const Labels& b);
/// I(A:B|C) = H(AC) + H(BC) - H(ABC) - H(C).
double conditional_mutual_information(const DensityMatrix& rho, const Labels& a, const Labels& b,
                                      const Labels& c);

/// D(M||N) = tr M ln M - tr M ln N for PSD M, N (M need not be normalized).
/// Returns the +inf sentinel when tr[P_ker(N) M] > 1e-10. Throws NotPSD.
ExtendedReal relative_entropy(const ComplexMatrix& m, const ComplexMatrix& n);
ExtendedReal relative_entropy(const DensityMatrix& m, const DensityMatrix& n);

/// D(sigma||tau) for tau diagonal in the computational basis with the given
/// log-populations. Entries of `log_populations` may be -inf (empty level).
ExtendedReal relative_entropy_to_log_diagonal(const ComplexMatrix& sigma, const std::vector<double>& log_populations);

/// D(sigma||exp(-beta H)/Z), with the Gibbs log-populations evaluated exactly
/// in the eigenbasis of H.
ExtendedReal relative_entropy_to_gibbs(const ComplexMatrix& sigma, const ComplexMatrix& h, double beta);

/// -x ln x - (1-x) ln(1-x). Throws OutOfRange outside [0, 1].
double binary_entropy(double x);

/// H(F) + (1-F) ln(d^2 - 1) - S_e. Throws OutOfRange.
double fano_gap(double fidelity, std::size_t d, double entropy_exchange);

}  // namespace qec

#endif  // QECENGINE_ENTROPY_HPP
