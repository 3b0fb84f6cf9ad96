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

#ifndef QECENGINE_CQ_STATE_HPP
#define QECENGINE_CQ_STATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "qecengine/linalg.hpp"
#include "qecengine/space.hpp"
#include "qecengine/state.hpp"

namespace qec {

/// State sum_{x,y} L_xy L_xy^dagger (x) |x><x|^X (x) |y><y|^Y with classical
/// registers X and Y and a factor L_xy on the quantum space.
///
/// Labels passed to the entropy functions may include the register labels.
class CqState {
 public:
  CqState() = default;
  CqState(CompositeSpace quantum, std::size_t x_dim, std::size_t y_dim, std::string x_label = "X",
          std::string y_label = "Y");

  /// Single block at (0, 0).
  static CqState from_factor(CompositeSpace quantum, const ComplexMatrix& factor, std::size_t x_dim,
                             std::size_t y_dim);

  const CompositeSpace& quantum_space() const { return space_; }
  std::size_t x_dim() const { return nx_; }
  std::size_t y_dim() const { return ny_; }
  const std::string& x_label() const { return x_label_; }
  const std::string& y_label() const { return y_label_; }
  /// Full labeled space, registers last.
  CompositeSpace full_space() const;

  const ComplexMatrix& block(std::size_t x, std::size_t y) const { return blocks_.at(x * ny_ + y); }
  void set_block(std::size_t x, std::size_t y, ComplexMatrix factor);
  bool has_block(std::size_t x, std::size_t y) const { return block(x, y).cols() > 0; }

  /// Unnormalized marginal of block (x, y) on quantum `labels`.
  ComplexMatrix block_marginal(std::size_t x, std::size_t y, const Labels& labels) const;

  double trace() const;
  double probability(std::size_t x, std::size_t y) const;
  double probability_x(std::size_t x) const;

  /// Same operator on `labels` for every block.
  void apply(const Labels& labels, const ComplexMatrix& op);
  /// Register-controlled operator: block (x, y) receives op(x, y).
  void apply_controlled(const Labels& labels, const std::function<ComplexMatrix(std::size_t, std::size_t)>& op);

  /// Projective record into X. Every block must sit at x = 0.
  CqState measure_into_x(const Labels& labels, const std::vector<ComplexMatrix>& projectors) const;
  /// Projective record into Y. Every block must sit at y = 0.
  CqState measure_into_y(const Labels& labels, const std::vector<ComplexMatrix>& projectors) const;
  /// Kraus record into Y: block (x, y) = [K L_x0 for K in kraus(x, y)].
  CqState instrument_into_y(const Labels& labels,
                            const std::function<std::vector<ComplexMatrix>(std::size_t, std::size_t)>& kraus) const;

  /// L (x) F on quantum (x) extra.
  CqState tensor_factor(const CompositeSpace& extra, const ComplexMatrix& factor) const;
  CqState trace_out(const Labels& labels) const;
  /// Registers summed out; one block on the quantum space.
  CqState discard_registers() const;

  /// H(labels); register labels select register marginals.
  double entropy(const Labels& labels) const;
  double conditional_entropy(const Labels& a, const Labels& b) const;
  double mutual_information(const Labels& a, const Labels& b) const;
  double conditional_mutual_information(const Labels& a, const Labels& b, const Labels& c) const;

  /// Dense marginal on quantum labels (in space order) followed by the
  /// selected registers.
  DensityMatrix reduced(const Labels& labels) const;
  /// Dense state on the full space; throws DomainError above `max_dim`.
  DensityMatrix to_density(std::size_t max_dim = 2048) const;

 private:
  struct Selection {
    Labels quantum;
    bool x = false;
    bool y = false;
  };
  Selection select(const Labels& labels) const;
  /// Reduced factor W with W W^dagger the marginal of L L^dagger on `labels`.
  ComplexMatrix reshape_factor(const ComplexMatrix& factor, const Labels& labels) const;

  CompositeSpace space_;
  std::size_t nx_ = 1;
  std::size_t ny_ = 1;
  std::string x_label_ = "X";
  std::string y_label_ = "Y";
  std::vector<ComplexMatrix> blocks_;
};

/// -tr rho ln rho for rho = sum_b W_b W_b^dagger (unnormalized), from the
/// smaller of the two Gram matrices.
double factor_entropy(const std::vector<ComplexMatrix>& factors);

/// Removes exactly-zero columns.
ComplexMatrix drop_zero_columns(const ComplexMatrix& factor);

/// Factor V sqrt(Lambda) of a PSD matrix, dropping zero eigenvalues.
ComplexMatrix psd_factor(const ComplexMatrix& m);

}  // namespace qec

#endif  // QECENGINE_CQ_STATE_HPP
