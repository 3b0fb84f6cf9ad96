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

#ifndef QECENGINE_SPACE_HPP
#define QECENGINE_SPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace qec {

using Labels = std::vector<std::string>;

/// One tensor factor of a composite Hilbert space.
struct Factor {
  std::string label;
  std::size_t dim = 2;
  bool is_register = false;

  bool operator==(const Factor&) const = default;
};

/// Ordered list of labeled tensor factors.
///
/// Global convention: basis states are enumerated row-major with the first
/// factor as the slowest-varying index, so that the matrix of A (x) B has
/// A's indices as the outer block index.
class CompositeSpace {
 public:
  CompositeSpace() = default;
  explicit CompositeSpace(std::vector<Factor> factors);

  /// Space of `labels.size()` qubits.
  static CompositeSpace qubits(const Labels& labels);
  static CompositeSpace single(const std::string& label, std::size_t dim, bool is_register = false);

  std::size_t dim() const;
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }
  const Factor& factor(std::size_t i) const { return factors_.at(i); }

  bool contains(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;
  std::size_t dim_of(const std::string& label) const;
  std::size_t dim_of(const Labels& labels) const;
  Labels labels() const;

  /// Labels of this space that are not in `labels`, in original order.
  Labels complement(const Labels& labels) const;
  /// `labels` reordered to follow this space's factor order.
  Labels in_order(const Labels& labels) const;

  /// Subspace on `labels` in the order given.
  CompositeSpace subspace(const Labels& labels) const;
  CompositeSpace concat(const CompositeSpace& other) const;

  bool operator==(const CompositeSpace&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Index bookkeeping for splitting a composite index into (selected, rest).
///
/// `full[r * selected_dim + s]` is the full index whose selected factors (in the
/// order requested) take multi-index `s` and whose remaining factors (in
/// original order) take multi-index `r`.
struct IndexSplit {
  std::size_t selected_dim = 1;
  std::size_t rest_dim = 1;
  std::vector<std::size_t> full;

  std::size_t at(std::size_t rest, std::size_t selected) const { return full[rest * selected_dim + selected]; }
};

IndexSplit split_index(const CompositeSpace& space, const Labels& selected);

}  // namespace qec

#endif  // QECENGINE_SPACE_HPP
