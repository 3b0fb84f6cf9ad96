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

#include "qecengine/space.hpp"

#include <algorithm>
#include <set>

#include "qecengine/errors.hpp"

namespace qec {

CompositeSpace::CompositeSpace(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::set<std::string> seen;
  for (const auto& f : factors_) {
    if (f.label.empty()) throw InvalidSpace("empty factor label");
    if (!seen.insert(f.label).second) throw InvalidSpace("duplicate factor label '" + f.label + "'");
    std::size_t min_dim = f.is_register ? 1 : 2;
    if (f.dim < min_dim) {
      throw InvalidSpace("factor '" + f.label + "' has dimension " + std::to_string(f.dim));
    }
  }
}

CompositeSpace CompositeSpace::qubits(const Labels& labels) {
  std::vector<Factor> f;
  for (const auto& l : labels) f.push_back({l, 2, false});
  return CompositeSpace(std::move(f));
}

CompositeSpace CompositeSpace::single(const std::string& label, std::size_t dim, bool is_register) {
  return CompositeSpace({{label, dim, is_register}});
}

std::size_t CompositeSpace::dim() const {
  std::size_t d = 1;
  for (const auto& f : factors_) d *= f.dim;
  return d;
}

bool CompositeSpace::contains(const std::string& label) const {
  return std::any_of(factors_.begin(), factors_.end(), [&](const Factor& f) { return f.label == label; });
}

std::size_t CompositeSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].label == label) return i;
  }
  throw UnknownLabel(label);
}

std::size_t CompositeSpace::dim_of(const std::string& label) const { return factors_[index_of(label)].dim; }

std::size_t CompositeSpace::dim_of(const Labels& labels) const {
  std::size_t d = 1;
  for (const auto& l : labels) d *= dim_of(l);
  return d;
}

Labels CompositeSpace::labels() const {
  Labels out;
  for (const auto& f : factors_) out.push_back(f.label);
  return out;
}

Labels CompositeSpace::complement(const Labels& labels) const {
  for (const auto& l : labels) index_of(l);
  Labels out;
  for (const auto& f : factors_) {
    if (std::find(labels.begin(), labels.end(), f.label) == labels.end()) out.push_back(f.label);
  }
  return out;
}

Labels CompositeSpace::in_order(const Labels& labels) const {
  for (const auto& l : labels) index_of(l);
  Labels out;
  for (const auto& f : factors_) {
    if (std::find(labels.begin(), labels.end(), f.label) != labels.end()) out.push_back(f.label);
  }
  return out;
}

CompositeSpace CompositeSpace::subspace(const Labels& labels) const {
  std::vector<Factor> f;
  for (const auto& l : labels) f.push_back(factors_[index_of(l)]);
  return CompositeSpace(std::move(f));
}

CompositeSpace CompositeSpace::concat(const CompositeSpace& other) const {
  std::vector<Factor> f = factors_;
  f.insert(f.end(), other.factors_.begin(), other.factors_.end());
  return CompositeSpace(std::move(f));
}

IndexSplit split_index(const CompositeSpace& space, const Labels& selected) {
  const std::size_t n = space.size();
  std::vector<int> role(n, -1);
  std::vector<std::size_t> sel_pos;
  for (const auto& l : selected) {
    std::size_t i = space.index_of(l);
    if (role[i] != -1) throw InvalidPermutation("label '" + l + "' selected twice");
    role[i] = static_cast<int>(sel_pos.size());
    sel_pos.push_back(i);
  }
  std::vector<std::size_t> rest_pos;
  for (std::size_t i = 0; i < n; ++i) {
    if (role[i] == -1) rest_pos.push_back(i);
  }

  // Strides of each factor in the full (row-major) index.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * space.factor(i).dim;

  auto offsets = [&](const std::vector<std::size_t>& pos) {
    std::size_t total = 1;
    for (auto p : pos) total *= space.factor(p).dim;
    std::vector<std::size_t> off(total, 0);
    std::vector<std::size_t> digit(pos.size(), 0);
    for (std::size_t k = 0; k < total; ++k) {
      std::size_t o = 0;
      for (std::size_t j = 0; j < pos.size(); ++j) o += digit[j] * stride[pos[j]];
      off[k] = o;
      for (std::size_t j = pos.size(); j-- > 0;) {
        if (++digit[j] < space.factor(pos[j]).dim) break;
        digit[j] = 0;
      }
    }
    return off;
  };

  const auto sel_off = offsets(sel_pos);
  const auto rest_off = offsets(rest_pos);
  IndexSplit s;
  s.selected_dim = sel_off.size();
  s.rest_dim = rest_off.size();
  s.full.resize(s.selected_dim * s.rest_dim);
  for (std::size_t r = 0; r < s.rest_dim; ++r) {
    for (std::size_t k = 0; k < s.selected_dim; ++k) s.full[r * s.selected_dim + k] = rest_off[r] + sel_off[k];
  }
  return s;
}

}  // namespace qec
