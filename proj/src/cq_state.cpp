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

#include "qecengine/cq_state.hpp"

#include <set>

#include "qecengine/entropy.hpp"
#include "qecengine/errors.hpp"

namespace qec {

ComplexMatrix drop_zero_columns(const ComplexMatrix& factor) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index c = 0; c < factor.cols(); ++c) {
    if (factor.col(c).squaredNorm() > 0.0) keep.push_back(c);
  }
  if (keep.size() == static_cast<std::size_t>(factor.cols())) return factor;
  ComplexMatrix out(factor.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = factor.col(keep[k]);
  return out;
}

ComplexMatrix psd_factor(const ComplexMatrix& m) {
  const auto eig = hermitian_eig(m);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    if (eig.eigenvalues[k] > 0.0) keep.push_back(k);
  }
  ComplexMatrix out(m.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = std::sqrt(eig.eigenvalues[keep[k]]) * eig.eigenvectors.col(keep[k]);
  }
  return out;
}

CqState::CqState(CompositeSpace quantum, std::size_t x_dim, std::size_t y_dim, std::string x_label,
                 std::string y_label)
    : space_(std::move(quantum)), nx_(x_dim), ny_(y_dim), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {
  if (nx_ == 0 || ny_ == 0) throw InvalidSpace("register dimensions must be positive");
  if (space_.contains(x_label_) || space_.contains(y_label_)) throw InvalidSpace("register label reused");
  blocks_.assign(nx_ * ny_, ComplexMatrix(space_.dim(), 0));
}

CqState CqState::from_factor(CompositeSpace quantum, const ComplexMatrix& factor, std::size_t x_dim,
                             std::size_t y_dim) {
  CqState s(std::move(quantum), x_dim, y_dim);
  s.set_block(0, 0, factor);
  return s;
}

CompositeSpace CqState::full_space() const {
  return space_.concat(CompositeSpace::single(x_label_, nx_, true)).concat(CompositeSpace::single(y_label_, ny_, true));
}

void CqState::set_block(std::size_t x, std::size_t y, ComplexMatrix factor) {
  if (factor.rows() != static_cast<Eigen::Index>(space_.dim())) throw DimensionMismatch("block factor rows");
  blocks_.at(x * ny_ + y) = std::move(factor);
}

ComplexMatrix CqState::block_marginal(std::size_t x, std::size_t y, const Labels& labels) const {
  const ComplexMatrix w = reshape_factor(block(x, y), space_.in_order(labels));
  return w * w.adjoint();
}

double CqState::trace() const {
  double t = 0.0;
  for (const auto& b : blocks_) t += b.squaredNorm();
  return t;
}

double CqState::probability(std::size_t x, std::size_t y) const { return block(x, y).squaredNorm(); }

double CqState::probability_x(std::size_t x) const {
  double p = 0.0;
  for (std::size_t y = 0; y < ny_; ++y) p += probability(x, y);
  return p;
}

void CqState::apply(const Labels& labels, const ComplexMatrix& op) {
  for (auto& b : blocks_) {
    if (b.cols() > 0) b = apply_left(b, space_, labels, op);
  }
}

void CqState::apply_controlled(const Labels& labels,
                               const std::function<ComplexMatrix(std::size_t, std::size_t)>& op) {
  for (std::size_t x = 0; x < nx_; ++x) {
    for (std::size_t y = 0; y < ny_; ++y) {
      auto& b = blocks_[x * ny_ + y];
      if (b.cols() > 0) b = apply_left(b, space_, labels, op(x, y));
    }
  }
}

CqState CqState::measure_into_x(const Labels& labels, const std::vector<ComplexMatrix>& projectors) const {
  if (projectors.size() > nx_) throw DimensionMismatch("more outcomes than X levels");
  CqState out(space_, nx_, ny_, x_label_, y_label_);
  for (std::size_t x = 1; x < nx_; ++x) {
    for (std::size_t y = 0; y < ny_; ++y) {
      if (has_block(x, y)) throw DomainError("X already holds a record");
    }
  }
  for (std::size_t y = 0; y < ny_; ++y) {
    if (!has_block(0, y)) continue;
    for (std::size_t x = 0; x < projectors.size(); ++x) {
      out.set_block(x, y, drop_zero_columns(apply_left(block(0, y), space_, labels, projectors[x])));
    }
  }
  return out;
}

CqState CqState::measure_into_y(const Labels& labels, const std::vector<ComplexMatrix>& projectors) const {
  return instrument_into_y(labels, [&](std::size_t, std::size_t y) { return std::vector<ComplexMatrix>{projectors.at(y)}; });
}

CqState CqState::instrument_into_y(
    const Labels& labels, const std::function<std::vector<ComplexMatrix>(std::size_t, std::size_t)>& kraus) const {
  CqState out(space_, nx_, ny_, x_label_, y_label_);
  for (std::size_t x = 0; x < nx_; ++x) {
    for (std::size_t y = 1; y < ny_; ++y) {
      if (has_block(x, y)) throw DomainError("Y already holds a record");
    }
  }
  for (std::size_t x = 0; x < nx_; ++x) {
    if (!has_block(x, 0)) continue;
    const ComplexMatrix& l = block(x, 0);
    for (std::size_t y = 0; y < ny_; ++y) {
      const auto ops = kraus(x, y);
      ComplexMatrix stacked(l.rows(), l.cols() * static_cast<Eigen::Index>(ops.size()));
      for (std::size_t k = 0; k < ops.size(); ++k) {
        stacked.middleCols(static_cast<Eigen::Index>(k) * l.cols(), l.cols()) = apply_left(l, space_, labels, ops[k]);
      }
      out.set_block(x, y, drop_zero_columns(stacked));
    }
  }
  return out;
}

CqState CqState::tensor_factor(const CompositeSpace& extra, const ComplexMatrix& factor) const {
  if (factor.rows() != static_cast<Eigen::Index>(extra.dim())) throw DimensionMismatch("extra factor rows");
  CqState out(space_.concat(extra), nx_, ny_, x_label_, y_label_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].cols() > 0) out.blocks_[i] = tensor(blocks_[i], factor);
  }
  return out;
}

CqState CqState::trace_out(const Labels& labels) const {
  const Labels kept = space_.complement(labels);
  CqState out(space_.subspace(kept), nx_, ny_, x_label_, y_label_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].cols() > 0) out.blocks_[i] = drop_zero_columns(reshape_factor(blocks_[i], kept));
  }
  return out;
}

CqState CqState::discard_registers() const {
  Eigen::Index cols = 0;
  for (const auto& b : blocks_) cols += b.cols();
  ComplexMatrix all(space_.dim(), cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks_) {
    all.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return from_factor(space_, all, 1, 1);
}

CqState::Selection CqState::select(const Labels& labels) const {
  Selection s;
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw DomainError("label '" + l + "' repeated");
    if (l == x_label_) {
      s.x = true;
    } else if (l == y_label_) {
      s.y = true;
    } else {
      if (!space_.contains(l)) throw UnknownLabel(l);
      s.quantum.push_back(l);
    }
  }
  s.quantum = space_.in_order(s.quantum);
  return s;
}

ComplexMatrix CqState::reshape_factor(const ComplexMatrix& factor, const Labels& labels) const {
  if (labels == space_.labels()) return factor;
  const IndexSplit s = split_index(space_, labels);
  const auto k = factor.cols();
  ComplexMatrix w(static_cast<Eigen::Index>(s.selected_dim), static_cast<Eigen::Index>(s.rest_dim) * k);
  for (std::size_t r = 0; r < s.rest_dim; ++r) {
    for (std::size_t q = 0; q < s.selected_dim; ++q) {
      w.row(static_cast<Eigen::Index>(q)).segment(static_cast<Eigen::Index>(r) * k, k) =
          factor.row(static_cast<Eigen::Index>(s.at(r, q)));
    }
  }
  return w;
}

double factor_entropy(const std::vector<ComplexMatrix>& factors) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  for (const auto& f : factors) {
    rows = f.rows();
    cols += f.cols();
  }
  if (cols == 0) return 0.0;
  if (rows <= cols) {
    ComplexMatrix g = ComplexMatrix::Zero(rows, rows);
    for (const auto& f : factors) {
      if (f.cols() > 0) g.noalias() += f * f.adjoint();
    }
    return von_neumann(g);
  }
  ComplexMatrix all(rows, cols);
  Eigen::Index at = 0;
  for (const auto& f : factors) {
    all.middleCols(at, f.cols()) = f;
    at += f.cols();
  }
  return von_neumann(ComplexMatrix(all.adjoint() * all));
}

double CqState::entropy(const Labels& labels) const {
  const Selection s = select(labels);
  std::vector<std::vector<ComplexMatrix>> groups((s.x ? nx_ : 1) * (s.y ? ny_ : 1));
  for (std::size_t x = 0; x < nx_; ++x) {
    for (std::size_t y = 0; y < ny_; ++y) {
      if (!has_block(x, y)) continue;
      const std::size_t g = (s.x ? x : 0) * (s.y ? ny_ : 1) + (s.y ? y : 0);
      groups[g].push_back(drop_zero_columns(reshape_factor(block(x, y), s.quantum)));
    }
  }
  double h = 0.0;
  for (const auto& g : groups) h += factor_entropy(g);
  return h;
}

namespace {

Labels join(const Labels& a, const Labels& b) {
  Labels out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double CqState::conditional_entropy(const Labels& a, const Labels& b) const {
  return entropy(join(a, b)) - entropy(b);
}

double CqState::mutual_information(const Labels& a, const Labels& b) const {
  return entropy(a) + entropy(b) - entropy(join(a, b));
}

double CqState::conditional_mutual_information(const Labels& a, const Labels& b, const Labels& c) const {
  return entropy(join(a, c)) + entropy(join(b, c)) - entropy(join(join(a, b), c)) - entropy(c);
}

DensityMatrix CqState::reduced(const Labels& labels) const {
  const Selection s = select(labels);
  const std::size_t dq = space_.dim_of(s.quantum);
  const std::size_t rx = s.x ? nx_ : 1;
  const std::size_t ry = s.y ? ny_ : 1;
  const std::size_t d = dq * rx * ry;
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (std::size_t x = 0; x < nx_; ++x) {
    for (std::size_t y = 0; y < ny_; ++y) {
      if (!has_block(x, y)) continue;
      const ComplexMatrix w = reshape_factor(block(x, y), s.quantum);
      const ComplexMatrix g = w * w.adjoint();
      const std::size_t reg = (s.x ? x : 0) * ry + (s.y ? y : 0);
      for (std::size_t i = 0; i < dq; ++i) {
        for (std::size_t j = 0; j < dq; ++j) {
          m(i * rx * ry + reg, j * rx * ry + reg) += g(i, j);
        }
      }
    }
  }
  CompositeSpace sp = space_.subspace(s.quantum);
  if (s.x) sp = sp.concat(CompositeSpace::single(x_label_, nx_, true));
  if (s.y) sp = sp.concat(CompositeSpace::single(y_label_, ny_, true));
  return DensityMatrix(sp, m);
}

DensityMatrix CqState::to_density(std::size_t max_dim) const {
  if (space_.dim() * nx_ * ny_ > max_dim) throw DomainError("state too large for a dense expansion");
  Labels all = space_.labels();
  all.push_back(x_label_);
  all.push_back(y_label_);
  return reduced(all);
}

}  // namespace qec
