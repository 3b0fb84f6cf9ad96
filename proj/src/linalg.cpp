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

#include "qecengine/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "qecengine/errors.hpp"

namespace qec {

ComplexMatrix identity(std::size_t n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_asymmetry(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("matrix is not square");
  return m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_asymmetry(m) <= tol * (1.0 + max_abs(m));
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_deviation(m.adjoint() * m, identity(m.rows())) <= tol;
}

cplx trace(const ComplexMatrix& m) { return m.trace(); }

double max_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("shape mismatch in comparison");
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

namespace {

void check_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("Hermitian input must be square");
  double asym = max_asymmetry(m);
  if (asym > kHermitianTol * (1.0 + max_abs(m))) throw NonHermitianInput(asym);
}

HermitianEigenDecomposition sorted(RealVector w, ComplexMatrix v) {
  const auto n = w.size();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return w[i] < w[j]; });
  HermitianEigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(v.rows(), n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[k] = w[order[k]];
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  return out;
}

}  // namespace

HermitianEigenDecomposition jacobi_eig(const ComplexMatrix& input) {
  check_hermitian(input);
  const Eigen::Index n = input.rows();
  ComplexMatrix a = 0.5 * (input + input.adjoint());
  ComplexMatrix v = identity(n);
  const double scale = std::max(1.0, max_abs(a));

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(off) <= 1e-17 * scale * n) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const cplx phase = apq / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rotation G = D R with D = diag(1, conj(phase)) on (p, q).
        const cplx gpp = c, gpq = s, gqp = -s * std::conj(phase), gqq = c * std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }
  RealVector w(n);
  for (Eigen::Index k = 0; k < n; ++k) w[k] = a(k, k).real();
  return sorted(std::move(w), std::move(v));
}

HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (static_cast<std::size_t>(m.rows()) <= kJacobiMaxDim) return jacobi_eig(m);
  check_hermitian(m);
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::ComputeEigenvectors);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigvals(const ComplexMatrix& m) {
  if (static_cast<std::size_t>(m.rows()) <= kJacobiMaxDim) return jacobi_eig(m).eigenvalues;
  check_hermitian(m);
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

ComplexMatrix matrix_function(const ComplexMatrix& m, const std::function<double(double)>& f, double zero_cutoff) {
  const auto eig = hermitian_eig(m);
  const double f0 = f(0.0);
  const bool f0_finite = std::isfinite(f0);
  RealVector fw(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < fw.size(); ++k) {
    const double lam = eig.eigenvalues[k];
    double val;
    if (std::abs(lam) < zero_cutoff) {
      val = f0_finite ? f0 : 0.0;
    } else {
      val = f(lam);
      if (!std::isfinite(val)) throw DomainError("function undefined at eigenvalue " + std::to_string(lam));
    }
    fw[k] = val;
  }
  const ComplexMatrix& v = eig.eigenvectors;
  return v * fw.cast<cplx>().asDiagonal() * v.adjoint();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor(const std::vector<ComplexMatrix>& factors) {
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const CompositeSpace& space, const Labels& keep) {
  const auto d = static_cast<Eigen::Index>(space.dim());
  if (m.rows() != d || m.cols() != d) throw DimensionMismatch("matrix dimension does not match space");
  const IndexSplit s = split_index(space, space.in_order(keep));
  const auto dk = static_cast<Eigen::Index>(s.selected_dim);
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (std::size_t r = 0; r < s.rest_dim; ++r) {
    for (Eigen::Index i = 0; i < dk; ++i) {
      const auto fi = static_cast<Eigen::Index>(s.at(r, i));
      for (Eigen::Index j = 0; j < dk; ++j) out(i, j) += m(fi, static_cast<Eigen::Index>(s.at(r, j)));
    }
  }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const CompositeSpace& space, const Labels& new_order) {
  if (new_order.size() != space.size()) throw InvalidPermutation("new order must list every factor once");
  for (const auto& l : new_order) {
    if (!space.contains(l)) throw InvalidPermutation("label '" + l + "' is not a factor");
  }
  const auto d = static_cast<Eigen::Index>(space.dim());
  if (m.rows() != d || m.cols() != d) throw DimensionMismatch("matrix dimension does not match space");
  IndexSplit s;
  try {
    s = split_index(space, new_order);
  } catch (const InvalidPermutation&) {
    throw InvalidPermutation("new order repeats a label");
  }
  // New index k (selected multi-index in the new order) <- old index s.full[k].
  ComplexMatrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) out(i, j) = m(static_cast<Eigen::Index>(s.full[i]), static_cast<Eigen::Index>(s.full[j]));
  }
  return out;
}

ComplexMatrix apply_left(const ComplexMatrix& m, const CompositeSpace& space, const Labels& labels,
                         const ComplexMatrix& op) {
  const auto d = static_cast<Eigen::Index>(space.dim());
  if (m.rows() != d) throw DimensionMismatch("row dimension does not match space");
  const IndexSplit s = split_index(space, labels);
  const auto ds = static_cast<Eigen::Index>(s.selected_dim);
  if (op.rows() != ds || op.cols() != ds) throw DimensionMismatch("operator dimension does not match labels");
  ComplexMatrix out = ComplexMatrix::Zero(d, m.cols());
  ComplexMatrix slab(ds, m.cols());
  for (std::size_t r = 0; r < s.rest_dim; ++r) {
    for (Eigen::Index k = 0; k < ds; ++k) slab.row(k) = m.row(static_cast<Eigen::Index>(s.at(r, k)));
    const ComplexMatrix mapped = op * slab;
    for (Eigen::Index k = 0; k < ds; ++k) out.row(static_cast<Eigen::Index>(s.at(r, k))) = mapped.row(k);
  }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const CompositeSpace& space, const Labels& labels) {
  return apply_left(identity(space.dim()), space, labels, op);
}

namespace gates {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix hadamard() {
  ComplexMatrix m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  m << r, r, r, -r;
  return m;
}

ComplexMatrix basis_projector(std::size_t d, std::size_t k) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(k, k) = 1.0;
  return m;
}

ComplexMatrix ket(std::size_t d, std::size_t k) {
  ComplexMatrix m = ComplexMatrix::Zero(d, 1);
  m(k, 0) = 1.0;
  return m;
}

ComplexMatrix cyclic_shift(std::size_t d, std::size_t j) {
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < d; ++k) m((k + j) % d, k) = 1.0;
  return m;
}

ComplexMatrix swap(std::size_t d) {
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(j * d + i, i * d + j) = 1.0;
  }
  return m;
}

ComplexMatrix cnot(const CompositeSpace& space, const std::string& control, const std::string& target) {
  ComplexMatrix local = tensor(basis_projector(2, 0), identity(2)) + tensor(basis_projector(2, 1), pauli_x());
  return embed(local, space, {control, target});
}

}  // namespace gates

}  // namespace qec
