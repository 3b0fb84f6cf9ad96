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

#include "qecengine/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "qecengine/errors.hpp"

namespace qec {

double ExtendedReal::get() const {
  if (infinite) throw DomainError("value is the +inf sentinel");
  return value;
}

std::string ExtendedReal::to_string() const {
  if (infinite) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

ExtendedReal ExtendedReal::operator+(const ExtendedReal& o) const {
  if (infinite || o.infinite) return inf();
  return finite(value + o.value);
}

ExtendedReal ExtendedReal::operator+(double v) const { return infinite ? inf() : finite(value + v); }
ExtendedReal ExtendedReal::operator-(double v) const { return infinite ? inf() : finite(value - v); }

double entropy_of_spectrum(const RealVector& eigenvalues) {
  double h = 0.0;
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    const double l = eigenvalues[k];
    if (l >= kZeroCutoff) h -= l * std::log(l);
  }
  if (h < 0.0 && h > -1e-10) h = 0.0;
  return h;
}

double von_neumann(const ComplexMatrix& m) { return entropy_of_spectrum(hermitian_eigvals(m)); }

double von_neumann(const DensityMatrix& rho) { return von_neumann(rho.matrix()); }

double entropy(const DensityMatrix& rho, const Labels& labels) {
  if (labels.empty()) return 0.0;
  return von_neumann(partial_trace(rho.matrix(), rho.space(), rho.space().in_order(labels)));
}

namespace {

Labels join(const Labels& a, const Labels& b) {
  std::set<std::string> seen(a.begin(), a.end());
  Labels out = a;
  for (const auto& l : b) {
    if (!seen.insert(l).second) throw DomainError("label '" + l + "' appears in two argument sets");
    out.push_back(l);
  }
  return out;
}

}  // namespace

double conditional_entropy(const DensityMatrix& rho, const Labels& a, const Labels& b) {
  return entropy(rho, join(a, b)) - entropy(rho, b);
}

double mutual_information(const DensityMatrix& rho, const Labels& a, const Labels& b) {
  return entropy(rho, a) + entropy(rho, b) - entropy(rho, join(a, b));
}

double conditional_mutual_information(const DensityMatrix& rho, const Labels& a, const Labels& b,
                                      const Labels& c) {
  const Labels ac = join(a, c);
  const Labels bc = join(b, c);
  return entropy(rho, ac) + entropy(rho, bc) - entropy(rho, join(a, bc)) - entropy(rho, c);
}

namespace {

void require_psd(const RealVector& eig, const ComplexMatrix& m, const char* which) {
  if (eig.size() > 0 && eig.minCoeff() < -1e-10 * (1.0 + max_abs(m))) {
    throw NotPSD(std::string(which) + " has eigenvalue " + std::to_string(eig.minCoeff()));
  }
}

}  // namespace

ExtendedReal relative_entropy(const ComplexMatrix& m, const ComplexMatrix& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) throw DimensionMismatch("relative entropy arguments differ in size");
  const RealVector em = hermitian_eigvals(m);
  require_psd(em, m, "first argument");
  const auto en = hermitian_eig(n);
  require_psd(en.eigenvalues, n, "second argument");

  double m_log_m = 0.0;
  for (Eigen::Index k = 0; k < em.size(); ++k) {
    if (em[k] >= kZeroCutoff) m_log_m += em[k] * std::log(em[k]);
  }
  double kernel_weight = 0.0;
  double m_log_n = 0.0;
  for (Eigen::Index k = 0; k < en.eigenvalues.size(); ++k) {
    const auto v = en.eigenvectors.col(k);
    const double w = (v.adjoint() * m * v)(0, 0).real();
    if (en.eigenvalues[k] < kZeroCutoff) {
      kernel_weight += w;
    } else {
      m_log_n += w * std::log(en.eigenvalues[k]);
    }
  }
  if (kernel_weight > 1e-10) return ExtendedReal::inf();
  return ExtendedReal::finite(m_log_m - m_log_n);
}

ExtendedReal relative_entropy(const DensityMatrix& m, const DensityMatrix& n) {
  return relative_entropy(m.matrix(), n.matrix());
}

ExtendedReal relative_entropy_to_log_diagonal(const ComplexMatrix& sigma, const std::vector<double>& log_populations) {
  if (static_cast<std::size_t>(sigma.rows()) != log_populations.size()) {
    throw DimensionMismatch("log-population count does not match state");
  }
  const RealVector eig = hermitian_eigvals(sigma);
  require_psd(eig, sigma, "state");
  double cross = 0.0;
  for (std::size_t k = 0; k < log_populations.size(); ++k) {
    const double w = sigma(k, k).real();
    if (std::isinf(log_populations[k])) {
      if (w > 1e-10) return ExtendedReal::inf();
      continue;
    }
    cross += w * log_populations[k];
  }
  double s_log_s = 0.0;
  for (Eigen::Index k = 0; k < eig.size(); ++k) {
    if (eig[k] >= kZeroCutoff) s_log_s += eig[k] * std::log(eig[k]);
  }
  return ExtendedReal::finite(s_log_s - cross);
}

ExtendedReal relative_entropy_to_gibbs(const ComplexMatrix& sigma, const ComplexMatrix& h, double beta) {
  if (sigma.rows() != h.rows()) throw DimensionMismatch("state and Hamiltonian differ in size");
  const auto eig = hermitian_eig(h);
  std::vector<double> energies(eig.eigenvalues.data(), eig.eigenvalues.data() + eig.eigenvalues.size());
  const ComplexMatrix rotated = eig.eigenvectors.adjoint() * sigma * eig.eigenvectors;
  return relative_entropy_to_log_diagonal(rotated, gibbs_log_populations(energies, beta));
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw OutOfRange("binary entropy argument outside [0, 1]");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log(x);
  if (x < 1.0) h -= (1.0 - x) * std::log1p(-x);
  return h;
}

double fano_gap(double fidelity, std::size_t d, double entropy_exchange) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) throw OutOfRange("fidelity outside [0, 1]");
  if (d < 2) throw OutOfRange("dimension must be at least 2");
  if (entropy_exchange < -1e-10) throw OutOfRange("entropy exchange must be nonnegative");
  const double dd = static_cast<double>(d);
  return binary_entropy(fidelity) + (1.0 - fidelity) * std::log(dd * dd - 1.0) - entropy_exchange;
}

}  // namespace qec
