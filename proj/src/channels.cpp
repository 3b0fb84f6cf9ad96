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

#include "qecengine/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qecengine/errors.hpp"

namespace qec {

KrausChannel::KrausChannel(Unchecked, CompositeSpace input, CompositeSpace output, std::vector<ComplexMatrix> kraus)
    : input_(std::move(input)), output_(std::move(output)), kraus_(std::move(kraus)) {}

KrausChannel::KrausChannel(CompositeSpace input, CompositeSpace output, std::vector<ComplexMatrix> kraus,
                           bool trace_preserving)
    : input_(std::move(input)), output_(std::move(output)), kraus_(std::move(kraus)),
      trace_preserving_(trace_preserving) {
  const auto din = static_cast<Eigen::Index>(input_.dim());
  const auto dout = static_cast<Eigen::Index>(output_.dim());
  if (kraus_.empty()) throw InvalidChannel("channel has no Kraus operators");
  for (const auto& k : kraus_) {
    if (k.rows() != dout || k.cols() != din) throw DimensionMismatch("Kraus operator does not match channel spaces");
  }
  const ComplexMatrix gram = kraus_gram();
  const ComplexMatrix excess = gram - qec::identity(input_.dim());
  const RealVector eig = hermitian_eigvals(0.5 * (excess + excess.adjoint()));
  if (eig.maxCoeff() > 1e-10) {
    throw InvalidChannel("sum K^dagger K exceeds identity by " + std::to_string(eig.maxCoeff()));
  }
  if (trace_preserving_ && max_abs(excess) > 1e-10) {
    throw InvalidChannel("channel flagged trace preserving deviates by " + std::to_string(max_abs(excess)));
  }
}

KrausChannel KrausChannel::unitary(const CompositeSpace& space, const ComplexMatrix& u) {
  if (!is_unitary(u)) throw InvalidChannel("operator is not unitary");
  return KrausChannel(space, space, {u}, true);
}

KrausChannel KrausChannel::identity(const CompositeSpace& space) {
  return KrausChannel(space, space, {qec::identity(space.dim())}, true);
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != static_cast<Eigen::Index>(input_.dim()) || rho.cols() != rho.rows()) {
    throw DimensionMismatch("state does not match channel input");
  }
  ComplexMatrix out = ComplexMatrix::Zero(output_.dim(), output_.dim());
  for (const auto& k : kraus_) out.noalias() += k * rho * k.adjoint();
  return out;
}

DensityMatrix KrausChannel::apply(const DensityMatrix& rho) const { return DensityMatrix(output_, apply(rho.matrix())); }

ComplexMatrix KrausChannel::apply_adjoint(const ComplexMatrix& m) const {
  if (m.rows() != static_cast<Eigen::Index>(output_.dim()) || m.cols() != m.rows()) {
    throw DimensionMismatch("operator does not match channel output");
  }
  ComplexMatrix out = ComplexMatrix::Zero(input_.dim(), input_.dim());
  for (const auto& k : kraus_) out.noalias() += k.adjoint() * m * k;
  return out;
}

KrausChannel KrausChannel::adjoint() const {
  std::vector<ComplexMatrix> ks;
  ks.reserve(kraus_.size());
  for (const auto& k : kraus_) ks.push_back(k.adjoint());
  return KrausChannel(Unchecked{}, output_, input_, std::move(ks));
}

ComplexMatrix KrausChannel::choi() const {
  const auto din = static_cast<Eigen::Index>(input_.dim());
  const auto dout = static_cast<Eigen::Index>(output_.dim());
  ComplexMatrix c = ComplexMatrix::Zero(din * dout, din * dout);
  ComplexVector v(din * dout);
  for (const auto& k : kraus_) {
    for (Eigen::Index i = 0; i < din; ++i) {
      for (Eigen::Index o = 0; o < dout; ++o) v[i * dout + o] = k(o, i);
    }
    c.noalias() += v * v.adjoint();
  }
  return c;
}

ComplexMatrix KrausChannel::kraus_gram() const {
  ComplexMatrix g = ComplexMatrix::Zero(input_.dim(), input_.dim());
  for (const auto& k : kraus_) g.noalias() += k.adjoint() * k;
  return g;
}

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& rho) { return ch.apply(rho); }
ComplexMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) { return ch.apply(rho.matrix()); }

std::string to_string(Unitality u) {
  switch (u) {
    case Unitality::kUnital:
      return "unital";
    case Unitality::kSubunital:
      return "subunital";
    case Unitality::kSuperunital:
      return "superunital";
    case Unitality::kNeither:
      break;
  }
  return "neither";
}

UnitalityReport unitality_class(const KrausChannel& ch, double tol) {
  const ComplexMatrix diff = ch.apply(identity(ch.input_space().dim())) - identity(ch.output_space().dim());
  const RealVector eig = hermitian_eigvals(0.5 * (diff + diff.adjoint()));
  UnitalityReport r;
  r.min_eigenvalue = eig.minCoeff();
  r.max_eigenvalue = eig.maxCoeff();
  r.slack = std::abs(r.min_eigenvalue) > std::abs(r.max_eigenvalue) ? r.min_eigenvalue : r.max_eigenvalue;
  if (r.min_eigenvalue >= -tol && r.max_eigenvalue <= tol) {
    r.kind = Unitality::kUnital;
  } else if (r.max_eigenvalue <= tol) {
    r.kind = Unitality::kSubunital;
  } else if (r.min_eigenvalue >= -tol) {
    r.kind = Unitality::kSuperunital;
  } else {
    r.kind = Unitality::kNeither;
  }
  return r;
}

ComplexMatrix adjoint_composed(const KrausChannel& ch, const ComplexMatrix& rho) {
  return ch.apply_adjoint(ch.apply(rho));
}

double efficacy(const KrausChannel& ch, const ComplexMatrix& rho) { return adjoint_composed(ch, rho).trace().real(); }
double efficacy(const KrausChannel& ch, const DensityMatrix& rho) { return efficacy(ch, rho.matrix()); }

QuantumInstrument::QuantumInstrument(CompositeSpace system, std::vector<KrausChannel> branches,
                                     std::vector<std::string> outcomes)
    : system_(std::move(system)), branches_(std::move(branches)), outcomes_(std::move(outcomes)) {
  if (branches_.empty()) throw InvalidChannel("instrument has no outcomes");
  if (outcomes_.empty()) {
    for (std::size_t y = 0; y < branches_.size(); ++y) outcomes_.push_back(std::to_string(y));
  }
  if (outcomes_.size() != branches_.size()) throw DimensionMismatch("outcome labels do not match branches");
  for (const auto& b : branches_) {
    if (b.input_space().dim() != system_.dim() || b.output_space().dim() != system_.dim()) {
      throw DimensionMismatch("instrument branch does not act on the system");
    }
  }
  ComplexMatrix total = ComplexMatrix::Zero(system_.dim(), system_.dim());
  for (const auto& b : branches_) total += b.kraus_gram();
  const double dev = max_deviation(total, identity(system_.dim()));
  if (dev > 1e-10) throw InvalidChannel("instrument branches do not sum to a channel (deviation " + std::to_string(dev) + ")");
}

QuantumInstrument QuantumInstrument::from_operators(const CompositeSpace& system, const std::vector<ComplexMatrix>& ops) {
  std::vector<KrausChannel> branches;
  for (const auto& op : ops) branches.emplace_back(system, system, std::vector<ComplexMatrix>{op}, false);
  return QuantumInstrument(system, std::move(branches));
}

KrausChannel QuantumInstrument::summed_channel() const {
  std::vector<ComplexMatrix> ks;
  for (const auto& b : branches_) ks.insert(ks.end(), b.kraus().begin(), b.kraus().end());
  return KrausChannel(system_, system_, std::move(ks), true);
}

KrausChannel QuantumInstrument::joint_channel(const std::string& register_label) const {
  const std::size_t n = branches_.size();
  const CompositeSpace out = system_.concat(CompositeSpace::single(register_label, n, true));
  std::vector<ComplexMatrix> ks;
  for (std::size_t y = 0; y < n; ++y) {
    for (const auto& k : branches_[y].kraus()) ks.push_back(tensor(k, gates::ket(n, y)));
  }
  return KrausChannel(system_, out, std::move(ks), true);
}

std::vector<double> QuantumInstrument::probabilities(const ComplexMatrix& rho) const {
  std::vector<double> p;
  for (const auto& b : branches_) p.push_back(std::max(0.0, b.apply(rho).trace().real()));
  return p;
}

bool QuantumInstrument::is_projective(double tol) const {
  for (const auto& b : branches_) {
    if (b.kraus().size() != 1) return false;
    const ComplexMatrix& k = b.kraus().front();
    if (max_asymmetry(k) > tol || max_deviation(k * k, k) > tol) return false;
  }
  return true;
}

DensityMatrix instrument_apply(const QuantumInstrument& inst, const DensityMatrix& rho, const std::string& register_label) {
  const KrausChannel joint = inst.joint_channel(register_label);
  return DensityMatrix(joint.output_space(), joint.apply(rho.matrix()));
}

double groenewold_gain(const QuantumInstrument& inst, const ComplexMatrix& rho) {
  double gain = von_neumann(rho);
  for (const auto& b : inst.branches()) {
    const ComplexMatrix out = b.apply(rho);
    const double p = out.trace().real();
    if (p < 1e-14) continue;
    gain -= p * von_neumann(ComplexMatrix(out / p));
  }
  return gain;
}

double groenewold_gain(const QuantumInstrument& inst, const DensityMatrix& rho) { return groenewold_gain(inst, rho.matrix()); }

BdwReport bdw_bound(const QuantumInstrument& inst, const ComplexMatrix& rho) {
  BdwReport r;
  for (double p : inst.probabilities(rho)) {
    if (p > 0.0) r.H_Y -= p * std::log(p);
  }
  r.I_G = groenewold_gain(inst, rho);
  const ComplexMatrix back = adjoint_composed(inst.joint_channel(), rho);
  r.efficacy = back.trace().real();
  r.neg_log_efficacy = -std::log(r.efficacy);
  r.D_normalized = relative_entropy(rho, ComplexMatrix(back / r.efficacy));
  if (!r.D_normalized.is_finite()) {
    r.gap = ExtendedReal::inf();
  } else {
    r.gap = ExtendedReal::finite(r.H_Y - (r.D_normalized.value + r.neg_log_efficacy) - r.I_G);
  }
  return r;
}

ExtendedReal bdw_bound_gap(const QuantumInstrument& inst, const ComplexMatrix& rho) { return bdw_bound(inst, rho).gap; }

void IndirectMeasurementModel::validate() const {
  const auto d = static_cast<Eigen::Index>(system.dim() * apparatus.dim());
  if (interaction.rows() != d || interaction.cols() != d) throw DimensionMismatch("interaction does not act on A (x) M");
  if (!is_unitary(interaction)) throw InvalidChannel("interaction is not unitary");
  if (sigma.dim() != apparatus.dim()) throw DimensionMismatch("apparatus state dimension");
  ComplexMatrix total = ComplexMatrix::Zero(apparatus.dim(), apparatus.dim());
  for (std::size_t x = 0; x < pointer_projectors.size(); ++x) {
    const ComplexMatrix& p = pointer_projectors[x];
    if (max_asymmetry(p) > 1e-10 || max_deviation(p * p, p) > 1e-10) throw NotProjective("pointer operator is not a projector");
    for (std::size_t z = x + 1; z < pointer_projectors.size(); ++z) {
      if (max_abs(p * pointer_projectors[z]) > 1e-10) throw NotProjective("pointer projectors are not orthogonal");
    }
    total += p;
  }
  if (max_deviation(total, identity(apparatus.dim())) > 1e-10) throw NotProjective("pointer projectors are not complete");
}

QuantumInstrument IndirectMeasurementModel::realized_instrument() const {
  const auto da = static_cast<Eigen::Index>(system.dim());
  const auto dm = static_cast<Eigen::Index>(apparatus.dim());
  const auto sig = hermitian_eig(sigma.matrix());
  std::vector<KrausChannel> branches;
  for (const auto& proj : pointer_projectors) {
    const auto pe = hermitian_eig(proj);
    std::vector<ComplexMatrix> ks;
    for (Eigen::Index j = 0; j < dm; ++j) {
      if (pe.eigenvalues[j] < 0.5) continue;
      const ComplexVector bra = pe.eigenvectors.col(j).conjugate();
      for (Eigen::Index k = 0; k < dm; ++k) {
        const double q = sig.eigenvalues[k];
        if (!(q > 0.0)) continue;
        const ComplexVector ket = sig.eigenvectors.col(k);
        ComplexMatrix op(da, da);
        for (Eigen::Index a = 0; a < da; ++a) {
          for (Eigen::Index b = 0; b < da; ++b) {
            op(a, b) = std::sqrt(q) * (bra.transpose() * interaction.block(a * dm, b * dm, dm, dm) * ket)(0, 0);
          }
        }
        ks.push_back(std::move(op));
      }
    }
    if (ks.empty()) ks.push_back(ComplexMatrix::Zero(da, da));
    branches.emplace_back(system, system, std::move(ks), false);
  }
  return QuantumInstrument(system, std::move(branches));
}

IndirectMeasurementModel make_indirect_model(const CompositeSpace& system, const std::string& apparatus_label,
                                             const HamiltonianSpec& apparatus_hamiltonian,
                                             const ThermalParams& thermal, const ComplexMatrix& interaction,
                                             const std::vector<ComplexMatrix>& pointer_projectors) {
  IndirectMeasurementModel m;
  m.system = system;
  m.apparatus = CompositeSpace::single(apparatus_label, apparatus_hamiltonian.op.rows());
  m.hamiltonian = HamiltonianSpec(m.apparatus, apparatus_hamiltonian.op);
  m.thermal = thermal;
  m.sigma = gibbs_state(m.hamiltonian, thermal);
  m.interaction = interaction;
  m.pointer_projectors = pointer_projectors;
  m.validate();
  return m;
}

IndirectMeasurementModel dilate_projective_instrument(const QuantumInstrument& inst, const ApparatusParams& params,
                                                      const std::string& apparatus_label) {
  if (!inst.is_projective()) throw NotProjective("every branch must be a single orthogonal projector");
  const std::size_t n = inst.size();
  const std::size_t dm = std::max<std::size_t>(n, 2);
  const std::size_t da = inst.system().dim();

  ComplexMatrix u = ComplexMatrix::Zero(da * dm, da * dm);
  for (std::size_t y = 0; y < n; ++y) u += tensor(inst.branch(y).kraus().front(), gates::cyclic_shift(dm, y));

  std::vector<ComplexMatrix> pointers;
  for (std::size_t y = 0; y < n; ++y) pointers.push_back(gates::basis_projector(dm, y));
  for (std::size_t m = n; m < dm; ++m) pointers.back() += gates::basis_projector(dm, m);

  const ThermalParams thermal = ThermalParams::from_temperature(params.temperature);
  ComplexMatrix h = ComplexMatrix::Zero(dm, dm);
  if (params.kind == "pointer") {
    const double omega = params.beta_omega * params.temperature;
    h = omega * (identity(dm) - gates::basis_projector(dm, 0));
  } else if (params.kind != "degenerate") {
    throw DomainError("unknown apparatus kind '" + params.kind + "'");
  }
  return make_indirect_model(inst.system(), apparatus_label, HamiltonianSpec(apparatus_label, h), thermal, u, pointers);
}

double choi_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.input_space().dim() != b.input_space().dim() || a.output_space().dim() != b.output_space().dim()) {
    throw DimensionMismatch("channels act on different spaces");
  }
  return max_deviation(a.choi(), b.choi());
}

double branch_reproduction_error(const IndirectMeasurementModel& model, const QuantumInstrument& target) {
  const QuantumInstrument realized = model.realized_instrument();
  if (realized.size() != target.size()) throw DimensionMismatch("outcome counts differ");
  double worst = 0.0;
  for (std::size_t y = 0; y < target.size(); ++y) worst = std::max(worst, choi_distance(realized.branch(y), target.branch(y)));
  return worst;
}

HamiltonianSpec FlipDilation::bath_hamiltonian() const {
  if (!std::isfinite(gap)) throw DomainError("bath gap is infinite");
  return HamiltonianSpec::diagonal(joint_space.subspace({joint_space.factor(1).label}), bath_energies);
}

FlipDilation thermal_operation_flip(const ComplexMatrix& pauli, double p, double temperature, std::size_t degeneracy,
                                    const std::string& system_label, const std::string& bath_label) {
  if (degeneracy < 1) throw InvalidProbability("bath degeneracy must be at least 1");
  const double g = static_cast<double>(degeneracy);
  if (!(p >= 0.0) || p > g / (1.0 + g)) {
    throw InvalidProbability("flip probability " + std::to_string(p) + " needs a bath with p <= g/(1+g) = " +
                             std::to_string(g / (1.0 + g)));
  }
  const std::size_t db = degeneracy + 1;
  FlipDilation d;
  d.temperature = temperature;
  d.degeneracy = degeneracy;
  d.joint_space = CompositeSpace({{system_label, 2, false}, {bath_label, db, false}});
  d.gap = p > 0.0 ? temperature * std::log(g * (1.0 - p) / p) : std::numeric_limits<double>::infinity();
  d.bath_energies.assign(db, d.gap);
  d.bath_energies[0] = 0.0;
  d.bath_populations.assign(db, p / g);
  d.bath_populations[0] = 1.0 - p;
  d.bath_log_populations.assign(db, p > 0.0 ? std::log(p / g) : -std::numeric_limits<double>::infinity());
  d.bath_log_populations[0] = std::log1p(-p);
  ComplexMatrix tau = ComplexMatrix::Zero(db, db);
  for (std::size_t k = 0; k < db; ++k) tau(k, k) = d.bath_populations[k];
  d.bath_state = DensityMatrix(CompositeSpace::single(bath_label, db), tau);
  const ComplexMatrix p0 = gates::basis_projector(db, 0);
  d.unitary = tensor(identity(2), p0) + tensor(pauli, identity(db) - p0);
  d.channel = KrausChannel(CompositeSpace::single(system_label, 2), CompositeSpace::single(system_label, 2),
                           {std::sqrt(1.0 - p) * identity(2), std::sqrt(p) * pauli}, true);
  return d;
}

FlipDilation thermal_operation_bitflip(double p, double temperature, std::size_t degeneracy,
                                       const std::string& system_label, const std::string& bath_label) {
  return thermal_operation_flip(gates::pauli_x(), p, temperature, degeneracy, system_label, bath_label);
}

double thermality_diagnostic(const ComplexMatrix& u, const ComplexMatrix& h_total) {
  if (u.rows() != h_total.rows()) throw DimensionMismatch("unitary and Hamiltonian differ in size");
  const ComplexMatrix c = u * h_total - h_total * u;
  const RealVector s = hermitian_eigvals(c.adjoint() * c);
  return std::sqrt(std::max(0.0, s.maxCoeff()));
}

}  // namespace qec
