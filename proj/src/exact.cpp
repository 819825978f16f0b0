// Copyright 2026 The varqte authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "varqte/exact.hpp"

#include <stdexcept>

namespace varqte {

namespace {

constexpr int kMaxDenseQubits = 12;

void check_dense_feasible(const Hamiltonian& h) {
  if (h.n_qubits < 1 || h.n_qubits > kMaxDenseQubits)
    throw std::invalid_argument("dense oracle limited to 1..12 qubits");
  for (const auto& t : h.terms)
    if (t.op.n_qubits() != h.n_qubits)
      throw std::invalid_argument("Hamiltonian term qubit count mismatch");
}

}  // namespace

Eigen::MatrixXcd hamiltonian_dense(const Hamiltonian& h) {
  check_dense_feasible(h);
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  State basis{h.n_qubits, Eigen::VectorXcd::Zero(dim)};
  for (const auto& term : h.terms) {
    // each column of P has a single entry: P|j> = phase |j ^ flip>
    basis.amps.setZero();
    for (Eigen::Index j = 0; j < dim; ++j) {
      basis.amps[j] = 1.0;
      const State pj = pauli_apply(term.op, basis);
      basis.amps[j] = 0.0;
      const auto i = static_cast<Eigen::Index>(static_cast<std::uint64_t>(j) ^ term.op.x_mask());
      m(i, j) += term.coeff * pj.amps[i];
    }
  }
  return m;
}

bool is_real_in_z_basis(const Hamiltonian& h) {
  for (const auto& t : h.terms)
    if (t.op.y_count() % 2 != 0) return false;
  return true;
}

ExactEvolver::ExactEvolver(const Hamiltonian& h) : n_qubits_(h.n_qubits) {
  check_dense_feasible(h);
  const Eigen::MatrixXcd m = hamiltonian_dense(h);
  if (is_real_in_z_basis(h)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real());
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    evals_ = solver.eigenvalues();
    evecs_ = solver.eigenvectors().cast<std::complex<double>>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    evals_ = solver.eigenvalues();
    evecs_ = solver.eigenvectors();
  }
}

State ExactEvolver::evolve(const State& psi, double t, TimeKind kind) const {
  if (psi.n_qubits != n_qubits_) throw std::invalid_argument("state dimension mismatch");
  const Eigen::VectorXcd coeffs = evecs_.adjoint() * psi.amps;
  Eigen::VectorXcd scaled(coeffs.size());
  if (kind == TimeKind::real) {
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
      scaled[i] = std::exp(std::complex<double>(0, -t * evals_[i])) * coeffs[i];
  } else {
    // damp relative to the ground energy to avoid overflow at large t; the
    // overall scale drops out in the normalization below
    const double e0 = evals_.minCoeff();
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
      scaled[i] = std::exp(-t * (evals_[i] - e0)) * coeffs[i];
  }
  State out{n_qubits_, evecs_ * scaled};
  if (kind == TimeKind::imaginary) {
    const double norm = out.amps.norm();
    if (norm == 0.0) throw std::runtime_error("imaginary evolution annihilated the state");
    out.amps /= norm;
  }
  return out;
}

State exact_evolve(const Hamiltonian& h, const State& psi, double t, TimeKind kind) {
  return ExactEvolver(h).evolve(psi, t, kind);
}

double ground_energy(const Hamiltonian& h) {
  check_dense_feasible(h);
  const Eigen::MatrixXcd m = hamiltonian_dense(h);
  if (is_real_in_z_basis(h)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace varqte
