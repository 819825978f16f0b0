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

#include "varqte/state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace varqte {

namespace {

using cd = std::complex<double>;

void check_same_dims(const State& a, const State& b) {
  if (a.n_qubits != b.n_qubits || a.amps.size() != b.amps.size())
    throw std::invalid_argument("state dimension mismatch");
}

void check_op_dims(const State& s, const PauliString& p) {
  if (s.n_qubits != p.n_qubits()) throw std::invalid_argument("operator/state dimension mismatch");
}

// i^k for k mod 4
cd i_power(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

State zero_state(int n_qubits) { return basis_state(n_qubits, 0); }

State basis_state(int n_qubits, std::uint64_t index) {
  if (n_qubits < 1 || n_qubits > 24) throw std::invalid_argument("qubit count out of range");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (index >= static_cast<std::uint64_t>(dim))
    throw std::invalid_argument("basis index out of range");
  State s{n_qubits, Eigen::VectorXcd::Zero(dim)};
  s.amps[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

std::complex<double> inner(const State& bra, const State& ket) {
  check_same_dims(bra, ket);
  return bra.amps.dot(ket.amps);
}

double distance_sq(const State& a, const State& b) {
  check_same_dims(a, b);
  return (a.amps - b.amps).squaredNorm();
}

void apply_unitary_inplace(State& state, const Eigen::MatrixXcd& u, std::span<const int> targets) {
  const int n = state.n_qubits;
  const int k = static_cast<int>(targets.size());
  if (k < 1 || k > n) throw std::invalid_argument("apply_unitary: bad target count");
  const Eigen::Index dim_k = Eigen::Index{1} << k;
  if (u.rows() != dim_k || u.cols() != dim_k)
    throw std::invalid_argument("apply_unitary: matrix size does not match target count");
  std::uint64_t seen = 0;
  for (int q : targets) {
    if (q < 0 || q >= n) throw std::invalid_argument("apply_unitary: target out of range");
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) throw std::invalid_argument("apply_unitary: duplicate target");
    seen |= bit;
  }
  if ((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim_k, dim_k)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("apply_unitary: matrix is not unitary");

  // offset of local index j: bit (k-1-m) of j belongs to targets[m]
  std::vector<std::uint64_t> offset(static_cast<size_t>(dim_k), 0);
  std::uint64_t target_mask = 0;
  for (int m = 0; m < k; ++m) target_mask |= std::uint64_t{1} << (n - 1 - targets[m]);
  for (Eigen::Index j = 0; j < dim_k; ++j) {
    std::uint64_t off = 0;
    for (int m = 0; m < k; ++m)
      if ((j >> (k - 1 - m)) & 1) off |= std::uint64_t{1} << (n - 1 - targets[m]);
    offset[static_cast<size_t>(j)] = off;
  }

  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::VectorXcd scratch(dim_k);
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (Eigen::Index j = 0; j < dim_k; ++j)
      scratch[j] = state.amps[static_cast<Eigen::Index>(base | offset[static_cast<size_t>(j)])];
    scratch = u * scratch;
    for (Eigen::Index j = 0; j < dim_k; ++j)
      state.amps[static_cast<Eigen::Index>(base | offset[static_cast<size_t>(j)])] = scratch[j];
  }
}

State apply_unitary(const State& state, const Eigen::MatrixXcd& u, std::span<const int> targets) {
  State out = state;
  apply_unitary_inplace(out, u, targets);
  return out;
}

State pauli_apply(const PauliString& p, const State& psi) {
  check_op_dims(psi, p);
  const std::uint64_t flip = p.x_mask();
  const std::uint64_t zmask = p.z_mask();
  const cd y_phase = i_power(p.y_count());
  State out{psi.n_qubits, Eigen::VectorXcd(psi.amps.size())};
  const std::uint64_t dim = std::uint64_t{1} << psi.n_qubits;
  for (std::uint64_t i = 0; i < dim; ++i) {
    const std::uint64_t src = i ^ flip;
    const double sign = (std::popcount(zmask & src) & 1) ? -1.0 : 1.0;
    out.amps[static_cast<Eigen::Index>(i)] =
        y_phase * sign * psi.amps[static_cast<Eigen::Index>(src)];
  }
  return out;
}

double pauli_expectation(const State& psi, const PauliString& p) {
  check_op_dims(psi, p);
  if (p.is_identity()) return psi.amps.squaredNorm();
  const State pp = pauli_apply(p, psi);
  return psi.amps.dot(pp.amps).real();
}

std::complex<double> transition_amplitude(const State& bra, const PauliString& p,
                                          const State& ket) {
  check_same_dims(bra, ket);
  check_op_dims(ket, p);
  if (p.is_identity()) return inner(bra, ket);
  const State pk = pauli_apply(p, ket);
  return bra.amps.dot(pk.amps);
}

State exp_pauli_action(const TrotterTerm& term, const State& psi) {
  check_op_dims(psi, term.op);
  const double a = term.tau * term.coeff;
  State out{psi.n_qubits, Eigen::VectorXcd(psi.amps.size())};
  const State pp = pauli_apply(term.op, psi);
  if (term.kind == TimeKind::real) {
    out.amps = std::cos(a) * psi.amps - cd(0, 1) * std::sin(a) * pp.amps;
  } else {
    out.amps = std::cosh(a) * psi.amps - std::sinh(a) * pp.amps;
  }
  return out;
}

}  // namespace varqte
