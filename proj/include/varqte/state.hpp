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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>

#include "varqte/pauli.hpp"

namespace varqte {

/// Exact complex statevector. Qubit 0 is the most significant bit of the
/// amplitude index: for n = 2, |10> (qubit 0 = 1) lives at index 2.
struct State {
  int n_qubits = 0;
  Eigen::VectorXcd amps;
};

State zero_state(int n_qubits);
State basis_state(int n_qubits, std::uint64_t index);

/// <bra|ket>
std::complex<double> inner(const State& bra, const State& ket);

/// Squared Euclidean distance ||a - b||^2.
double distance_sq(const State& a, const State& b);

/// Apply a dense unitary on k target qubits. targets[0] is the most
/// significant index of u. Throws on duplicate or out-of-range targets and
/// on matrices failing ||u^dag u - 1|| < 1e-10.
void apply_unitary_inplace(State& state, const Eigen::MatrixXcd& u, std::span<const int> targets);
State apply_unitary(const State& state, const Eigen::MatrixXcd& u, std::span<const int> targets);

/// P|psi>
State pauli_apply(const PauliString& p, const State& psi);

/// <psi|P|psi>, real for the Hermitian P.
double pauli_expectation(const State& psi, const PauliString& p);

/// <bra|P|ket>
std::complex<double> transition_amplitude(const State& bra, const PauliString& p,
                                          const State& ket);

/// Action of one product-formula factor. Real kind applies the unitary
/// cos(tau h) psi - i sin(tau h) P psi; imaginary kind returns the
/// unnormalized cosh(tau h) psi - sinh(tau h) P psi.
State exp_pauli_action(const TrotterTerm& term, const State& psi);

}  // namespace varqte
