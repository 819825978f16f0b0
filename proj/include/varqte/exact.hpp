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

#include "varqte/pauli.hpp"
#include "varqte/state.hpp"

namespace varqte {

/// Dense 2^n x 2^n matrix of H. Limited to n <= 12.
Eigen::MatrixXcd hamiltonian_dense(const Hamiltonian& h);

/// True when every term has an even number of Y factors, i.e. the dense
/// matrix is real in the computational basis (cheaper eigensolve path).
bool is_real_in_z_basis(const Hamiltonian& h);

/// Exact-evolution oracle backed by a cached dense eigendecomposition.
class ExactEvolver {
 public:
  explicit ExactEvolver(const Hamiltonian& h);

  /// Real kind: exp(-i t H) |psi>. Imaginary kind: normalized
  /// exp(-t H)|psi> / ||.|| so the result is comparable with circuit states.
  State evolve(const State& psi, double t, TimeKind kind) const;

  double ground_energy() const { return evals_.minCoeff(); }
  const Eigen::VectorXd& eigenvalues() const { return evals_; }

 private:
  int n_qubits_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXcd evecs_;
};

State exact_evolve(const Hamiltonian& h, const State& psi, double t, TimeKind kind);

/// Smallest eigenvalue via a dense eigenvalues-only solve.
double ground_energy(const Hamiltonian& h);

}  // namespace varqte
