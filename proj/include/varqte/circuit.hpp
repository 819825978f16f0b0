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

#include <vector>

#include "varqte/pauli.hpp"
#include "varqte/state.hpp"

namespace varqte {

/// One circuit element. Rotations follow the convention U(theta) =
/// exp(-i theta G) with G the full Pauli (no half angle), so U(pi/2) = -iG
/// and shifting any angle by pi flips the sign of the whole circuit state.
struct Gate {
  enum class Kind { rx, ry, rz, cnot, phase };

  Kind kind = Kind::rz;
  int q0 = 0;       // rotation target, or cnot control
  int q1 = -1;      // cnot target
  double angle = 0.0;
  int param = -1;   // index into the owner's parameter list; -1 = fixed

  bool is_rotation() const { return kind == Kind::rx || kind == Kind::ry || kind == Kind::rz; }
};

/// Flat gate list on a small register. Parameterized gates carry their
/// current angle inline; param indices are dense in [0, param_count).
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  int param_count = 0;

  std::vector<double> parameters() const;
  void set_parameters(std::span<const double> values);
};

/// Generator Pauli of a rotation gate on the circuit register.
PauliString rotation_generator(const Gate& g, int n_qubits);

void apply_gate(State& psi, const Gate& g);
void apply_gate_with_angle(State& psi, const Gate& g, double angle);
void apply_gate_adjoint(State& psi, const Gate& g);

void apply_circuit(State& psi, const Circuit& c);
void apply_circuit_adjoint(State& psi, const Circuit& c);

/// Circuit applied to |0...0>.
State run_circuit(const Circuit& c);

/// d|psi>/d theta_p: runs the circuit with -iG inserted at the gate carrying
/// parameter p. Used by the variational-principle machinery.
State run_circuit_derivative(const Circuit& c, int param);

}  // namespace varqte
