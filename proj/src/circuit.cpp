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

#include "varqte/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace varqte {

namespace {

using cd = std::complex<double>;

// 2x2 action on all pairs differing in the bit of qubit q
inline void apply_1q(Eigen::VectorXcd& amps, int n, int q, cd m00, cd m01, cd m10, cd m11) {
  const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
  const std::uint64_t dim = amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | bit);
    const cd a0 = amps[i0];
    const cd a1 = amps[i1];
    amps[i0] = m00 * a0 + m01 * a1;
    amps[i1] = m10 * a0 + m11 * a1;
  }
}

inline void apply_cnot(Eigen::VectorXcd& amps, int n, int control, int target) {
  const std::uint64_t cbit = std::uint64_t{1} << (n - 1 - control);
  const std::uint64_t tbit = std::uint64_t{1} << (n - 1 - target);
  const std::uint64_t dim = amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & cbit) && !(i & tbit))
      std::swap(amps[static_cast<Eigen::Index>(i)], amps[static_cast<Eigen::Index>(i | tbit)]);
  }
}

void apply_rotation(Eigen::VectorXcd& amps, int n, const Gate& g, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  switch (g.kind) {
    case Gate::Kind::rx:
      apply_1q(amps, n, g.q0, c, cd(0, -s), cd(0, -s), c);
      break;
    case Gate::Kind::ry:
      apply_1q(amps, n, g.q0, c, -s, s, c);
      break;
    case Gate::Kind::rz:
      apply_1q(amps, n, g.q0, cd(c, -s), 0, 0, cd(c, s));
      break;
    default:
      throw std::logic_error("apply_rotation: not a rotation gate");
  }
}

}  // namespace

std::vector<double> Circuit::parameters() const {
  std::vector<double> out(static_cast<size_t>(param_count), 0.0);
  for (const auto& g : gates)
    if (g.param >= 0) out[static_cast<size_t>(g.param)] = g.angle;
  return out;
}

void Circuit::set_parameters(std::span<const double> values) {
  if (static_cast<int>(values.size()) != param_count)
    throw std::invalid_argument("set_parameters: wrong arity");
  for (auto& g : gates)
    if (g.param >= 0) g.angle = values[static_cast<size_t>(g.param)];
}

PauliString rotation_generator(const Gate& g, int n_qubits) {
  switch (g.kind) {
    case Gate::Kind::rx: return PauliString::single(n_qubits, g.q0, 'X');
    case Gate::Kind::ry: return PauliString::single(n_qubits, g.q0, 'Y');
    case Gate::Kind::rz: return PauliString::single(n_qubits, g.q0, 'Z');
    default: throw std::invalid_argument("rotation_generator: not a rotation gate");
  }
}

void apply_gate_with_angle(State& psi, const Gate& g, double angle) {
  switch (g.kind) {
    case Gate::Kind::cnot:
      apply_cnot(psi.amps, psi.n_qubits, g.q0, g.q1);
      break;
    case Gate::Kind::phase:
      psi.amps *= std::exp(cd(0, angle));
      break;
    default:
      apply_rotation(psi.amps, psi.n_qubits, g, angle);
      break;
  }
}

void apply_gate(State& psi, const Gate& g) { apply_gate_with_angle(psi, g, g.angle); }

void apply_gate_adjoint(State& psi, const Gate& g) {
  if (g.kind == Gate::Kind::cnot) {
    apply_cnot(psi.amps, psi.n_qubits, g.q0, g.q1);
    return;
  }
  apply_gate_with_angle(psi, g, -g.angle);
}

void apply_circuit(State& psi, const Circuit& c) {
  if (psi.n_qubits != c.n_qubits) throw std::invalid_argument("circuit/state dimension mismatch");
  for (const auto& g : c.gates) apply_gate(psi, g);
}

void apply_circuit_adjoint(State& psi, const Circuit& c) {
  if (psi.n_qubits != c.n_qubits) throw std::invalid_argument("circuit/state dimension mismatch");
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) apply_gate_adjoint(psi, *it);
}

State run_circuit(const Circuit& c) {
  State psi = zero_state(c.n_qubits);
  apply_circuit(psi, c);
  return psi;
}

State run_circuit_derivative(const Circuit& c, int param) {
  if (param < 0 || param >= c.param_count)
    throw std::invalid_argument("run_circuit_derivative: parameter index out of range");
  State psi = zero_state(c.n_qubits);
  bool found = false;
  for (const auto& g : c.gates) {
    apply_gate(psi, g);
    if (g.param == param) {
      // d/dtheta exp(-i theta G) = -i G exp(-i theta G)
      psi = pauli_apply(rotation_generator(g, c.n_qubits), psi);
      psi.amps *= cd(0, -1);
      found = true;
    }
  }
  if (!found) throw std::logic_error("run_circuit_derivative: parameter not present");
  return psi;
}

}  // namespace varqte
