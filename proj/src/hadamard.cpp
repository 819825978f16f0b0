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

#include "varqte/hadamard.hpp"

#include <cmath>
#include <stdexcept>

namespace varqte {

namespace {

using cd = std::complex<double>;

void check_spec(const HadamardTestSpec& spec) {
  const Circuit& u = spec.circuit_u;
  const Circuit& v = spec.circuit_v;
  if (u.n_qubits != v.n_qubits)
    throw std::invalid_argument("hadamard_test: register size mismatch");
  if (spec.observable.n_qubits() != u.n_qubits)
    throw std::invalid_argument("hadamard_test: observable size mismatch");
  if (u.gates.size() != v.gates.size())
    throw std::invalid_argument("hadamard_test: circuits must share structure");
  for (size_t i = 0; i < u.gates.size(); ++i) {
    const Gate& gu = u.gates[i];
    const Gate& gv = v.gates[i];
    if (gu.kind != gv.kind || gu.q0 != gv.q0 || gu.q1 != gv.q1)
      throw std::invalid_argument("hadamard_test: circuits must share structure");
    if (!gu.is_rotation() && gu.angle != gv.angle)
      throw std::invalid_argument("hadamard_test: differing fixed gates are not supported");
  }
}

Eigen::Matrix2cd rotation_2x2(Gate::Kind kind, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix2cd m;
  switch (kind) {
    case Gate::Kind::rx: m << c, cd(0, -s), cd(0, -s), c; break;
    case Gate::Kind::ry: m << c, -s, s, c; break;
    case Gate::Kind::rz: m << cd(c, -s), 0, 0, cd(c, s); break;
    default: throw std::logic_error("rotation_2x2: not a rotation");
  }
  return m;
}

}  // namespace

double hadamard_test(const HadamardTestSpec& spec) {
  check_spec(spec);
  const int w = spec.circuit_u.n_qubits;
  State psi = zero_state(1 + w);

  Eigen::Matrix2cd had;
  had << 1, 1, 1, -1;
  had /= std::sqrt(2.0);
  const std::array<int, 1> ancilla{0};
  apply_unitary_inplace(psi, had, ancilla);
  if (spec.part == HadamardPart::imag_part) {
    // phase gate on the ancilla; this sign convention makes the test equal
    // +Im of the matrix element
    Eigen::Matrix2cd s_gate;
    s_gate << 1, 0, 0, cd(0, 1);
    apply_unitary_inplace(psi, s_gate, ancilla);
  }

  for (size_t i = 0; i < spec.circuit_u.gates.size(); ++i) {
    Gate g = spec.circuit_u.gates[i];
    g.q0 += 1;
    if (g.q1 >= 0) g.q1 += 1;
    apply_gate(psi, g);
    const Gate& gv = spec.circuit_v.gates[i];
    if (g.is_rotation() && gv.angle != spec.circuit_u.gates[i].angle) {
      // controlled substitution: rotation by the angle difference
      const double delta = gv.angle - spec.circuit_u.gates[i].angle;
      Eigen::Matrix4cd ctrl = Eigen::Matrix4cd::Identity();
      ctrl.block<2, 2>(2, 2) = rotation_2x2(g.kind, delta);
      const std::array<int, 2> targets{0, g.q0};
      apply_unitary_inplace(psi, ctrl, targets);
    }
  }
  apply_unitary_inplace(psi, had, ancilla);

  // exact expectation of Z (x) P
  const PauliString z_obs(1 + w, "Z" + spec.observable.to_string());
  return pauli_expectation(psi, z_obs);
}

int controlled_gate_count(const HadamardTestSpec& spec) {
  check_spec(spec);
  int count = 0;
  for (size_t i = 0; i < spec.circuit_u.gates.size(); ++i) {
    const Gate& gu = spec.circuit_u.gates[i];
    if (gu.is_rotation() && gu.angle != spec.circuit_v.gates[i].angle) ++count;
  }
  return count;
}

double compute_uncompute_overlap(const Circuit& circuit_u, const Circuit& circuit_v) {
  if (circuit_u.n_qubits != circuit_v.n_qubits)
    throw std::invalid_argument("compute_uncompute_overlap: register size mismatch");
  State psi = run_circuit(circuit_u);
  apply_circuit_adjoint(psi, circuit_v);
  return std::norm(psi.amps[0]);
}

}  // namespace varqte
