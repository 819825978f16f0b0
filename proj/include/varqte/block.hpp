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
#include <array>
#include <span>

#include "varqte/circuit.hpp"

namespace varqte {

inline constexpr int kBlockParams = 15;

/// Two-qubit block: a minimal universal construction with three CNOTs and 15
/// rotation angles. Gate order on the pair (a, b), applied left to right:
///
///   Rz(t0) Rx(t1) Rz(t2) on a,  Rz(t3) Rx(t4) Rz(t5) on b,
///   CNOT(b->a),  Rz(t6) on a,  Ry(t7) on b,
///   CNOT(a->b),  Ry(t8) on b,
///   CNOT(b->a),
///   Rz(t9) Rx(t10) Rz(t11) on a,  Rz(t12) Rx(t13) Rz(t14) on b,
///
/// followed by a fixed global phase exp(i pi/4). The phase compensates
/// det(CNOT)^3 = -1 so that the identity configuration below yields exactly
/// the identity matrix, which keeps depth growth and checkpoint comparisons
/// phase-free. At all-zero angles the block equals exp(i pi/4) * SWAP.
Eigen::Matrix4cd block_unitary(std::span<const double> angles);

/// Fixed per-block phase, as an angle: block = exp(i kBlockPhaseAngle) * gates.
inline constexpr double kBlockPhaseAngle = 0.78539816339744831;  // pi/4

/// Angle assignment for which the block is exactly the identity. Solved once
/// numerically (Gauss-Newton on U(theta) = e^{i phi} 1) and frozen here.
const std::array<double, kBlockParams>& identity_angles();

/// Append the block's gates to a circuit, acting on register qubits
/// (qa, qb) = (pair first, pair second), with parameter indices
/// param_base .. param_base+14 in the order t0..t14 above.
void append_block_gates(Circuit& c, int qa, int qb, std::span<const double> angles,
                        int param_base);

}  // namespace varqte
