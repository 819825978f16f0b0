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

#include "varqte/block.hpp"

#include <cmath>
#include <stdexcept>

namespace varqte {

namespace {

void check_angles(std::span<const double> angles) {
  if (angles.size() != kBlockParams) throw std::invalid_argument("block: expected 15 angles");
  for (double a : angles)
    if (!std::isfinite(a)) throw std::invalid_argument("block: non-finite angle");
}

}  // namespace

void append_block_gates(Circuit& c, int qa, int qb, std::span<const double> angles,
                        int param_base) {
  check_angles(angles);
  using K = Gate::Kind;
  auto rot = [&](K kind, int q, int slot) {
    c.gates.push_back({kind, q, -1, angles[static_cast<size_t>(slot)],
                       param_base < 0 ? -1 : param_base + slot});
  };
  auto cnot = [&](int control, int target) {
    c.gates.push_back({K::cnot, control, target, 0.0, -1});
  };
  rot(K::rz, qa, 0);
  rot(K::rx, qa, 1);
  rot(K::rz, qa, 2);
  rot(K::rz, qb, 3);
  rot(K::rx, qb, 4);
  rot(K::rz, qb, 5);
  cnot(qb, qa);
  rot(K::rz, qa, 6);
  rot(K::ry, qb, 7);
  cnot(qa, qb);
  rot(K::ry, qb, 8);
  cnot(qb, qa);
  rot(K::rz, qa, 9);
  rot(K::rx, qa, 10);
  rot(K::rz, qa, 11);
  rot(K::rz, qb, 12);
  rot(K::rx, qb, 13);
  rot(K::rz, qb, 14);
  c.gates.push_back({K::phase, 0, -1, kBlockPhaseAngle, -1});
}

Eigen::Matrix4cd block_unitary(std::span<const double> angles) {
  check_angles(angles);
  Circuit c;
  c.n_qubits = 2;
  append_block_gates(c, 0, 1, angles, -1);
  Eigen::Matrix4cd u;
  for (int col = 0; col < 4; ++col) {
    State psi = basis_state(2, static_cast<std::uint64_t>(col));
    apply_circuit(psi, c);
    u.col(col) = psi.amps;
  }
  return u;
}

const std::array<double, kBlockParams>& identity_angles() {
  // Gauss-Newton solution of U(theta) = 1 for the gate order above
  // (residual below 1e-15); the core angles are exactly {3pi/4, pi/4, pi/4}.
  static const std::array<double, kBlockParams> kIdentityAngles = {
      -0.68702948364641792,
      -2.7403192574041575,
      1.6270460001572034,
      -0.93657965246378427,
      -2.5012873501208763,
      1.0790238944016985,
      2.3561944901923448,   // 3 pi / 4
      0.78539816339744828,  // pi / 4
      0.78539816339744828,  // pi / 4
      2.4124441635546519,
      1.9720697229805324,
      2.2578258104413145,
      0.29362573100425016,
      0.93049102332597977,
      0.93657965246378416,
  };
  return kIdentityAngles;
}

}  // namespace varqte
