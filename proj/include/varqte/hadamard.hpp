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

#include "varqte/circuit.hpp"
#include "varqte/pauli.hpp"

namespace varqte {

enum class HadamardPart { real_part, imag_part };

/// Ancilla-based circuit measuring Re or Im of <0|V^dag P U|0>. U and V must
/// share structure: same gate list with only rotation angles differing, so
/// that each difference becomes a single controlled rotation by the angle
/// gap. Differing fixed gates are rejected.
struct HadamardTestSpec {
  Circuit circuit_u;
  Circuit circuit_v;
  PauliString observable;
  HadamardPart part = HadamardPart::real_part;
};

/// Emulates the test exactly on a statevector with one prepended ancilla:
/// H on the ancilla, a phase gate for the imaginary part, U's gates with a
/// controlled substitution at each differing rotation, H, then the exact
/// expectation of Z (x) P.
double hadamard_test(const HadamardTestSpec& spec);

/// Number of controlled substitutions the test circuit needs (= differing
/// rotation angles between U and V).
int controlled_gate_count(const HadamardTestSpec& spec);

/// |<0|V^dag U|0>|^2: probability of the all-zeros outcome after running U
/// then V's adjoint.
double compute_uncompute_overlap(const Circuit& circuit_u, const Circuit& circuit_v);

}  // namespace varqte
