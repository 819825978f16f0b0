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

#include <array>
#include <span>
#include <string>
#include <vector>

#include "varqte/block.hpp"
#include "varqte/circuit.hpp"
#include "varqte/pauli.hpp"
#include "varqte/rng.hpp"
#include "varqte/state.hpp"

namespace varqte {

enum class Boundary { open, periodic };

/// Position of a block in the brickwork. Columns are 1-based circuit depth
/// positions; odd columns pair (2r-2, 2r-1), even columns pair (2r-1, 2r mod n)
/// where the wrap-around pair exists only under periodic boundary.
struct BlockId {
  int column = 1;
  int row = 1;
  int qubit_a = 0;  // first qubit of the pair (layout order, not sorted)
  int qubit_b = 1;
};

struct Block {
  BlockId id;
  std::array<double, kBlockParams> angles{};
};

/// Brickwork circuit of two-qubit blocks. Blocks are stored in application
/// order: column 1 first, rows ascending within a column.
struct Ansatz {
  int n_qubits = 0;
  int depth = 0;
  Boundary boundary = Boundary::open;
  std::vector<Block> blocks;

  int param_count() const { return kBlockParams * static_cast<int>(blocks.size()); }
  double angle(int flat_index) const;
  void set_angle(int flat_index, double value);
};

std::vector<BlockId> column_layout(int n_qubits, int column, Boundary boundary);

/// All blocks at the identity configuration; prepares exactly |0...0>.
Ansatz make_identity_ansatz(int n_qubits, int depth, Boundary boundary);

/// All angles drawn independently and uniformly from (-pi, pi].
Ansatz make_random_ansatz(int n_qubits, int depth, Boundary boundary, Rng& rng);

State prepare_state(const Ansatz& a);

/// Appends one column of identity-initialized blocks; the prepared state is
/// unchanged.
Ansatz grow_depth(const Ansatz& a);

/// The sub-circuit that determines expectations of observables supported on
/// the given qubits. register_order lists the cone qubits in compact-register
/// order; under periodic boundary a wrap-around cone is rotated so that block
/// pairs stay adjacent in the compact register.
struct CausalCone {
  std::vector<int> block_indices;   // indices into Ansatz::blocks, application order
  std::vector<int> qubits;          // sorted
  std::vector<int> register_order;  // cone qubits in compact order
  int width() const { return static_cast<int>(register_order.size()); }
};

/// Backward reachability from the support through shared qubits. The support
/// must be a single qubit or a nearest-neighbor pair (wrap pair allowed under
/// periodic boundary).
CausalCone causal_cone(const Ansatz& a, std::span<const int> support);

/// <psi|P|psi> computed on the compact cone register only. Equals the
/// full-state expectation.
double cone_expectation(const Ansatz& a, const PauliString& p);

/// sum_k h_k <P_k>, each term evaluated on its causal cone.
double energy(const Ansatz& a, const Hamiltonian& h);

/// Cone compiled to a compact-register circuit. Circuit parameter
/// 15*i + slot corresponds to cone block i (cone application order).
struct ConeCircuit {
  Circuit circuit;
  CausalCone cone;
  std::vector<int> compact_of_qubit;  // full-register qubit -> compact index (-1 outside)

  /// Observable with support inside the cone, remapped onto the register.
  PauliString remap(const PauliString& p) const;
};

ConeCircuit compile_cone(const Ansatz& a, const CausalCone& cone);

/// Whole ansatz as a flat circuit; parameter 15*b + slot matches
/// Ansatz::angle flat indexing.
Circuit compile_full(const Ansatz& a);

/// Versioned plain-text serialization for checkpoint/resume.
void save_ansatz(const Ansatz& a, const std::string& path);
Ansatz load_ansatz(const std::string& path);
std::string ansatz_to_text(const Ansatz& a);
Ansatz ansatz_from_text(const std::string& text);

}  // namespace varqte
