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

#include "varqte/ansatz.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace varqte {

namespace {

void check_shape(int n_qubits, int depth) {
  if (n_qubits < 4 || n_qubits % 2 != 0)
    throw std::invalid_argument("ansatz: n_qubits must be an even integer >= 4");
  if (depth < 1) throw std::invalid_argument("ansatz: depth must be >= 1");
}

std::vector<Block> make_blocks(int n_qubits, int depth, Boundary boundary) {
  std::vector<Block> blocks;
  for (int col = 1; col <= depth; ++col)
    for (const BlockId& id : column_layout(n_qubits, col, boundary))
      blocks.push_back({id, identity_angles()});
  return blocks;
}

const char* boundary_name(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }

}  // namespace

double Ansatz::angle(int flat_index) const {
  const int b = flat_index / kBlockParams;
  const int s = flat_index % kBlockParams;
  if (flat_index < 0 || b >= static_cast<int>(blocks.size()))
    throw std::invalid_argument("ansatz: parameter index out of range");
  return blocks[static_cast<size_t>(b)].angles[static_cast<size_t>(s)];
}

void Ansatz::set_angle(int flat_index, double value) {
  const int b = flat_index / kBlockParams;
  const int s = flat_index % kBlockParams;
  if (flat_index < 0 || b >= static_cast<int>(blocks.size()))
    throw std::invalid_argument("ansatz: parameter index out of range");
  blocks[static_cast<size_t>(b)].angles[static_cast<size_t>(s)] = value;
}

std::vector<BlockId> column_layout(int n_qubits, int column, Boundary boundary) {
  check_shape(n_qubits, 1);
  if (column < 1) throw std::invalid_argument("ansatz: column must be >= 1");
  std::vector<BlockId> out;
  const int half = n_qubits / 2;
  if (column % 2 == 1) {
    for (int r = 1; r <= half; ++r) out.push_back({column, r, 2 * r - 2, 2 * r - 1});
  } else {
    for (int r = 1; r <= half - 1; ++r) out.push_back({column, r, 2 * r - 1, 2 * r});
    if (boundary == Boundary::periodic) out.push_back({column, half, n_qubits - 1, 0});
  }
  return out;
}

Ansatz make_identity_ansatz(int n_qubits, int depth, Boundary boundary) {
  check_shape(n_qubits, depth);
  return {n_qubits, depth, boundary, make_blocks(n_qubits, depth, boundary)};
}

Ansatz make_random_ansatz(int n_qubits, int depth, Boundary boundary, Rng& rng) {
  Ansatz a = make_identity_ansatz(n_qubits, depth, boundary);
  for (auto& block : a.blocks)
    for (auto& angle : block.angles) angle = rng.angle();
  return a;
}

State prepare_state(const Ansatz& a) {
  State psi = zero_state(a.n_qubits);
  for (const auto& block : a.blocks) {
    const std::array<int, 2> targets{block.id.qubit_a, block.id.qubit_b};
    apply_unitary_inplace(psi, block_unitary(block.angles), targets);
  }
  return psi;
}

Ansatz grow_depth(const Ansatz& a) {
  Ansatz out = a;
  out.depth = a.depth + 1;
  for (const BlockId& id : column_layout(a.n_qubits, out.depth, a.boundary))
    out.blocks.push_back({id, identity_angles()});
  return out;
}

CausalCone causal_cone(const Ansatz& a, std::span<const int> support) {
  if (support.empty()) throw std::invalid_argument("causal_cone: empty support");
  if (support.size() > 2) throw std::invalid_argument("causal_cone: support wider than a pair");
  std::set<int> active;
  for (int q : support) {
    if (q < 0 || q >= a.n_qubits) throw std::invalid_argument("causal_cone: qubit out of range");
    active.insert(q);
  }
  if (active.size() == 2) {
    const int lo = *active.begin();
    const int hi = *active.rbegin();
    const bool adjacent = hi - lo == 1;
    const bool wrap = a.boundary == Boundary::periodic && lo == 0 && hi == a.n_qubits - 1;
    if (!adjacent && !wrap)
      throw std::invalid_argument("causal_cone: support must be a nearest-neighbor pair");
  }

  // backward reachability: a block joins the cone when it touches an active
  // qubit, and then activates both of its qubits for earlier columns
  CausalCone cone;
  for (int col = a.depth; col >= 1; --col) {
    for (int i = 0; i < static_cast<int>(a.blocks.size()); ++i) {
      const BlockId& id = a.blocks[static_cast<size_t>(i)].id;
      if (id.column != col) continue;
      if (active.count(id.qubit_a) || active.count(id.qubit_b)) {
        cone.block_indices.push_back(i);
        active.insert(id.qubit_a);
        active.insert(id.qubit_b);
      }
    }
  }
  std::sort(cone.block_indices.begin(), cone.block_indices.end());
  cone.qubits.assign(active.begin(), active.end());

  // compact-register order: rotate a wrap-around cone so block pairs stay
  // adjacent (start after the largest circular gap)
  cone.register_order = cone.qubits;
  if (a.boundary == Boundary::periodic &&
      static_cast<int>(cone.qubits.size()) < a.n_qubits) {
    const int m = static_cast<int>(cone.qubits.size());
    int best_gap = cone.qubits.front() + a.n_qubits - cone.qubits.back();
    int start = 0;  // wrap gap wins ties: plain sorted order
    for (int i = 0; i + 1 < m; ++i) {
      const int gap = cone.qubits[static_cast<size_t>(i + 1)] - cone.qubits[static_cast<size_t>(i)];
      if (gap > best_gap) {
        best_gap = gap;
        start = i + 1;
      }
    }
    if (start != 0) {
      cone.register_order.clear();
      for (int i = 0; i < m; ++i)
        cone.register_order.push_back(cone.qubits[static_cast<size_t>((start + i) % m)]);
    }
  }
  return cone;
}

ConeCircuit compile_cone(const Ansatz& a, const CausalCone& cone) {
  ConeCircuit cc;
  cc.cone = cone;
  cc.compact_of_qubit.assign(static_cast<size_t>(a.n_qubits), -1);
  for (int c = 0; c < cone.width(); ++c)
    cc.compact_of_qubit[static_cast<size_t>(cone.register_order[static_cast<size_t>(c)])] = c;
  cc.circuit.n_qubits = cone.width();
  int param_base = 0;
  for (int idx : cone.block_indices) {
    const Block& block = a.blocks[static_cast<size_t>(idx)];
    const int ca = cc.compact_of_qubit[static_cast<size_t>(block.id.qubit_a)];
    const int cb = cc.compact_of_qubit[static_cast<size_t>(block.id.qubit_b)];
    append_block_gates(cc.circuit, ca, cb, block.angles, param_base);
    param_base += kBlockParams;
  }
  cc.circuit.param_count = param_base;
  return cc;
}

PauliString ConeCircuit::remap(const PauliString& p) const {
  std::string factors(static_cast<size_t>(cone.width()), 'I');
  for (int q : p.support()) {
    const int c = compact_of_qubit[static_cast<size_t>(q)];
    if (c < 0) throw std::invalid_argument("cone remap: observable support outside the cone");
    factors[static_cast<size_t>(c)] = p.factor(q);
  }
  return {cone.width(), factors};
}

Circuit compile_full(const Ansatz& a) {
  Circuit c;
  c.n_qubits = a.n_qubits;
  int param_base = 0;
  for (const auto& block : a.blocks) {
    append_block_gates(c, block.id.qubit_a, block.id.qubit_b, block.angles, param_base);
    param_base += kBlockParams;
  }
  c.param_count = param_base;
  return c;
}

double cone_expectation(const Ansatz& a, const PauliString& p) {
  if (p.n_qubits() != a.n_qubits)
    throw std::invalid_argument("cone_expectation: dimension mismatch");
  const std::vector<int> support = p.support();
  if (support.empty()) return 1.0;
  const CausalCone cone = causal_cone(a, support);
  const ConeCircuit cc = compile_cone(a, cone);
  const State psi = run_circuit(cc.circuit);
  return pauli_expectation(psi, cc.remap(p));
}

double energy(const Ansatz& a, const Hamiltonian& h) {
  if (h.n_qubits != a.n_qubits) throw std::invalid_argument("energy: dimension mismatch");
  double e = 0.0;
  for (const auto& term : h.terms) e += term.coeff * cone_expectation(a, term.op);
  return e;
}

std::string ansatz_to_text(const Ansatz& a) {
  std::ostringstream out;
  out << "varqte-ansatz v1\n";
  out << "n_qubits " << a.n_qubits << "\n";
  out << "depth " << a.depth << "\n";
  out << "boundary " << boundary_name(a.boundary) << "\n";
  out << "blocks " << a.blocks.size() << "\n";
  char buf[32];
  for (const auto& block : a.blocks) {
    out << "block " << block.id.column << " " << block.id.row << " " << block.id.qubit_a << " "
        << block.id.qubit_b << "\n";
    for (int s = 0; s < kBlockParams; ++s) {
      std::snprintf(buf, sizeof buf, "%.17g", block.angles[static_cast<size_t>(s)]);
      out << buf << (s + 1 == kBlockParams ? "\n" : " ");
    }
  }
  return out.str();
}

Ansatz ansatz_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header, version, key, value;
  in >> header >> version;
  if (header != "varqte-ansatz" || version != "v1")
    throw std::runtime_error("ansatz: unrecognized file header");
  Ansatz a;
  size_t block_count = 0;
  in >> key >> a.n_qubits;
  if (key != "n_qubits") throw std::runtime_error("ansatz: expected n_qubits");
  in >> key >> a.depth;
  if (key != "depth") throw std::runtime_error("ansatz: expected depth");
  in >> key >> value;
  if (key != "boundary") throw std::runtime_error("ansatz: expected boundary");
  if (value == "open") a.boundary = Boundary::open;
  else if (value == "periodic") a.boundary = Boundary::periodic;
  else throw std::runtime_error("ansatz: unknown boundary");
  in >> key >> block_count;
  if (key != "blocks") throw std::runtime_error("ansatz: expected block count");
  for (size_t i = 0; i < block_count; ++i) {
    Block b;
    in >> key >> b.id.column >> b.id.row >> b.id.qubit_a >> b.id.qubit_b;
    if (key != "block" || !in) throw std::runtime_error("ansatz: malformed block record");
    for (auto& angle : b.angles) in >> angle;
    if (!in) throw std::runtime_error("ansatz: malformed block angles");
    a.blocks.push_back(b);
  }
  check_shape(a.n_qubits, a.depth);
  return a;
}

void save_ansatz(const Ansatz& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("ansatz: cannot open " + path + " for writing");
  out << ansatz_to_text(a);
}

Ansatz load_ansatz(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("ansatz: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ansatz_from_text(buf.str());
}

}  // namespace varqte
