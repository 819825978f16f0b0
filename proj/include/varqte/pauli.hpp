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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace varqte {

/// Real vs imaginary propagation. Imaginary time substitutes t -> -i t and
/// turns the short-time factors into non-unitary cosh/sinh combinations.
enum class TimeKind { real, imaginary };

/// Tensor product of single-qubit Pauli factors (no coefficient).
///
/// Qubit 0 is the most significant bit of the basis index throughout the
/// library, so factor masks are stored in basis-index bit positions
/// (qubit q <-> bit n-1-q). Hermitian and unitary by construction.
class PauliString {
 public:
  PauliString() = default;

  /// Build from a factor string like "IXYZ" (factors[q] acts on qubit q).
  PauliString(int n_qubits, std::string_view factors);

  static PauliString identity(int n_qubits);
  static PauliString single(int n_qubits, int qubit, char factor);
  static PauliString two_site(int n_qubits, int qubit_a, char factor_a, int qubit_b,
                              char factor_b);

  int n_qubits() const { return n_; }
  char factor(int qubit) const;
  std::vector<int> support() const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  /// Symplectic masks in basis-index bit space: X and Y set the x bit,
  /// Z and Y set the z bit.
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  int y_count() const;

  std::string to_string() const;

  bool operator==(const PauliString& other) const = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct HamiltonianTerm {
  double coeff = 0.0;
  PauliString op;
};

/// H = sum_k h_k P_k with real coefficients; Hermitian by construction.
struct Hamiltonian {
  int n_qubits = 0;
  std::vector<HamiltonianTerm> terms;
};

/// One factor exp(-i zeta h P) of a product formula. For kind == real the
/// factor is the unitary exp(-i tau h P); for kind == imaginary it is the
/// unnormalized map exp(-tau h P).
struct TrotterTerm {
  double coeff = 0.0;  // h
  PauliString op;
  double tau = 0.0;
  TimeKind kind = TimeKind::real;
};

}  // namespace varqte
