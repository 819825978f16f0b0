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

#include "varqte/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace varqte {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > 63) throw std::invalid_argument("PauliString: qubit count out of range");
}

std::uint64_t qubit_bit(int n, int q) { return std::uint64_t{1} << (n - 1 - q); }

}  // namespace

PauliString::PauliString(int n_qubits, std::string_view factors) : n_(n_qubits) {
  check_qubit_count(n_qubits);
  if (static_cast<int>(factors.size()) != n_qubits)
    throw std::invalid_argument("PauliString: factor string length must equal qubit count");
  for (int q = 0; q < n_qubits; ++q) {
    const std::uint64_t bit = qubit_bit(n_, q);
    switch (factors[q]) {
      case 'I': break;
      case 'X': x_ |= bit; break;
      case 'Y': x_ |= bit; z_ |= bit; break;
      case 'Z': z_ |= bit; break;
      default: throw std::invalid_argument("PauliString: factors must be one of I, X, Y, Z");
    }
  }
}

PauliString PauliString::identity(int n_qubits) {
  check_qubit_count(n_qubits);
  PauliString p;
  p.n_ = n_qubits;
  return p;
}

PauliString PauliString::single(int n_qubits, int qubit, char factor) {
  PauliString p = identity(n_qubits);
  if (qubit < 0 || qubit >= n_qubits)
    throw std::invalid_argument("PauliString: qubit index out of range");
  const std::uint64_t bit = qubit_bit(n_qubits, qubit);
  switch (factor) {
    case 'I': break;
    case 'X': p.x_ |= bit; break;
    case 'Y': p.x_ |= bit; p.z_ |= bit; break;
    case 'Z': p.z_ |= bit; break;
    default: throw std::invalid_argument("PauliString: factors must be one of I, X, Y, Z");
  }
  return p;
}

PauliString PauliString::two_site(int n_qubits, int qubit_a, char factor_a, int qubit_b,
                                  char factor_b) {
  if (qubit_a == qubit_b) throw std::invalid_argument("PauliString: duplicate qubit");
  PauliString p = single(n_qubits, qubit_a, factor_a);
  const PauliString q = single(n_qubits, qubit_b, factor_b);
  p.x_ |= q.x_;
  p.z_ |= q.z_;
  return p;
}

char PauliString::factor(int qubit) const {
  if (qubit < 0 || qubit >= n_) throw std::invalid_argument("PauliString: qubit index out of range");
  const std::uint64_t bit = qubit_bit(n_, qubit);
  const bool x = (x_ & bit) != 0;
  const bool z = (z_ & bit) != 0;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::vector<int> PauliString::support() const {
  std::vector<int> s;
  for (int q = 0; q < n_; ++q)
    if (factor(q) != 'I') s.push_back(q);
  return s;
}

int PauliString::y_count() const { return std::popcount(x_ & z_); }

std::string PauliString::to_string() const {
  std::string s(static_cast<size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) s[static_cast<size_t>(q)] = factor(q);
  return s;
}

}  // namespace varqte
