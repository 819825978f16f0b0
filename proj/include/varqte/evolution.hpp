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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "varqte/ansatz.hpp"
#include "varqte/exact.hpp"
#include "varqte/objective.hpp"
#include "varqte/pauli.hpp"

namespace varqte {

enum class TrotterOrder { first, second };

enum class StrategyKind { cone, block, angle };

struct Strategy {
  StrategyKind kind = StrategyKind::cone;
  int sweeps = 1;
};

/// Terms of one product-formula step, in application order. First order:
/// ZZ bonds left to right, then X sites left to right. Second order wraps the
/// X factors with half-coefficient ZZ lists. Requires one- or two-local
/// nearest-neighbor terms.
std::vector<TrotterTerm> trotter_sequence(const Hamiltonian& h, double tau, TrotterOrder order,
                                          TimeKind kind);

struct TrotterPlan {
  TrotterOrder order = TrotterOrder::first;
  std::vector<TrotterTerm> step_terms;
  int steps = 0;
  double tau = 0.0;
};

/// Plan for total time t; t must be an integer multiple of tau.
TrotterPlan make_trotter_plan(const Hamiltonian& h, double t, double tau, TrotterOrder order,
                              TimeKind kind);

/// 1d quantum Ising chain: -J sum_j Z_j Z_{j+1} - J lambda sum_j X_j,
/// with a wrap bond under periodic boundary.
Hamiltonian ising_hamiltonian(int n_qubits, double j, double lambda,
                              Boundary boundary = Boundary::open);

struct StepRow {
  int step = 0;
  double time = 0.0;
  std::vector<double> objectives;  // per term of the step that produced this row
  double energy = 0.0;
  std::optional<double> distance;  // to the exact evolved state, when tracked
  double wall_ms = 0.0;
};

struct RunRecord {
  std::vector<std::string> term_labels;
  std::vector<StepRow> rows;
  bool has_distance = false;
  std::uint64_t seed = 0;
  std::string config_digest;

  /// One row per step; wall-clock column off by default so identical runs
  /// are byte-identical.
  std::string to_csv(bool include_wall_clock = false) const;
};

/// Optimize the ansatz against one Trotter term with the given strategy.
/// Effective time steps for real time: cone tau, block tau/(N_s N_b),
/// angle tau/(N_s N_b N_p); imaginary time always uses tau as-is. Returns
/// the full-tau objective against the pre-update state.
double step_strategy(Ansatz& a, const TrotterTerm& term, const Strategy& s);

/// Same dispatch on an existing optimizer (no commit); useful when the cone
/// is forced by a support override.
double apply_strategy(ConeOptimizer& opt, const TrotterTerm& term, const Strategy& s);

struct EvolveOptions {
  TrotterOrder order = TrotterOrder::first;
  Strategy strategy;
  TimeKind kind = TimeKind::real;
  bool oracle = false;  // track distance_sq to the exact evolved state (n <= 12)
};

/// Multi-segment evolution driver: owns the ansatz, accumulates the record,
/// and keeps the exact-evolution reference aligned with elapsed time.
class EvolutionDriver {
 public:
  EvolutionDriver(Ansatz a, Hamiltonian h, EvolveOptions options);

  void run_segment(int steps, double tau);

  const Ansatz& ansatz() const { return ansatz_; }
  const RunRecord& record() const { return record_; }
  const Hamiltonian& hamiltonian() const { return h_; }
  double elapsed() const { return elapsed_; }
  int steps_done() const { return steps_done_; }

  /// Resume bookkeeping: skip records for the first n steps of the schedule
  /// (the ansatz must already be at that point).
  void mark_resumed(int steps_done, double elapsed);

 private:
  Ansatz ansatz_;
  Hamiltonian h_;
  EvolveOptions options_;
  RunRecord record_;
  double elapsed_ = 0.0;
  int steps_done_ = 0;
  std::unique_ptr<ExactEvolver> exact_;
  State initial_state_;
};

/// Single-segment convenience wrapper; t must be an integer multiple of tau.
RunRecord evolve(Ansatz& a, const Hamiltonian& h, double t, double tau,
                 const EvolveOptions& options);

/// Final distance_sq to the exact state after real-time evolution from
/// |0...0> (identity ansatz) for each time step in taus.
std::vector<std::pair<double, double>> trotter_error_curve(const Hamiltonian& h, double t,
                                                           std::span<const double> taus,
                                                           TrotterOrder order, int sweeps = 6);

}  // namespace varqte
