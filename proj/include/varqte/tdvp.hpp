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
#include <vector>

#include "varqte/ansatz.hpp"
#include "varqte/circuit.hpp"
#include "varqte/pauli.hpp"
#include "varqte/rng.hpp"

namespace varqte {

inline constexpr double kTdvpCutoff = 1e-7;

/// Linear system A B = C of the variational principle:
/// A_{jk} = Re <d_j psi | d_k psi>, C_j = Im <d_j psi | H | psi>.
/// A is symmetric positive semidefinite (real part of a Gram matrix).
/// kappa is sigma_max over the smallest singular value at or above the
/// cutoff (1 when nothing is retained).
struct TdvpSystem {
  Eigen::MatrixXd a;
  Eigen::VectorXd c;
  double kappa = 1.0;
};

/// Build A and C from exact parameter derivatives of the circuit state
/// (insertion of -iG at each parameterized gate).
TdvpSystem build_system(const Circuit& circuit, const Hamiltonian& h,
                        double cutoff = kTdvpCutoff);

/// Full-ansatz scope.
TdvpSystem build_system(const Ansatz& a, const Hamiltonian& h, double cutoff = kTdvpCutoff);

/// Cone scope: the system over the parameters inside the causal cone of the
/// given support, with the Hamiltonian restricted to terms supported on the
/// cone and remapped onto the compact register.
TdvpSystem build_cone_system(const Ansatz& a, const Hamiltonian& h,
                             std::span<const int> support, double cutoff = kTdvpCutoff);

/// Pseudo-inverse solve: eigenvalues of A below the cutoff are discarded.
/// all_cut reports the degenerate no-op case where nothing is retained.
Eigen::VectorXd solve_system(const TdvpSystem& system, double cutoff, bool* all_cut = nullptr);

/// Explicit-Euler parameter step theta <- theta + tau * B.
void tdvp_step(Ansatz& a, const Hamiltonian& h, double tau, double cutoff = kTdvpCutoff);

/// The three cone sizes of the depth-2 brickwork: 1, 3 and 5 blocks
/// (15/45/75 parameters).
struct ConditionStudyRow {
  int n_params = 0;
  double median_kappa = 0.0;
  std::vector<double> kappas;
};

std::vector<ConditionStudyRow> condition_study(int n_samples, double cutoff, std::uint64_t seed);

struct NoiseScalingPoint {
  double m = 0.0;               // measurements per matrix element
  double mean_rel_error = 0.0;  // ||delta B|| / ||B||
};

struct NoiseScalingResult {
  std::vector<NoiseScalingPoint> points;
  double slope = 0.0;  // log-log regression of error vs m; about -1/2
};

/// Perturb A (symmetrized) and C entrywise with N(0, scale/sqrt(m)) noise,
/// re-solve, and record the relative error in B.
NoiseScalingResult noise_scaling(const TdvpSystem& system, std::span<const double> m_values,
                                 int trials, double cutoff, std::uint64_t seed);

}  // namespace varqte
