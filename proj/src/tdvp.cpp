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

#include "varqte/tdvp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "varqte/evolution.hpp"
#include "varqte/objective.hpp"

namespace varqte {

namespace {

Eigen::VectorXcd apply_hamiltonian(const Hamiltonian& h, const State& psi) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.amps.size());
  for (const auto& term : h.terms) out += term.coeff * pauli_apply(term.op, psi).amps;
  return out;
}

double kappa_of(const Eigen::MatrixXd& a, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  const double sigma_max = std::max(0.0, ev.maxCoeff());
  double sigma_min = -1.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] >= cutoff) {
      sigma_min = ev[i];
      break;
    }
  }
  if (sigma_min <= 0.0 || sigma_max <= 0.0) return 1.0;
  return sigma_max / sigma_min;
}

}  // namespace

TdvpSystem build_system(const Circuit& circuit, const Hamiltonian& h, double cutoff) {
  if (h.n_qubits != circuit.n_qubits) throw std::invalid_argument("build_system: dimension mismatch");
  const int p = circuit.param_count;
  const State psi = run_circuit(circuit);
  std::vector<Eigen::VectorXcd> derivs(static_cast<size_t>(p));
  for (int j = 0; j < p; ++j)
    derivs[static_cast<size_t>(j)] = run_circuit_derivative(circuit, j).amps;
  TdvpSystem sys;
  sys.a.resize(p, p);
  sys.c.resize(p);
  for (int j = 0; j < p; ++j) {
    for (int k = j; k < p; ++k) {
      const double v = derivs[static_cast<size_t>(j)].dot(derivs[static_cast<size_t>(k)]).real();
      sys.a(j, k) = v;
      sys.a(k, j) = v;
    }
  }
  const Eigen::VectorXcd hpsi = apply_hamiltonian(h, psi);
  for (int j = 0; j < p; ++j) sys.c[j] = derivs[static_cast<size_t>(j)].dot(hpsi).imag();
  sys.kappa = kappa_of(sys.a, cutoff);
  return sys;
}

TdvpSystem build_system(const Ansatz& a, const Hamiltonian& h, double cutoff) {
  return build_system(compile_full(a), h, cutoff);
}

TdvpSystem build_cone_system(const Ansatz& a, const Hamiltonian& h,
                             std::span<const int> support, double cutoff) {
  const CausalCone cone = causal_cone(a, support);
  const ConeCircuit cc = compile_cone(a, cone);
  Hamiltonian compact;
  compact.n_qubits = cone.width();
  for (const auto& term : h.terms) {
    bool inside = true;
    for (int q : term.op.support())
      if (cc.compact_of_qubit[static_cast<size_t>(q)] < 0) inside = false;
    if (inside) compact.terms.push_back({term.coeff, cc.remap(term.op)});
  }
  return build_system(cc.circuit, compact, cutoff);
}

Eigen::VectorXd solve_system(const TdvpSystem& system, double cutoff, bool* all_cut) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(system.a);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const Eigen::MatrixXd& q = es.eigenvectors();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(system.c.size());
  bool retained = false;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < cutoff) continue;
    retained = true;
    b += q.col(i) * (q.col(i).dot(system.c) / ev[i]);
  }
  if (all_cut) *all_cut = !retained;
  return b;
}

void tdvp_step(Ansatz& a, const Hamiltonian& h, double tau, double cutoff) {
  const TdvpSystem sys = build_system(a, h, cutoff);
  const Eigen::VectorXd b = solve_system(sys, cutoff);
  for (int p = 0; p < a.param_count(); ++p)
    a.set_angle(p, wrap_angle(a.angle(p) + tau * b[p]));
}

std::vector<ConditionStudyRow> condition_study(int n_samples, double cutoff,
                                               std::uint64_t seed) {
  // the three depth-2 cone shapes: single-qubit edge support (one block),
  // a block-aligned pair (three blocks), a straddling pair (five blocks)
  const std::vector<std::vector<int>> supports = {{0}, {1, 2}, {2, 3}};
  const Hamiltonian h = ising_hamiltonian(8, 1.0, 0.2, Boundary::open);
  std::vector<ConditionStudyRow> rows;
  Rng rng(seed);
  for (const auto& support : supports) {
    ConditionStudyRow row;
    for (int s = 0; s < n_samples; ++s) {
      Ansatz a = make_random_ansatz(8, 2, Boundary::open, rng);
      const TdvpSystem sys = build_cone_system(a, h, support, cutoff);
      if (row.n_params == 0) row.n_params = static_cast<int>(sys.a.rows());
      row.kappas.push_back(sys.kappa);
    }
    std::vector<double> sorted = row.kappas;
    std::sort(sorted.begin(), sorted.end());
    const size_t m = sorted.size();
    row.median_kappa = m % 2 == 1 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    rows.push_back(std::move(row));
  }
  return rows;
}

NoiseScalingResult noise_scaling(const TdvpSystem& system, std::span<const double> m_values,
                                 int trials, double cutoff, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("noise_scaling: trials must be >= 1");
  const Eigen::VectorXd b0 = solve_system(system, cutoff);
  const double b0_norm = b0.norm();
  if (b0_norm == 0.0) throw std::invalid_argument("noise_scaling: system has trivial solution");
  const int p = static_cast<int>(system.a.rows());
  const double scale_a = std::sqrt(system.a.array().square().mean());
  const double scale_c = std::sqrt(system.c.array().square().mean());
  Rng rng(seed);
  NoiseScalingResult result;
  for (double m : m_values) {
    const double sd_a = scale_a / std::sqrt(m);
    const double sd_c = scale_c / std::sqrt(m);
    double total = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      TdvpSystem noisy;
      noisy.a = system.a;
      noisy.c = system.c;
      for (int i = 0; i < p; ++i) {
        for (int j = i; j < p; ++j) {
          const double n = sd_a * rng.normal();
          noisy.a(i, j) += n;
          if (i != j) noisy.a(j, i) += n;
        }
        noisy.c[i] += sd_c * rng.normal();
      }
      const Eigen::VectorXd b = solve_system(noisy, cutoff);
      total += (b - b0).norm() / b0_norm;
    }
    result.points.push_back({m, total / trials});
  }
  // least-squares slope of log(error) vs log(m)
  const size_t k = result.points.size();
  if (k >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& pt : result.points) {
      const double x = std::log(pt.m);
      const double y = std::log(pt.mean_rel_error);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double n = static_cast<double>(k);
    result.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return result;
}

}  // namespace varqte
