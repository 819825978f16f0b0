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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/dense_oracle.hpp"
#include "varqte/evolution.hpp"
#include "varqte/exact.hpp"
#include "varqte/tdvp.hpp"

using namespace varqte;
namespace oracle = varqte::testing;

TEST_CASE("single-rotation circuit has a unit Gram entry") {
  Circuit c;
  c.n_qubits = 1;
  c.gates.push_back({Gate::Kind::rx, 0, -1, 0.37, 0});
  c.param_count = 1;
  Hamiltonian h;
  h.n_qubits = 1;
  h.terms.push_back({1.0, PauliString(1, "Z")});
  const TdvpSystem sys = build_system(c, h);
  REQUIRE(sys.a.rows() == 1);
  CHECK(sys.a(0, 0) == doctest::Approx(1.0).epsilon(1e-12));  // ||G psi|| = 1 with G^2 = 1
}

TEST_CASE("A is symmetric positive semidefinite") {
  Rng rng(3);
  const Ansatz a = make_random_ansatz(4, 2, Boundary::open, rng);
  const TdvpSystem sys = build_system(a, ising_hamiltonian(4, 1.0, 0.2));
  CHECK((sys.a - sys.a.transpose()).cwiseAbs().maxCoeff() < 1e-10);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.a, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().minCoeff() > -1e-10);
}

TEST_CASE("A and C match central finite differences") {
  Rng rng(5);
  const Ansatz a = make_random_ansatz(4, 2, Boundary::open, rng);
  const Hamiltonian h = ising_hamiltonian(4, 1.0, 0.2);
  const Circuit circuit = compile_full(a);
  const TdvpSystem sys = build_system(circuit, h);

  const double step = 1e-5;
  const int p = circuit.param_count;
  std::vector<Eigen::VectorXcd> fd(static_cast<size_t>(p));
  std::vector<double> params = circuit.parameters();
  for (int j = 0; j < p; ++j) {
    Circuit plus = circuit;
    Circuit minus = circuit;
    std::vector<double> pp = params;
    pp[static_cast<size_t>(j)] += step;
    plus.set_parameters(pp);
    pp[static_cast<size_t>(j)] -= 2 * step;
    minus.set_parameters(pp);
    fd[static_cast<size_t>(j)] =
        (run_circuit(plus).amps - run_circuit(minus).amps) / (2 * step);
  }
  const State psi = run_circuit(circuit);
  const Eigen::MatrixXcd hm = oracle::hamiltonian_matrix(h);
  for (int j = 0; j < p; ++j) {
    for (int k = 0; k < p; ++k) {
      const double want = fd[static_cast<size_t>(j)].dot(fd[static_cast<size_t>(k)]).real();
      CHECK(std::abs(sys.a(j, k) - want) < 1e-6);
    }
    const double want_c = fd[static_cast<size_t>(j)].dot(hm * psi.amps).imag();
    CHECK(std::abs(sys.c[j] - want_c) < 1e-6);
  }
}

TEST_CASE("solve_system") {
  SUBCASE("zero right-hand side gives a zero step") {
    TdvpSystem sys;
    sys.a = Eigen::MatrixXd::Identity(4, 4);
    sys.c = Eigen::VectorXd::Zero(4);
    CHECK(solve_system(sys, 1e-7).norm() == 0.0);
  }
  SUBCASE("singular directions are discarded by the cutoff") {
    TdvpSystem sys;
    sys.a = Eigen::MatrixXd::Zero(3, 3);
    sys.a(0, 0) = 1.0;
    sys.a(1, 1) = 1e-12;  // below cutoff
    sys.c = Eigen::VectorXd::Ones(3);
    const Eigen::VectorXd b = solve_system(sys, 1e-7);
    CHECK(std::isfinite(b.norm()));
    CHECK(b[0] == doctest::Approx(1.0));
    CHECK(std::abs(b[1]) < 1e-12);
  }
  SUBCASE("everything below the cutoff flags a no-op") {
    TdvpSystem sys;
    sys.a = 1e-12 * Eigen::MatrixXd::Identity(2, 2);
    sys.c = Eigen::VectorXd::Ones(2);
    bool all_cut = false;
    const Eigen::VectorXd b = solve_system(sys, 1e-7, &all_cut);
    CHECK(all_cut);
    CHECK(b.norm() == 0.0);
  }
}

TEST_CASE("tdvp_step tracks the exact real-time evolution") {
  Rng rng(7);
  Ansatz a = make_random_ansatz(4, 2, Boundary::open, rng);
  const Hamiltonian h = ising_hamiltonian(4, 1.0, 0.2);
  const ExactEvolver exact(h);
  const State psi0 = prepare_state(a);
  const double tau = 1e-3;
  for (int step = 0; step < 100; ++step) tdvp_step(a, h, tau, 1e-7);
  const State target = exact.evolve(psi0, 100 * tau, TimeKind::real);
  CHECK(distance_sq(prepare_state(a), target) < 0.05);
}

TEST_CASE("energy drifts slowly under the Euler flow") {
  // at depth 1 the Gram spectrum is well separated from the cutoff, so the
  // flow is the exact projected dynamics and the drift is the Euler error;
  // at depth 2 the spectrum reaches the cutoff and truncation residue
  // dominates (the ill-conditioning the condition study quantifies)
  Rng rng(6);
  Ansatz a = make_random_ansatz(4, 1, Boundary::open, rng);
  const Hamiltonian h = ising_hamiltonian(4, 1.0, 0.2);
  const double e0 = energy(a, h);
  for (int step = 0; step < 100; ++step) tdvp_step(a, h, 1e-3, 1e-7);
  CHECK(std::abs(energy(a, h) - e0) < 1e-4);

  Rng rng2(1);
  Ansatz b = make_random_ansatz(4, 2, Boundary::open, rng2);
  const double e1 = energy(b, h);
  for (int step = 0; step < 100; ++step) tdvp_step(b, h, 1e-3, 1e-7);
  CHECK(std::abs(energy(b, h) - e1) < 0.05);
}

TEST_CASE("kappa never exceeds the raw singular-value ratio") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Ansatz a = make_random_ansatz(8, 2, Boundary::open, rng);
    const std::array<int, 2> support{1, 2};
    const TdvpSystem sys = build_cone_system(a, ising_hamiltonian(8, 1.0, 0.2), support, 1e-7);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.a, Eigen::EigenvaluesOnly);
    const double raw_min = std::max(es.eigenvalues().minCoeff(), 1e-300);
    const double raw_ratio = es.eigenvalues().maxCoeff() / raw_min;
    CHECK(sys.kappa <= raw_ratio * (1 + 1e-12));
  }
}

TEST_CASE("condition number grows with the parameter count") {
  const auto rows = condition_study(10, 1e-7, 21);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n_params == 15);
  CHECK(rows[1].n_params == 45);
  CHECK(rows[2].n_params == 75);
  CHECK(rows[0].median_kappa < rows[1].median_kappa);
  CHECK(rows[1].median_kappa < rows[2].median_kappa);
}

TEST_CASE("noise scaling") {
  Rng rng(13);
  const Ansatz a = make_random_ansatz(8, 2, Boundary::open, rng);
  const std::array<int, 2> support{1, 2};
  const TdvpSystem sys = build_cone_system(a, ising_hamiltonian(8, 1.0, 0.2), support, 1e-7);
  SUBCASE("slope is about -1/2") {
    const std::array<double, 4> ms{1e18, 1e19, 1e20, 1e21};
    const NoiseScalingResult res = noise_scaling(sys, ms, 24, 1e-7, 99);
    CHECK(std::abs(res.slope + 0.5) < 0.1);
    for (size_t i = 1; i < res.points.size(); ++i)
      CHECK(res.points[i].mean_rel_error < res.points[i - 1].mean_rel_error);
  }
  SUBCASE("vanishing noise gives vanishing error") {
    const std::array<double, 1> ms{1e30};
    const NoiseScalingResult res = noise_scaling(sys, ms, 8, 1e-7, 99);
    CHECK(res.points[0].mean_rel_error < 1e-8);
  }
}
