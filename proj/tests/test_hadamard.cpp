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
#include "varqte/hadamard.hpp"
#include "varqte/objective.hpp"

using namespace varqte;
namespace oracle = varqte::testing;

namespace {

// random cone-style pair: same structure, k rotation angles changed
std::pair<Circuit, Circuit> random_pair(int n, int differing, Rng& rng) {
  const Ansatz a = make_random_ansatz(n, 2, Boundary::open, rng);
  const Circuit u = compile_full(a);
  Circuit v = u;
  std::vector<int> rotation_gates;
  for (int gi = 0; gi < static_cast<int>(v.gates.size()); ++gi)
    if (v.gates[static_cast<size_t>(gi)].is_rotation()) rotation_gates.push_back(gi);
  for (int k = 0; k < differing; ++k) {
    const int gi = rotation_gates[static_cast<size_t>(rng.uniform_int(
        static_cast<int>(rotation_gates.size())))];
    v.gates[static_cast<size_t>(gi)].angle =
        wrap_angle(v.gates[static_cast<size_t>(gi)].angle + 0.25 + rng.uniform01());
  }
  return {u, v};
}

}  // namespace

TEST_CASE("hadamard_test basics") {
  Rng rng(3);
  const auto [u, v_unused] = random_pair(4, 0, rng);
  SUBCASE("U = V with the identity observable gives one") {
    const HadamardTestSpec spec{u, u, PauliString::identity(4), HadamardPart::real_part};
    CHECK(hadamard_test(spec) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("U = V has a real expectation: imaginary part vanishes") {
    const HadamardTestSpec spec{u, u, PauliString(4, "XYZI"), HadamardPart::imag_part};
    CHECK(hadamard_test(spec) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("hadamard_test equals the direct transition amplitude") {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(100 + static_cast<std::uint64_t>(trial));
    const int differing = rng.uniform_int(6);
    const auto [u, v] = random_pair(4, differing, rng);
    const PauliString obs = oracle::random_pauli(4, rng);
    const State us = run_circuit(u);
    const State vs = run_circuit(v);
    const std::complex<double> amp = transition_amplitude(vs, obs, us);
    CHECK(std::abs(hadamard_test({u, v, obs, HadamardPart::real_part}) - amp.real()) < 1e-12);
    CHECK(std::abs(hadamard_test({u, v, obs, HadamardPart::imag_part}) - amp.imag()) < 1e-12);
  }
}

TEST_CASE("objective assembly from Hadamard tests") {
  // cos/sin (or cosh/sinh) combinations of the two test outcomes rebuild the
  // single-term objective exactly
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng(300 + static_cast<std::uint64_t>(trial));
    const Ansatz prev_a = make_random_ansatz(4, 2, Boundary::open, rng);
    Ansatz cur_a = prev_a;
    for (int k = 0; k < 5; ++k) {
      const int p = rng.uniform_int(cur_a.param_count());
      cur_a.set_angle(p, wrap_angle(cur_a.angle(p) + rng.uniform01()));
    }
    const Circuit v = compile_full(prev_a);
    const Circuit u = compile_full(cur_a);
    static const char f[3] = {'X', 'Y', 'Z'};
    const int q = rng.uniform_int(3);
    const TimeKind kind = trial % 2 == 0 ? TimeKind::real : TimeKind::imaginary;
    const TrotterTerm t{rng.normal(),
                        PauliString::two_site(4, q, f[rng.uniform_int(3)], q + 1,
                                              f[rng.uniform_int(3)]),
                        0.2, kind};

    const double overlap_re =
        hadamard_test({u, v, PauliString::identity(4), HadamardPart::real_part});
    const double th = t.tau * t.coeff;
    double assembled;
    if (kind == TimeKind::real) {
      const double op_im = hadamard_test({u, v, t.op, HadamardPart::imag_part});
      assembled = std::cos(th) * overlap_re - std::sin(th) * op_im;
    } else {
      const double op_re = hadamard_test({u, v, t.op, HadamardPart::real_part});
      assembled = std::cosh(th) * overlap_re - std::sinh(th) * op_re;
    }
    CHECK(std::abs(assembled - objective(run_circuit(v), cur_a, t)) < 1e-12);
  }
}

TEST_CASE("controlled_gate_count matches the update classes") {
  Rng rng(7);
  SUBCASE("identical circuits need none") {
    const auto [u, v] = random_pair(4, 0, rng);
    CHECK(controlled_gate_count({u, v, PauliString::identity(4), HadamardPart::real_part}) == 0);
  }
  SUBCASE("an angle update needs exactly one") {
    Rng r2(9);
    const Ansatz a = make_random_ansatz(8, 2, Boundary::periodic, r2);
    const TrotterTerm t{1.0, PauliString::two_site(8, 1, 'Z', 2, 'Z'), 0.1, TimeKind::real};
    const CausalCone cone = causal_cone(a, t.op.support());
    const ConeCircuit cc = compile_cone(a, cone);
    Circuit v = cc.circuit;
    v.gates[0].angle = wrap_angle(v.gates[0].angle + 0.3);  // one parameter moved
    CHECK(controlled_gate_count(
              {cc.circuit, v, cc.remap(t.op), HadamardPart::real_part}) == 1);
  }
  SUBCASE("a full cone update on three blocks needs all 45") {
    Rng r2(11);
    const Ansatz a = make_random_ansatz(8, 2, Boundary::periodic, r2);
    const std::array<int, 2> support{1, 2};
    const CausalCone cone = causal_cone(a, support);
    const ConeCircuit cc = compile_cone(a, cone);
    REQUIRE(cc.circuit.param_count == 45);
    Circuit v = cc.circuit;
    for (auto& g : v.gates)
      if (g.param >= 0) g.angle = wrap_angle(g.angle + 0.1);
    CHECK(controlled_gate_count({cc.circuit, v,
                                 cc.remap(PauliString::two_site(8, 1, 'Z', 2, 'Z')),
                                 HadamardPart::real_part}) == 45);
  }
  SUBCASE("a block update needs 15") {
    Rng r2(13);
    const Ansatz a = make_random_ansatz(8, 2, Boundary::periodic, r2);
    const std::array<int, 2> support{1, 2};
    const ConeCircuit cc = compile_cone(a, causal_cone(a, support));
    Circuit v = cc.circuit;
    for (auto& g : v.gates)
      if (g.param >= 0 && g.param < kBlockParams) g.angle = wrap_angle(g.angle + 0.1);
    CHECK(controlled_gate_count({cc.circuit, v,
                                 cc.remap(PauliString::two_site(8, 1, 'Z', 2, 'Z')),
                                 HadamardPart::real_part}) == kBlockParams);
  }
}

TEST_CASE("hadamard_test validation") {
  Rng rng(15);
  const auto [u, v] = random_pair(4, 1, rng);
  SUBCASE("register mismatch") {
    Rng r2(17);
    const auto [w, w2] = random_pair(6, 0, r2);
    CHECK_THROWS_AS(hadamard_test({u, w, PauliString::identity(4), HadamardPart::real_part}),
                    std::invalid_argument);
  }
  SUBCASE("differing structure") {
    Circuit chopped = v;
    chopped.gates.pop_back();
    CHECK_THROWS_AS(
        hadamard_test({u, chopped, PauliString::identity(4), HadamardPart::real_part}),
        std::invalid_argument);
  }
  SUBCASE("differing fixed gates are not substitutable") {
    Circuit phase_moved = u;
    for (auto& g : phase_moved.gates)
      if (g.kind == Gate::Kind::phase) {
        g.angle += 0.1;
        break;
      }
    CHECK_THROWS_AS(
        hadamard_test({u, phase_moved, PauliString::identity(4), HadamardPart::real_part}),
        std::invalid_argument);
  }
}

TEST_CASE("compute_uncompute_overlap") {
  Rng rng(19);
  SUBCASE("identical circuits overlap fully") {
    const auto [u, v] = random_pair(4, 0, rng);
    CHECK(compute_uncompute_overlap(u, u) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("an X on a fresh register is orthogonal") {
    Circuit u;
    u.n_qubits = 2;
    Circuit v = u;
    v.gates.push_back({Gate::Kind::rx, 0, -1, M_PI / 2.0, -1});  // -iX: flips |0> to |1>
    CHECK(compute_uncompute_overlap(u, v) == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("random pairs match the inner-product oracle") {
    for (int trial = 0; trial < 20; ++trial) {
      Rng r2(500 + static_cast<std::uint64_t>(trial));
      const auto [u, v] = random_pair(4, 1 + r2.uniform_int(8), r2);
      const double want = std::norm(inner(run_circuit(v), run_circuit(u)));
      CHECK(std::abs(compute_uncompute_overlap(u, v) - want) < 1e-12);
    }
  }
}
