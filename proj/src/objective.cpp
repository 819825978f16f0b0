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

#include "varqte/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace varqte {

namespace {

using cd = std::complex<double>;

double combine_parts(double re_overlap, cd op_amplitude, double tau_h, TimeKind kind) {
  if (kind == TimeKind::real)
    return std::cos(tau_h) * re_overlap - std::sin(tau_h) * op_amplitude.imag();
  return std::cosh(tau_h) * re_overlap - std::sinh(tau_h) * op_amplitude.real();
}

}  // namespace

double Sinusoid::operator()(double x) const { return amplitude * std::sin(x + phase); }

double wrap_angle(double x) {
  double y = std::remainder(x, 2.0 * M_PI);  // [-pi, pi]
  if (y <= -M_PI) y += 2.0 * M_PI;
  return y;
}

Sinusoid fit_sinusoid(double f_at_phi, double f_at_phi_plus_half_pi, double phi) {
  if (!std::isfinite(f_at_phi) || !std::isfinite(f_at_phi_plus_half_pi) || !std::isfinite(phi))
    throw std::invalid_argument("fit_sinusoid: non-finite input");
  const double amplitude = std::hypot(f_at_phi, f_at_phi_plus_half_pi);
  const double phase = wrap_angle(std::atan2(f_at_phi, f_at_phi_plus_half_pi) - phi);
  return {amplitude, phase};
}

double coordinate_max(double f_at_theta, double f_at_theta_plus_half_pi, double theta) {
  if (!std::isfinite(f_at_theta) || !std::isfinite(f_at_theta_plus_half_pi) ||
      !std::isfinite(theta))
    throw std::invalid_argument("coordinate_max: non-finite input");
  if (std::hypot(f_at_theta, f_at_theta_plus_half_pi) < kFlatAmplitudeTol) return theta;
  return wrap_angle(M_PI / 2.0 - std::atan2(f_at_theta, f_at_theta_plus_half_pi) + theta);
}

double objective(const State& prev, const Ansatz& a, const TrotterTerm& t) {
  const State psi = prepare_state(a);
  const cd ov = inner(prev, psi);
  const cd pov = transition_amplitude(prev, t.op, psi);
  return combine_parts(ov.real(), pov, t.tau * t.coeff, t.kind);
}

double overlap_objective(const State& prev, const Ansatz& a, const TrotterTerm& t) {
  const State psi = prepare_state(a);
  const cd ov = inner(prev, psi);
  const cd pov = transition_amplitude(prev, t.op, psi);
  const double th = t.tau * t.coeff;
  // <prev| e^{i conj(zeta) h P} |psi>
  const cd amp = t.kind == TimeKind::real
                     ? std::cos(th) * ov + cd(0, 1) * std::sin(th) * pov
                     : std::cosh(th) * ov - std::sinh(th) * pov;
  return std::norm(amp);
}

ConeOptimizer::ConeOptimizer(const Ansatz& a, const TrotterTerm& t,
                             std::span<const int> support_override)
    : term_(t) {
  if (t.op.n_qubits() != a.n_qubits)
    throw std::invalid_argument("ConeOptimizer: dimension mismatch");
  std::vector<int> support(support_override.begin(), support_override.end());
  if (support.empty()) support = t.op.support();
  if (support.empty())
    throw std::invalid_argument("ConeOptimizer: identity term needs a support override");
  cone_circuit_ = compile_cone(a, causal_cone(a, support));
  compact_op_ = cone_circuit_.remap(t.op);
  params_ = cone_circuit_.circuit.parameters();
  param_gate_.assign(params_.size(), -1);
  for (int gi = 0; gi < static_cast<int>(cone_circuit_.circuit.gates.size()); ++gi) {
    const int p = cone_circuit_.circuit.gates[static_cast<size_t>(gi)].param;
    if (p >= 0) param_gate_[static_cast<size_t>(p)] = gi;
  }
  refreeze();
  initial_reference_ = reference_;
  initial_op_reference_ = op_reference_;
}

void ConeOptimizer::refreeze() {
  const State v = run_circuit(cone_circuit_.circuit);
  reference_ = v.amps;
  op_reference_ = pauli_apply(compact_op_, v).amps;
}

double ConeOptimizer::combine(cd ov, cd pov, double tau_eff) const {
  return combine_parts(ov.real(), pov, tau_eff * term_.coeff, term_.kind);
}

double ConeOptimizer::evaluate_current(double tau_eff) const {
  const State u = run_circuit(cone_circuit_.circuit);
  return combine(reference_.dot(u.amps), op_reference_.dot(u.amps), tau_eff);
}

double ConeOptimizer::evaluate_override(int gate_index, double angle, double tau_eff,
                                        const Eigen::VectorXcd& prefix) const {
  State u{cone_circuit_.circuit.n_qubits, prefix};
  const auto& gates = cone_circuit_.circuit.gates;
  apply_gate_with_angle(u, gates[static_cast<size_t>(gate_index)], angle);
  for (size_t gi = static_cast<size_t>(gate_index) + 1; gi < gates.size(); ++gi)
    apply_gate(u, gates[gi]);
  return combine(reference_.dot(u.amps), op_reference_.dot(u.amps), tau_eff);
}

double ConeOptimizer::expectation_override(int gate_index, double angle,
                                           const Eigen::VectorXcd& prefix) const {
  State u{cone_circuit_.circuit.n_qubits, prefix};
  const auto& gates = cone_circuit_.circuit.gates;
  apply_gate_with_angle(u, gates[static_cast<size_t>(gate_index)], angle);
  for (size_t gi = static_cast<size_t>(gate_index) + 1; gi < gates.size(); ++gi)
    apply_gate(u, gates[gi]);
  return pauli_expectation(u, compact_op_);
}

void ConeOptimizer::set_parameter(int param, double value) {
  params_[static_cast<size_t>(param)] = value;
  cone_circuit_.circuit.gates[static_cast<size_t>(param_gate_[static_cast<size_t>(param)])]
      .angle = value;
}

double ConeOptimizer::sweep_range(int first_param, int last_param, double tau_eff,
                                  double left_in, std::vector<ObjectiveSample>* trace,
                                  int term_index) {
  double left = left_in;
  State prefix = zero_state(cone_circuit_.circuit.n_qubits);
  const auto& gates = cone_circuit_.circuit.gates;
  for (int gi = 0; gi < static_cast<int>(gates.size()); ++gi) {
    const Gate& g = gates[static_cast<size_t>(gi)];
    if (g.param >= first_param && g.param < last_param) {
      const int d = g.param;
      const double theta = params_[static_cast<size_t>(d)];
      // the left-hand value is recycled from the previous update: after
      // setting theta_{d-1} to its maximizer, the objective equals the fitted
      // amplitude, which is exactly f_d at the current theta_d
      const double right = evaluate_override(gi, theta + M_PI / 2.0, tau_eff, prefix.amps);
      if (std::hypot(left, right) >= kFlatAmplitudeTol) {
        set_parameter(d, wrap_angle(M_PI / 2.0 - std::atan2(left, right) + theta));
        left = std::hypot(left, right);
      }
      if (trace) trace->push_back({left, term_index, d});
    }
    apply_gate(prefix, g);
  }
  return left;
}

double ConeOptimizer::run_cone(int n_sweeps, std::vector<ObjectiveSample>* trace,
                               int term_index) {
  if (n_sweeps < 1) throw std::invalid_argument("run_cone: need at least one sweep");
  refreeze();
  double value = evaluate_current(term_.tau);
  for (int s = 0; s < n_sweeps; ++s) {
    const double left = s == 0 ? value : evaluate_current(term_.tau);
    value = sweep_range(0, cone_param_count(), term_.tau, left, trace, term_index);
  }
  return value;
}

double ConeOptimizer::run_block(int n_sweeps, double tau_eff) {
  if (n_sweeps < 1) throw std::invalid_argument("run_block: need at least one sweep");
  double value = 0.0;
  for (int s = 0; s < n_sweeps; ++s) {
    for (int b = 0; b < block_count(); ++b) {
      refreeze();  // reference replaced by the current variational state
      const double left = evaluate_current(tau_eff);
      value = sweep_range(kBlockParams * b, kBlockParams * (b + 1), tau_eff, left, nullptr, 0);
    }
  }
  return value;
}

double ConeOptimizer::run_angle(int n_sweeps, double tau_eff, bool approximate_recycling) {
  if (n_sweeps < 1) throw std::invalid_argument("run_angle: need at least one sweep");
  if (approximate_recycling && term_.kind != TimeKind::imaginary)
    throw std::invalid_argument("run_angle: approximate recycling is an imaginary-time shortcut");
  const double th = tau_eff * term_.coeff;
  const auto& gates = cone_circuit_.circuit.gates;
  for (int s = 0; s < n_sweeps; ++s) {
    State prefix = zero_state(cone_circuit_.circuit.n_qubits);
    double recycled = 0.0;
    bool have_recycled = false;
    for (int gi = 0; gi < static_cast<int>(gates.size()); ++gi) {
      const Gate& g = gates[static_cast<size_t>(gi)];
      if (g.param >= 0 && th != 0.0) {
        const int d = g.param;
        const double theta = params_[static_cast<size_t>(d)];
        double left = 0.0;
        double right = 0.0;
        if (term_.kind == TimeKind::real) {
          // two projector expectations <H+->: H+- = 2 P+- W^dag P W P+- with
          // P+- = (1 +- G)/2 applied to the state before this gate
          const PauliString gen =
              rotation_generator(g, cone_circuit_.circuit.n_qubits);
          const Eigen::VectorXcd gpre = pauli_apply(gen, prefix).amps;
          const double e_plus = 2.0 * expectation_raw(gi, theta, 0.5 * (prefix.amps + gpre));
          const double e_minus = 2.0 * expectation_raw(gi, theta, 0.5 * (prefix.amps - gpre));
          left = std::cos(th);
          right = 0.5 * std::sin(th) * (e_plus - e_minus);
        } else {
          // three expectations of the observable at shifts {0, +pi/4, -pi/4},
          // or two when the unshifted value is approximated by the previous
          // update's amplitude
          if (approximate_recycling && have_recycled) {
            left = recycled;
          } else {
            const double e0 = expectation_override(gi, theta, prefix.amps);
            left = std::cosh(th) - std::sinh(th) * e0;
          }
          const double ep = expectation_override(gi, theta + M_PI / 4.0, prefix.amps);
          const double em = expectation_override(gi, theta - M_PI / 4.0, prefix.amps);
          right = -0.5 * std::sinh(th) * (ep - em);
        }
        if (std::hypot(left, right) >= kFlatAmplitudeTol) {
          set_parameter(d, wrap_angle(M_PI / 2.0 - std::atan2(left, right) + theta));
          recycled = std::hypot(left, right);
          have_recycled = true;
        }
      }
      apply_gate(prefix, g);
    }
  }
  refreeze();
  return evaluate_current(tau_eff);
}

double ConeOptimizer::expectation_raw(int gate_index, double angle,
                                      const Eigen::VectorXcd& start) const {
  State u{cone_circuit_.circuit.n_qubits, start};
  const auto& gates = cone_circuit_.circuit.gates;
  apply_gate_with_angle(u, gates[static_cast<size_t>(gate_index)], angle);
  for (size_t gi = static_cast<size_t>(gate_index) + 1; gi < gates.size(); ++gi)
    apply_gate(u, gates[gi]);
  const Eigen::VectorXcd pu = pauli_apply(compact_op_, u).amps;
  return u.amps.dot(pu).real();
}

double ConeOptimizer::objective_vs_initial() const {
  const State u = run_circuit(cone_circuit_.circuit);
  return combine(initial_reference_.dot(u.amps), initial_op_reference_.dot(u.amps), term_.tau);
}

double ConeOptimizer::coordinate_objective(int param, double x, double tau_eff) const {
  if (param < 0 || param >= cone_param_count())
    throw std::invalid_argument("coordinate_objective: parameter index out of range");
  const int gi = param_gate_[static_cast<size_t>(param)];
  State prefix = zero_state(cone_circuit_.circuit.n_qubits);
  for (int i = 0; i < gi; ++i)
    apply_gate(prefix, cone_circuit_.circuit.gates[static_cast<size_t>(i)]);
  return evaluate_override(gi, x, tau_eff, prefix.amps);
}

void ConeOptimizer::commit(Ansatz& a) const {
  for (int d = 0; d < cone_param_count(); ++d) {
    const int cone_block = d / kBlockParams;
    const int slot = d % kBlockParams;
    const int block_index = cone_circuit_.cone.block_indices[static_cast<size_t>(cone_block)];
    if (block_index >= static_cast<int>(a.blocks.size()))
      throw std::invalid_argument("commit: ansatz layout mismatch");
    a.blocks[static_cast<size_t>(block_index)].angles[static_cast<size_t>(slot)] =
        params_[static_cast<size_t>(d)];
  }
}

std::pair<Ansatz, double> sweep_cone(const Ansatz& a, const TrotterTerm& t, int n_sweeps,
                                     std::vector<ObjectiveSample>* trace) {
  ConeOptimizer opt(a, t);
  const double value = opt.run_cone(n_sweeps, trace);
  Ansatz out = a;
  opt.commit(out);
  return {out, value};
}

double angle_update_real(const Ansatz& a, const TrotterTerm& t, int cone_param_index) {
  if (t.kind != TimeKind::real) throw std::invalid_argument("angle_update_real: wrong kind");
  ConeOptimizer opt(a, t);
  return opt.angle_update_value(cone_param_index, t.tau);
}

double angle_update_imag(const Ansatz& a, const TrotterTerm& t, int cone_param_index) {
  if (t.kind != TimeKind::imaginary)
    throw std::invalid_argument("angle_update_imag: wrong kind");
  ConeOptimizer opt(a, t);
  return opt.angle_update_value(cone_param_index, t.tau);
}

double ConeOptimizer::angle_update_value(int param, double tau_eff) const {
  if (param < 0 || param >= cone_param_count())
    throw std::invalid_argument("angle update: parameter index out of range");
  const double th = tau_eff * term_.coeff;
  const double theta = params_[static_cast<size_t>(param)];
  if (th == 0.0) return theta;
  const int gi = param_gate_[static_cast<size_t>(param)];
  const Gate& g = cone_circuit_.circuit.gates[static_cast<size_t>(gi)];
  State prefix = zero_state(cone_circuit_.circuit.n_qubits);
  for (int i = 0; i < gi; ++i)
    apply_gate(prefix, cone_circuit_.circuit.gates[static_cast<size_t>(i)]);
  double left = 0.0;
  double right = 0.0;
  if (term_.kind == TimeKind::real) {
    const PauliString gen = rotation_generator(g, cone_circuit_.circuit.n_qubits);
    const Eigen::VectorXcd gpre = pauli_apply(gen, prefix).amps;
    const double e_plus = 2.0 * expectation_raw(gi, theta, 0.5 * (prefix.amps + gpre));
    const double e_minus = 2.0 * expectation_raw(gi, theta, 0.5 * (prefix.amps - gpre));
    left = std::cos(th);
    right = 0.5 * std::sin(th) * (e_plus - e_minus);
  } else {
    const double e0 = expectation_override(gi, theta, prefix.amps);
    const double ep = expectation_override(gi, theta + M_PI / 4.0, prefix.amps);
    const double em = expectation_override(gi, theta - M_PI / 4.0, prefix.amps);
    left = std::cosh(th) - std::sinh(th) * e0;
    right = -0.5 * std::sinh(th) * (ep - em);
  }
  if (std::hypot(left, right) < kFlatAmplitudeTol) return theta;
  return wrap_angle(M_PI / 2.0 - std::atan2(left, right) + theta);
}

}  // namespace varqte
