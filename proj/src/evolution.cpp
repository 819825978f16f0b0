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

#include "varqte/evolution.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace varqte {

namespace {

std::string term_label(const PauliString& op) {
  std::string label;
  for (int q : op.support()) {
    label.push_back(op.factor(q));
    label += std::to_string(q);
  }
  if (label.empty()) label = "I";
  return label;
}

bool is_wrap_pair(const std::vector<int>& support, int n) {
  return support.size() == 2 && support[0] == 0 && support[1] == n - 1;
}

void check_local(const Hamiltonian& h) {
  for (const auto& term : h.terms) {
    const std::vector<int> s = term.op.support();
    if (s.empty() || s.size() > 2)
      throw std::invalid_argument("trotter_sequence: terms must be one- or two-local");
    if (s.size() == 2 && s[1] - s[0] != 1 && !is_wrap_pair(s, h.n_qubits))
      throw std::invalid_argument("trotter_sequence: two-local terms must be nearest-neighbor");
    if (!std::isfinite(term.coeff))
      throw std::invalid_argument("trotter_sequence: non-finite coefficient");
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<TrotterTerm> trotter_sequence(const Hamiltonian& h, double tau, TrotterOrder order,
                                          TimeKind kind) {
  check_local(h);
  std::vector<TrotterTerm> bonds;
  std::vector<TrotterTerm> sites;
  for (const auto& term : h.terms) {
    TrotterTerm t{term.coeff, term.op, tau, kind};
    (term.op.support().size() == 2 ? bonds : sites).push_back(t);
  }
  std::vector<TrotterTerm> out;
  if (order == TrotterOrder::first) {
    out.insert(out.end(), bonds.begin(), bonds.end());
    out.insert(out.end(), sites.begin(), sites.end());
    return out;
  }
  // symmetric splitting: half-coefficient bond lists around the site list
  for (TrotterTerm t : bonds) {
    t.coeff *= 0.5;
    out.push_back(t);
  }
  out.insert(out.end(), sites.begin(), sites.end());
  for (TrotterTerm t : bonds) {
    t.coeff *= 0.5;
    out.push_back(t);
  }
  return out;
}

TrotterPlan make_trotter_plan(const Hamiltonian& h, double t, double tau, TrotterOrder order,
                              TimeKind kind) {
  if (tau <= 0.0) throw std::invalid_argument("make_trotter_plan: tau must be positive");
  const int steps = static_cast<int>(std::lround(t / tau));
  if (std::abs(steps * tau - t) > 1e-12 * std::max(1.0, std::abs(t)))
    throw std::invalid_argument("make_trotter_plan: t must be an integer multiple of tau");
  return {order, trotter_sequence(h, tau, order, kind), steps, tau};
}

Hamiltonian ising_hamiltonian(int n_qubits, double j, double lambda, Boundary boundary) {
  if (n_qubits < 2) throw std::invalid_argument("ising_hamiltonian: need at least 2 qubits");
  Hamiltonian h;
  h.n_qubits = n_qubits;
  for (int q = 0; q + 1 < n_qubits; ++q)
    h.terms.push_back({-j, PauliString::two_site(n_qubits, q, 'Z', q + 1, 'Z')});
  if (boundary == Boundary::periodic && n_qubits > 2)
    h.terms.push_back({-j, PauliString::two_site(n_qubits, n_qubits - 1, 'Z', 0, 'Z')});
  if (lambda != 0.0)
    for (int q = 0; q < n_qubits; ++q)
      h.terms.push_back({-j * lambda, PauliString::single(n_qubits, q, 'X')});
  return h;
}

std::string RunRecord::to_csv(bool include_wall_clock) const {
  std::ostringstream out;
  out << "step,time";
  for (size_t k = 0; k < term_labels.size(); ++k) out << ",obj_" << k;
  out << ",energy";
  if (has_distance) out << ",distance";
  if (include_wall_clock) out << ",wall_ms";
  out << "\n";
  for (const auto& row : rows) {
    out << row.step << "," << format_double(row.time);
    for (size_t k = 0; k < term_labels.size(); ++k)
      out << ","
          << (k < row.objectives.size() ? format_double(row.objectives[k])
                                        : std::string("nan"));
    out << "," << format_double(row.energy);
    if (has_distance)
      out << "," << (row.distance ? format_double(*row.distance) : std::string("nan"));
    if (include_wall_clock) out << "," << format_double(row.wall_ms);
    out << "\n";
  }
  return out.str();
}

double apply_strategy(ConeOptimizer& opt, const TrotterTerm& term, const Strategy& s) {
  if (s.sweeps < 1) throw std::invalid_argument("apply_strategy: sweeps must be >= 1");
  const bool divide = term.kind == TimeKind::real;
  switch (s.kind) {
    case StrategyKind::cone:
      opt.run_cone(s.sweeps);
      break;
    case StrategyKind::block:
      opt.run_block(s.sweeps, divide ? term.tau / (s.sweeps * opt.block_count()) : term.tau);
      break;
    case StrategyKind::angle:
      opt.run_angle(s.sweeps,
                    divide ? term.tau / (s.sweeps * opt.block_count() * kBlockParams)
                           : term.tau);
      break;
  }
  return opt.objective_vs_initial();
}

double step_strategy(Ansatz& a, const TrotterTerm& term, const Strategy& s) {
  ConeOptimizer opt(a, term);
  const double value = apply_strategy(opt, term, s);
  opt.commit(a);
  return value;
}

EvolutionDriver::EvolutionDriver(Ansatz a, Hamiltonian h, EvolveOptions options)
    : ansatz_(std::move(a)), h_(std::move(h)), options_(options) {
  if (h_.n_qubits != ansatz_.n_qubits)
    throw std::invalid_argument("EvolutionDriver: dimension mismatch");
  for (const auto& term : trotter_sequence(h_, 1.0, options_.order, options_.kind))
    record_.term_labels.push_back(term_label(term.op));
  record_.has_distance = options_.oracle;
  if (options_.oracle) {
    exact_ = std::make_unique<ExactEvolver>(h_);
    initial_state_ = prepare_state(ansatz_);
  }
  StepRow row;
  row.step = 0;
  row.time = 0.0;
  row.energy = energy(ansatz_, h_);
  if (options_.oracle)
    row.distance = distance_sq(prepare_state(ansatz_), initial_state_);  // 0 at t = 0
  record_.rows.push_back(std::move(row));
}

void EvolutionDriver::mark_resumed(int steps_done, double elapsed) {
  steps_done_ = steps_done;
  elapsed_ = elapsed;
  record_.rows.clear();
  if (options_.oracle)
    throw std::invalid_argument("resume with the exact-state oracle is not supported");
}

void EvolutionDriver::run_segment(int steps, double tau) {
  if (steps < 0) throw std::invalid_argument("run_segment: negative step count");
  const std::vector<TrotterTerm> terms =
      trotter_sequence(h_, tau, options_.order, options_.kind);
  for (int step = 0; step < steps; ++step) {
    const auto t0 = std::chrono::steady_clock::now();
    StepRow row;
    row.objectives.reserve(terms.size());
    for (const auto& term : terms)
      row.objectives.push_back(step_strategy(ansatz_, term, options_.strategy));
    elapsed_ += tau;
    ++steps_done_;
    row.step = steps_done_;
    row.time = elapsed_;
    row.energy = energy(ansatz_, h_);
    if (options_.oracle) {
      const State exact = exact_->evolve(initial_state_, elapsed_, options_.kind);
      row.distance = distance_sq(prepare_state(ansatz_), exact);
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    record_.rows.push_back(std::move(row));
  }
}

RunRecord evolve(Ansatz& a, const Hamiltonian& h, double t, double tau,
                 const EvolveOptions& options) {
  const TrotterPlan plan = make_trotter_plan(h, t, tau, options.order, options.kind);
  EvolutionDriver driver(a, h, options);
  driver.run_segment(plan.steps, plan.tau);
  a = driver.ansatz();
  return driver.record();
}

std::vector<std::pair<double, double>> trotter_error_curve(const Hamiltonian& h, double t,
                                                           std::span<const double> taus,
                                                           TrotterOrder order, int sweeps) {
  std::vector<std::pair<double, double>> out;
  for (double tau : taus) {
    Ansatz a = make_identity_ansatz(h.n_qubits, 2, Boundary::open);
    EvolveOptions options;
    options.order = order;
    options.strategy = {StrategyKind::cone, sweeps};
    options.kind = TimeKind::real;
    options.oracle = true;
    const RunRecord record = evolve(a, h, t, tau, options);
    out.emplace_back(tau, record.rows.back().distance.value());
  }
  return out;
}

}  // namespace varqte
