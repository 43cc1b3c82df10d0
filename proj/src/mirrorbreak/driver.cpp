// Copyright 2026 The Mirrorbreak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "mirrorbreak/driver.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <limits>
#include <stdexcept>

#include "mirrorbreak/transpiler.hpp"

namespace mirrorbreak {

void ContractionConfig::validate(int num_qubits) const {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (chi_max < 1) throw std::invalid_argument("chi_max must be >= 1");
  if (tau < 4 * static_cast<std::size_t>(num_qubits)) {
    throw std::invalid_argument("tau must be at least the identity MPO size 4N = " +
                                std::to_string(4 * num_qubits));
  }
  if (unswap.max_outer_iterations < 1) throw std::invalid_argument("max unswap iterations must be >= 1");
  if (side_mode == SideMode::Fixed && fixed_frequency < 1) {
    throw std::invalid_argument("fixed side frequency must be >= 1");
  }
  if (stall_limit < 1) throw std::invalid_argument("stall_limit must be >= 1");
}

std::vector<Gate> take_front_layer(std::vector<Gate>& pending) {
  std::vector<Gate> layer, rest;
  std::vector<bool> blocked;
  auto is_blocked = [&](int q) { return static_cast<std::size_t>(q) < blocked.size() && blocked[q]; };
  auto block = [&](int q) {
    if (static_cast<std::size_t>(q) >= blocked.size()) blocked.resize(static_cast<std::size_t>(q) + 1, false);
    blocked[static_cast<std::size_t>(q)] = true;
  };
  for (Gate& g : pending) {
    bool free = !is_blocked(g.qubits[0]) && !(g.is_two_qubit() && is_blocked(g.qubits[1]));
    if (free) {
      if (g.is_two_qubit()) {
        block(g.qubits[0]);
        block(g.qubits[1]);
      }
      layer.push_back(std::move(g));
    } else {
      block(g.qubits[0]);
      if (g.is_two_qubit()) block(g.qubits[1]);
      rest.push_back(std::move(g));
    }
  }
  pending = std::move(rest);
  return layer;
}

MatrixProductOperator absorb_layer(MatrixProductOperator m, const std::vector<Gate>& layer,
                                   Side side, const Truncation& trunc) {
  for (const Gate& g : layer) m = absorb_gate(std::move(m), g, side, trunc);
  return m;
}

Side select_side(const std::vector<Gate>& left_layer, const std::vector<Gate>& right_layer,
                 const MatrixProductOperator& m, const ContractionConfig& cfg, std::size_t step) {
  if (left_layer.empty() && right_layer.empty()) throw std::logic_error("select_side: both sides exhausted");
  if (right_layer.empty()) return Side::Left;
  if (left_layer.empty()) return Side::Right;
  if (cfg.side_mode == SideMode::Fixed) {
    return (step / static_cast<std::size_t>(cfg.fixed_frequency)) % 2 == 0 ? Side::Left : Side::Right;
  }
  const Truncation tr = cfg.truncation();
  const std::size_t left = absorb_layer(m, left_layer, Side::Left, tr).total_elements();
  const std::size_t right = absorb_layer(m, right_layer, Side::Right, tr).total_elements();
  return right < left ? Side::Right : Side::Left;
}

namespace {

// One half of the circuit still waiting to be absorbed.
//   output side: remaining operator = P_{layout}^-1-routed gates, absorbed with G*M
//   input side : gates listed innermost first (reverse program order)
struct PendingSide {
  std::vector<Gate> gates;  // routed, innermost first
  QubitPermutation layout;  // logical -> physical after consumed routing swaps
  std::vector<Gate> next;   // cached front layer
  bool next_valid = false;

  const std::vector<Gate>& front() {
    if (!next_valid) {
      next = take_front_layer(gates);
      next_valid = true;
    }
    return next;
  }
  bool empty() const { return gates.empty() && (!next_valid || next.empty()); }

  // Returns the cached layer to the front of the queue.
  void flush() {
    if (next_valid) {
      next.insert(next.end(), std::make_move_iterator(gates.begin()), std::make_move_iterator(gates.end()));
      gates = std::move(next);
      next.clear();
      next_valid = false;
    }
  }

  void reset(std::vector<Gate> routed, int n) {
    gates = std::move(routed);
    layout = QubitPermutation::identity(n);
    next.clear();
    next_valid = false;
  }

  std::size_t consume_front() {
    std::size_t source_two = 0;
    for (const Gate& g : next) {
      if (g.origin == GateOrigin::TranspilationSwap) {
        layout.push_left(std::min(g.qubits[0], g.qubits[1]));
      } else if (g.is_two_qubit()) {
        ++source_two;
      }
    }
    next.clear();
    next_valid = false;
    return source_two;
  }
};

bool has_source_two_qubit(const std::vector<Gate>& layer) {
  return std::any_of(layer.begin(), layer.end(), [](const Gate& g) {
    return g.is_two_qubit() && g.origin != GateOrigin::TranspilationSwap;
  });
}

std::vector<Gate> routed_gates(int n, std::vector<Gate> gates) {
  return route_linear(Circuit(n, std::move(gates))).circuit.gates();
}

class Driver {
 public:
  Driver(const Circuit& c, const ContractionConfig& cfg)
      : n_(c.num_qubits()), cfg_(cfg), start_(std::chrono::steady_clock::now()) {
    cfg_.unswap.epsilon = cfg.epsilon;
    cfg_.unswap.chi_max = cfg.chi_max;
    cfg_.unswap.threads = cfg.threads;
    m_ = identity_mpo(n_);

    const RoutedCircuit routed = route_linear(c);
    const auto [r1, r2] = split_at_midpoint(routed.circuit);
    const QubitPermutation id = QubitPermutation::identity(n_);
    const QubitPermutation psi = track_layout(r1, id);
    const Circuit l1 = strip_transpilation_swaps(r1, id);
    const Circuit l2 = strip_transpilation_swaps(r2, psi);
    // U = P_psi^-1 * reindex(l2, psi) * reindex(l1, psi) * P_psi
    out_ = psi.inverse();
    in_ = psi;
    out_side_.reset(routed_gates(n_, reindex(l2, psi).gates()), n_);
    std::vector<Gate> b = reindex(l1, psi).gates();
    std::reverse(b.begin(), b.end());
    in_side_.reset(routed_gates(n_, std::move(b)), n_);
  }

  SimulationResult run() {
    int stall = 0;
    bool force = false;
    while (!out_side_.empty() || !in_side_.empty()) {
      const std::size_t cycle_start = consumed_;
      // After a cycle that only moved routing swaps, absorb past tau (up to
      // 4 tau) until a source gate lands, so the same swaps are not stripped
      // again.
      while (!out_side_.empty() || !in_side_.empty()) {
        const bool over = m_.total_elements() >= cfg_.tau;
        if (over && !(force && consumed_ == cycle_start)) break;
        if (!absorb_step(force, over ? 4 * cfg_.tau : std::numeric_limits<std::size_t>::max())) break;
      }
      if (out_side_.empty() && in_side_.empty()) break;

      const std::size_t before = m_.total_elements();
      unswap_and_rewire();
      const std::size_t after = m_.total_elements();
      // A cycle without a source gate only moved routing swaps in and out of
      // the MPO; rerouting would repeat it, so it counts toward the stall.
      const bool no_progress = consumed_ == cycle_start;
      force = no_progress;
      if (no_progress || (static_cast<double>(after) > 0.99 * static_cast<double>(before) && after >= cfg_.tau)) {
        ++stall;
      } else {
        stall = 0;
      }
      if (stall >= cfg_.stall_limit) {
        throw StallError("no exploitable mirror structure: " + std::to_string(stall) +
                             " consecutive unswap cycles made no progress; the MPO holds " + std::to_string(after) +
                             " elements (tau = " + std::to_string(cfg_.tau) + ") after " +
                             std::to_string(consumed_) + " two-qubit gates",
                         std::move(trace_));
      }
    }
    if (m_.max_bond() > 1) unswap_and_rewire();
    // terminal rewiring of the output side's routing layout
    out_ = out_.compose(out_side_.layout.inverse());
    out_side_.layout = QubitPermutation::identity(n_);

    SimulationResult r;
    r.state = apply_to_zero(m_, cfg_.truncation());
    r.output_permutation = out_;
    r.input_permutation = in_;
    r.truncation_error = m_.chain().truncation_error() + r.state.chain().truncation_error();
    r.final_mpo = std::move(m_);
    r.trace = std::move(trace_);
    r.unitaries_consumed = consumed_;
    r.layers_absorbed = layers_;
    r.unswap_calls = unswap_calls_;
    return r;
  }

 private:
  // With prefer_source set, a layer holding a source two-qubit gate wins over
  // one made only of routing swaps. The layer is dropped (returns false) if
  // the MPO would exceed limit elements.
  bool absorb_step(bool prefer_source, std::size_t limit) {
    const std::vector<Gate>& left = out_side_.front();
    const std::vector<Gate>& right = in_side_.front();
    if (left.empty() && right.empty()) return false;
    const bool src_l = has_source_two_qubit(left), src_r = has_source_two_qubit(right);
    const Side side = prefer_source && src_l != src_r ? (src_l ? Side::Left : Side::Right)
                                                      : select_side(left, right, m_, cfg_, layers_);
    PendingSide& s = side == Side::Left ? out_side_ : in_side_;
    MatrixProductOperator next = absorb_layer(m_, s.front(), side, cfg_.truncation());
    next.chain().compress(cfg_.truncation());
    if (next.total_elements() > limit) return false;
    m_ = std::move(next);
    consumed_ += s.consume_front();
    ++layers_;
    record(Phase::Absorb);
    return true;
  }

  void unswap_and_rewire() {
    out_side_.flush();
    in_side_.flush();
    UnswapResult u = unswap(m_, cfg_.unswap);
    ++unswap_calls_;
    m_ = std::move(u.reduced);
    record(Phase::Unswap);

    // output side: P_Out * A_rem * P_lambda^-1 * P_L * M~  ->  P_{Out o tau} * A' * M~
    const QubitPermutation tau = out_side_.layout.inverse().compose(u.p_left);
    const Circuit a_rem = strip_transpilation_swaps(Circuit(n_, out_side_.gates), out_side_.layout);
    out_ = out_.compose(tau);
    out_side_.reset(routed_gates(n_, reindex(a_rem, tau.inverse()).gates()), n_);

    // input side: M~ * P_R * P_lambda * B_rem * P_In  ->  M~ * B' * P_{tau' o In}
    const QubitPermutation tau_in = u.p_right.compose(in_side_.layout);
    const Circuit b_rem = strip_transpilation_swaps(Circuit(n_, in_side_.gates), in_side_.layout);
    in_ = tau_in.compose(in_);
    in_side_.reset(routed_gates(n_, reindex(b_rem, tau_in).gates()), n_);
  }

  void record(Phase phase) {
    TraceRecord rec;
    rec.phase = phase;
    rec.unitaries_consumed = consumed_;
    rec.elements = m_.total_elements();
    rec.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    rec.chi_capped = m_.chain().chi_capped();
    m_.chain().clear_chi_capped();
    trace_.push_back(rec);
  }

  int n_;
  ContractionConfig cfg_;
  std::chrono::steady_clock::time_point start_;
  MatrixProductOperator m_;
  QubitPermutation out_, in_;
  PendingSide out_side_, in_side_;
  ContractionTrace trace_;
  std::size_t consumed_ = 0;
  std::size_t layers_ = 0;
  std::size_t unswap_calls_ = 0;
};

}  // namespace

SimulationResult run(const Circuit& c, const ContractionConfig& cfg) {
  if (c.empty()) throw std::invalid_argument("run: circuit is empty");
  cfg.validate(c.num_qubits());
  return Driver(c, cfg).run();
}

std::vector<std::string> sample_output(const SimulationResult& r, std::size_t shots,
                                       std::uint64_t seed) {
  std::vector<std::string> raw = sample(r.state, shots, seed);
  for (std::string& s : raw) s = r.output_permutation.apply_to_bits(s);
  return raw;
}

std::vector<cplx> output_statevector(const SimulationResult& r) {
  const DenseTensor v = mps_to_dense(r.state);
  const int n = r.state.num_sites();
  std::vector<cplx> out(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    std::size_t y = 0;
    for (int q = 0; q < n; ++q) {
      if ((x >> q) & 1) y |= std::size_t{1} << r.output_permutation(q);
    }
    out[y] = v[x];
  }
  return out;
}

}  // namespace mirrorbreak
