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


#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirrorbreak/circuit.hpp"
#include "mirrorbreak/mpo.hpp"
#include "mirrorbreak/mps.hpp"
#include "mirrorbreak/permutation.hpp"
#include "mirrorbreak/trace.hpp"
#include "mirrorbreak/unswap.hpp"

namespace mirrorbreak {

enum class SideMode { Adaptive, Fixed };

struct ContractionConfig {
  double epsilon = 2e-3;
  std::size_t chi_max = 8192;
  std::size_t tau = 1000000;
  /// acceptance, strategy and max_outer_iterations are read from here;
  /// epsilon and chi_max above override the unswap copies.
  UnswapConfig unswap{};
  SideMode side_mode = SideMode::Adaptive;
  /// Fixed mode: this many layers from the left, then as many from the right.
  int fixed_frequency = 1;
  int stall_limit = 3;
  int threads = 1;

  Truncation truncation() const { return {epsilon, chi_max}; }
  void validate(int num_qubits) const;
};

struct SimulationResult {
  /// M~|0...0>; qubit q of this state is output qubit output_permutation(q).
  MatrixProductState state;
  QubitPermutation output_permutation;
  /// Outstanding input-side permutation; acts trivially on |0...0>.
  QubitPermutation input_permutation;
  MatrixProductOperator final_mpo;
  ContractionTrace trace;
  std::size_t unitaries_consumed = 0;
  std::size_t layers_absorbed = 0;
  std::size_t unswap_calls = 0;
  double truncation_error = 0.0;
};

/// Raised when repeated unswapping cannot bring the MPO back under tau.
class StallError : public std::runtime_error {
 public:
  StallError(const std::string& msg, ContractionTrace trace)
      : std::runtime_error(msg), trace_(std::move(trace)) {}
  const ContractionTrace& trace() const { return trace_; }

 private:
  ContractionTrace trace_;
};

/// Removes and returns the front layer of `pending`: each gate whose qubits
/// are not touched by an earlier gate left behind, with at most one
/// two-qubit gate per qubit. Single-qubit gates ahead of a layer gate on
/// the same qubit join the layer.
std::vector<Gate> take_front_layer(std::vector<Gate>& pending);

MatrixProductOperator absorb_layer(MatrixProductOperator m, const std::vector<Gate>& layer,
                                   Side side, const Truncation& trunc);

/// Chooses the side to absorb from. Adaptive: trial absorption of both next
/// layers, smaller total_elements wins, ties go left. Fixed: blocks of
/// cfg.fixed_frequency layers, left first; `step` counts absorbed layers.
/// An empty side is never chosen; both empty throws.
Side select_side(const std::vector<Gate>& left_layer, const std::vector<Gate>& right_layer,
                 const MatrixProductOperator& m, const ContractionConfig& cfg, std::size_t step);

/// Full pipeline: route, split, absorb layers from both halves into an
/// identity MPO, unswap and rewire whenever the MPO reaches tau elements,
/// then apply to |0...0>. Throws StallError on a stalled contraction.
SimulationResult run(const Circuit& c, const ContractionConfig& cfg);

/// Samples from a finished run, bitstrings in output qubit order.
std::vector<std::string> sample_output(const SimulationResult& r, std::size_t shots,
                                       std::uint64_t seed);

/// Dense output state (output qubit order), n <= 12.
std::vector<cplx> output_statevector(const SimulationResult& r);

}  // namespace mirrorbreak
