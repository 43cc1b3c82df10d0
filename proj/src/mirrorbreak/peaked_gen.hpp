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

#include <cstdint>
#include <optional>
#include <string>

#include "mirrorbreak/circuit.hpp"
#include "mirrorbreak/permutation.hpp"

namespace mirrorbreak {

struct GenerateParams {
  int qubits = 10;
  int depth = 100;  // two-qubit gate budget
  double peak_weight = 0.1;
  int obfuscation_swaps = 0;
  std::uint64_t seed = 0;
};

struct PeakedInstance {
  Circuit circuit;
  std::string peak;  // qubit 0 first
  double design_weight = 1.0;
  std::optional<double> achieved_weight;  // oracle value, n <= 14
  std::uint64_t seed = 0;
  QubitPermutation hidden_permutation;
};

/// Mirror instance with a planted peak, in program order:
///   RY(t) on every qubit with cos(t/2)^(2n) = peak_weight (skipped at 1),
///   X on the qubits that the hidden permutation carries onto peak ones,
///   U = random U3 dressing + RZZ on random pairs, with floor(k/2) random
///       SWAPs mixed in,
///   ceil(k/2) random SWAPs whose product is the hidden permutation Pi,
///   U^dagger relabeled through Pi.
/// The net operator after the X layer is Pi, so the output is a product
/// distribution whose mode is `peak` with probability peak_weight.
/// Throws GuardError on invalid parameters.
PeakedInstance generate(const GenerateParams& p);

/// {"peak", "design_weight", "achieved_weight" (n <= 14), "seed"}.
std::string sidecar_json(const PeakedInstance& inst);

/// Writes `<stem>.qasm` and `<stem>.json`. Throws std::runtime_error on
/// I/O failure.
void write_instance(const PeakedInstance& inst, const std::string& stem);

}  // namespace mirrorbreak
