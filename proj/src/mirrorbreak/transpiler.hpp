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

#include "mirrorbreak/circuit.hpp"
#include "mirrorbreak/permutation.hpp"

namespace mirrorbreak {

/// Output of linear-chain routing. Layouts map logical qubit -> physical
/// wire; routing always starts from the identity layout, and the routed
/// operator equals P_{final_layout} * U_logical (no restoring SWAPs).
struct RoutedCircuit {
  Circuit circuit;
  QubitPermutation final_layout;
};

/// Greedy nearest-neighbour routing without lookahead: for each two-qubit
/// gate whose wires are not adjacent, the second-listed qubit is walked
/// toward the first with SWAPs tagged GateOrigin::TranspilationSwap.
RoutedCircuit route_linear(const Circuit& c);

/// Removes transpilation SWAPs and rewrites the remaining gates to logical
/// labels, given the layout in force at the first gate. Throws
/// std::logic_error on a non-adjacent transpilation SWAP.
Circuit strip_transpilation_swaps(const Circuit& routed, const QubitPermutation& initial_layout);
Circuit strip_transpilation_swaps(const Circuit& routed);

/// Layout after running every transpilation SWAP of `routed` from `initial`.
QubitPermutation track_layout(const Circuit& routed, const QubitPermutation& initial);

/// Relabels every gate qubit q -> p(q); order unchanged.
Circuit reindex(const Circuit& c, const QubitPermutation& p);

}  // namespace mirrorbreak
