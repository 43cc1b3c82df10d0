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

#include "mirrorbreak/transpiler.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mirrorbreak {

namespace {

// Running layout with both directions kept in sync.
class Layout {
 public:
  explicit Layout(const QubitPermutation& initial)
      : to_phys_(initial.mapping()), to_log_(initial.inverse().mapping()) {}

  int phys(int logical) const { return to_phys_[static_cast<std::size_t>(logical)]; }
  int logical(int phys) const { return to_log_[static_cast<std::size_t>(phys)]; }

  void swap_wires(int p, int r) {
    const int a = logical(p), b = logical(r);
    std::swap(to_log_[static_cast<std::size_t>(p)], to_log_[static_cast<std::size_t>(r)]);
    to_phys_[static_cast<std::size_t>(a)] = r;
    to_phys_[static_cast<std::size_t>(b)] = p;
  }

  QubitPermutation snapshot() const { return QubitPermutation::from_mapping(to_phys_); }

 private:
  std::vector<int> to_phys_;
  std::vector<int> to_log_;
};

void check_size(const Circuit& c, const QubitPermutation& p) {
  if (p.size() != c.num_qubits()) {
    throw std::invalid_argument("permutation size " + std::to_string(p.size()) +
                                " does not match circuit width " + std::to_string(c.num_qubits()));
  }
}

}  // namespace

RoutedCircuit route_linear(const Circuit& c) {
  const QubitPermutation start = QubitPermutation::identity(c.num_qubits());
  Layout layout(start);
  Circuit out(c.num_qubits());
  for (const Gate& g : c.gates()) {
    Gate routed = g;
    if (!g.is_two_qubit()) {
      routed.qubits[0] = layout.phys(g.qubits[0]);
      out.add(routed);
      continue;
    }
    const int pa = layout.phys(g.qubits[0]);
    int pb = layout.phys(g.qubits[1]);
    while (std::abs(pa - pb) > 1) {
      const int next = pb + (pa > pb ? 1 : -1);
      out.add(Gate::transpilation_swap(std::min(pb, next), std::max(pb, next)));
      layout.swap_wires(pb, next);
      pb = next;
    }
    routed.qubits = {pa, pb};
    out.add(routed);
  }
  return {std::move(out), layout.snapshot()};
}

Circuit strip_transpilation_swaps(const Circuit& routed, const QubitPermutation& initial_layout) {
  check_size(routed, initial_layout);
  Layout layout(initial_layout);
  Circuit out(routed.num_qubits());
  for (const Gate& g : routed.gates()) {
    if (g.origin == GateOrigin::TranspilationSwap) {
      if (std::abs(g.qubits[0] - g.qubits[1]) != 1) {
        throw std::logic_error("inconsistent routing: transpilation SWAP on non-adjacent wires " +
                               std::to_string(g.qubits[0]) + "," + std::to_string(g.qubits[1]));
      }
      layout.swap_wires(g.qubits[0], g.qubits[1]);
      continue;
    }
    Gate logical = g;
    for (std::size_t k = 0; k < g.arity(); ++k) logical.qubits[k] = layout.logical(g.qubits[k]);
    out.add(logical);
  }
  return out;
}

Circuit strip_transpilation_swaps(const Circuit& routed) {
  return strip_transpilation_swaps(routed, QubitPermutation::identity(routed.num_qubits()));
}

QubitPermutation track_layout(const Circuit& routed, const QubitPermutation& initial) {
  check_size(routed, initial);
  Layout layout(initial);
  for (const Gate& g : routed.gates()) {
    if (g.origin == GateOrigin::TranspilationSwap) layout.swap_wires(g.qubits[0], g.qubits[1]);
  }
  return layout.snapshot();
}

Circuit reindex(const Circuit& c, const QubitPermutation& p) {
  check_size(c, p);
  Circuit out(c.num_qubits());
  for (Gate g : c.gates()) {
    for (std::size_t k = 0; k < g.arity(); ++k) g.qubits[k] = p(g.qubits[k]);
    out.add(g);
  }
  return out;
}

}  // namespace mirrorbreak
