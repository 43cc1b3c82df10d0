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

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "mirrorbreak/tensor.hpp"

namespace mirrorbreak {

enum class GateKind { H, X, RX, RY, RZ, U3, CX, RZZ, SWAP };

/// Where a gate came from. Routing SWAPs are tagged so that rewiring can
/// strip exactly the ones it inserted.
enum class GateOrigin { Source, TranspilationSwap };

std::string_view gate_name(GateKind kind);
std::size_t gate_arity(GateKind kind);
std::size_t gate_param_count(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  std::array<int, 2> qubits{0, -1};  // second entry -1 for single-qubit gates
  std::array<double, 3> params{0.0, 0.0, 0.0};
  GateOrigin origin = GateOrigin::Source;

  /// Validating constructors. Throw std::invalid_argument on arity,
  /// parameter-count or repeated-qubit violations.
  static Gate one(GateKind kind, int q, std::vector<double> params = {});
  static Gate two(GateKind kind, int a, int b, std::vector<double> params = {});
  static Gate transpilation_swap(int a, int b);

  std::size_t arity() const { return gate_arity(kind); }
  bool is_two_qubit() const { return arity() == 2; }
  std::size_t num_params() const { return gate_param_count(kind); }

  /// Inverse gate (same qubits and origin).
  Gate dagger() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over `num_qubits` wires. Qubit 0 is the least
/// significant bit of a basis-state index everywhere in this project.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits);
  Circuit(int num_qubits, std::vector<Gate> gates);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Appends after checking qubit bounds.
  void add(Gate g);
  void append(const Circuit& other);

  std::size_t two_qubit_count() const;
  std::size_t source_two_qubit_count() const;

  /// Inverse circuit: reversed order, each gate daggered.
  Circuit inverse() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// 2x2 or 4x4 unitary. For two-qubit gates the row/column index is
/// 2*bit(qubits[0]) + bit(qubits[1]); CX has qubits[0] as control.
/// RZZ(t) = diag(e^{-it/2}, e^{it/2}, e^{it/2}, e^{-it/2}).
DenseTensor gate_unitary(const Gate& g);

/// Splits in program order so that the left half holds floor(T/2) of the T
/// two-qubit gates. Single-qubit gates between the two halves are divided
/// evenly, the left half taking the floor.
std::pair<Circuit, Circuit> split_at_midpoint(const Circuit& c);

}  // namespace mirrorbreak
