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


// Shared fixtures: random circuits and dense-matrix comparisons.

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mirrorbreak/circuit.hpp"
#include "mirrorbreak/mpo.hpp"
#include "mirrorbreak/oracle.hpp"
#include "mirrorbreak/rng.hpp"
#include "mirrorbreak/tensor.hpp"

namespace mbtest {

using namespace mirrorbreak;

inline double rand_angle(std::mt19937_64& rng) { return 2.0 * std::numbers::pi * uniform01(rng); }

inline int rand_int(std::mt19937_64& rng, int n) {
  return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
}

inline DenseTensor random_tensor(std::vector<std::size_t> shape, std::mt19937_64& rng) {
  DenseTensor t(std::move(shape));
  std::normal_distribution<double> nd;
  for (auto& x : t.data()) x = cplx(nd(rng), nd(rng));
  return t;
}

inline Gate random_u3(int q, std::mt19937_64& rng) {
  return Gate::one(GateKind::U3, q, {rand_angle(rng), rand_angle(rng), rand_angle(rng)});
}

/// Dressed entangler on (a, b): U3 on both, then RZZ or CX.
inline void add_random_block(Circuit& c, int a, int b, std::mt19937_64& rng) {
  c.add(random_u3(a, rng));
  c.add(random_u3(b, rng));
  if (rng() & 1) {
    c.add(Gate::two(GateKind::RZZ, a, b, {rand_angle(rng)}));
  } else {
    c.add(Gate::two(GateKind::CX, a, b));
  }
}

/// Random circuit whose two-qubit gates all act on neighbouring qubits.
inline Circuit random_adjacent_circuit(int n, int two_qubit_gates, std::mt19937_64& rng) {
  Circuit c(n);
  for (int k = 0; k < two_qubit_gates; ++k) {
    const int a = rand_int(rng, n - 1);
    if (rng() & 1) {
      add_random_block(c, a, a + 1, rng);
    } else {
      add_random_block(c, a + 1, a, rng);
    }
  }
  return c;
}

/// Random circuit with arbitrary-range two-qubit gates (including SWAP).
inline Circuit random_long_range_circuit(int n, int gates, std::mt19937_64& rng) {
  Circuit c(n);
  for (int k = 0; k < gates; ++k) {
    const int a = rand_int(rng, n);
    int b = rand_int(rng, n - 1);
    if (b >= a) ++b;
    switch (rand_int(rng, 6)) {
      case 0: c.add(Gate::one(GateKind::H, a)); break;
      case 1: c.add(random_u3(a, rng)); break;
      case 2: c.add(Gate::two(GateKind::SWAP, a, b)); break;
      case 3: c.add(Gate::two(GateKind::CX, a, b)); break;
      default: c.add(Gate::two(GateKind::RZZ, a, b, {rand_angle(rng)})); break;
    }
  }
  return c;
}

inline double max_abs_diff(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double rel_diff(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape()) return INFINITY;
  double num = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) num += std::norm(a[i] - b[i]);
  return std::sqrt(num) / std::max(b.norm(), 1e-300);
}

/// Dense operator of a circuit made of gates on n qubits.
inline DenseTensor dense_of(const Circuit& c) { return circuit_unitary(c); }

inline DenseTensor dense_gate(int n, const Gate& g) { return circuit_unitary(Circuit(n, {g})); }

/// Builds an MPO equal to `c` by absorbing its gates from the left
/// (all gates must be adjacent).
inline MatrixProductOperator mpo_of(const Circuit& c, const Truncation& tr = {}) {
  MatrixProductOperator m = identity_mpo(c.num_qubits());
  for (const Gate& g : c.gates()) m = absorb_gate(std::move(m), g, Side::Left, tr);
  return m;
}

}  // namespace mbtest
