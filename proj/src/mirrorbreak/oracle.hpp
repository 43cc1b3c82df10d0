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
#include <string>
#include <utility>
#include <vector>

#include "mirrorbreak/circuit.hpp"
#include "mirrorbreak/tensor.hpp"

namespace mirrorbreak {

/// 2^N amplitudes; bit q of the index is qubit q.
using Statevector = std::vector<cplx>;

/// Applies one gate in place.
void apply_gate(Statevector& psi, int num_qubits, const Gate& g);

/// U_c |0...0> by sequential gate application. N <= 24.
Statevector simulate(const Circuit& c);

std::vector<double> probabilities(const Statevector& psi);

/// Bitstring with qubit 0 first, and back.
std::string index_to_bits(std::uint64_t index, int num_qubits);
std::uint64_t bits_to_index(const std::string& bits);

/// Most likely outcome; lowest index wins ties.
std::pair<std::string, double> peak_of(const Statevector& psi);

/// Half L1 distance. Throws on size mismatch.
double tvd(const std::vector<double>& p, const std::vector<double>& q);

/// |<a|b>|^2 / (|a|^2 |b|^2).
double fidelity(const Statevector& a, const Statevector& b);

/// Dense 2^N x 2^N unitary of the whole circuit. N <= 12.
DenseTensor circuit_unitary(const Circuit& c);

}  // namespace mirrorbreak
