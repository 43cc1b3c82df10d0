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
#include <string>
#include <utility>
#include <vector>

#include "mirrorbreak/circuit.hpp"
#include "mirrorbreak/driver.hpp"

namespace mirrorbreak {

/// (bitstring, count) sorted by count descending, then bitstring ascending.
using Histogram = std::vector<std::pair<std::string, std::size_t>>;

Histogram histogram(const std::vector<std::string>& samples);

/// Relative frequencies over all 2^n outcomes (qubit 0 least significant).
std::vector<double> empirical_distribution(const std::vector<std::string>& samples, int num_qubits);

struct VerifyReport {
  double fidelity = 0.0;       // |<method|oracle>|^2
  double tvd = 0.0;            // sampled histogram vs oracle distribution
  std::size_t shots = 0;
  std::string method_peak;     // argmax of the contracted state
  std::string oracle_peak;
  double oracle_peak_probability = 0.0;
  bool peak_match = false;
};

/// Contracts `c`, compares with the statevector oracle. n <= 12.
VerifyReport verify_against_oracle(const Circuit& c, const ContractionConfig& cfg,
                                   std::size_t shots, std::uint64_t seed);

}  // namespace mirrorbreak
