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
#include <vector>

#include "mirrorbreak/chain.hpp"
#include "mirrorbreak/mpo.hpp"
#include "mirrorbreak/tensor.hpp"

namespace mirrorbreak {

/// Chain of N site tensors with axes (left bond, physical, right bond).
/// The site contraction is kept at unit norm; `log_norm` records the norm
/// that was divided out when the state was produced.
class MatrixProductState {
 public:
  MatrixProductState() = default;
  explicit MatrixProductState(std::vector<DenseTensor> sites, double log_norm = 0.0);

  int num_sites() const { return static_cast<int>(chain_.length()); }
  const DenseTensor& site(int i) const { return chain_.site(static_cast<std::size_t>(i)); }
  std::size_t bond_dim(int i) const { return chain_.bond_dim(static_cast<std::size_t>(i)); }
  std::size_t max_bond() const { return chain_.max_bond(); }
  std::size_t total_elements() const { return chain_.total_elements(); }
  double log_norm() const { return chain_.log_norm(); }

  const SiteChain& chain() const { return chain_; }
  SiteChain& chain() { return chain_; }

 private:
  SiteChain chain_;
};

/// Computational basis state |bits>, bits[q] being qubit q.
MatrixProductState product_state(const std::string& bits);

/// M|0...0>, compressed and normalized. Throws NumericalError when the
/// column norm falls below 1e-12 of the norm a unitary would give.
MatrixProductState apply_to_zero(const MatrixProductOperator& m, const Truncation& trunc);

/// Sequential conditional sampling, site 0 first. Each bitstring has qubit
/// 0 as its first character. Throws NumericalError if the state is not
/// normalized to 1e-8.
std::vector<std::string> sample(const MatrixProductState& psi, std::size_t shots,
                                std::uint64_t seed);

/// Normalized 2^n amplitude vector (qubit 0 least significant). n <= 12.
DenseTensor mps_to_dense(const MatrixProductState& psi);

}  // namespace mirrorbreak
