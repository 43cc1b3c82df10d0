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
#include <vector>

#include "mirrorbreak/chain.hpp"
#include "mirrorbreak/circuit.hpp"
#include "mirrorbreak/tensor.hpp"

namespace mirrorbreak {

/// Which factor of the operator product a gate or swap multiplies.
///   Left  : G * M  (acts on the top / output legs)
///   Right : M * G  (acts on the bottom / input legs)
///   Both  : G * M * G  (swap candidates only)
enum class Side { Left, Right, Both };

/// Chain of N site tensors with axes (left bond, top, bottom, right bond),
/// top = output (row) index, bottom = input (column) index. Site i is qubit i.
class MatrixProductOperator {
 public:
  MatrixProductOperator() = default;
  explicit MatrixProductOperator(std::vector<DenseTensor> sites, double log_norm = 0.0);

  static MatrixProductOperator identity(int n);

  int num_sites() const { return static_cast<int>(chain_.length()); }
  const DenseTensor& site(int i) const { return chain_.site(static_cast<std::size_t>(i)); }
  std::size_t bond_dim(int i) const { return chain_.bond_dim(static_cast<std::size_t>(i)); }
  std::vector<std::size_t> bond_dims() const { return chain_.bond_dims(); }
  std::size_t max_bond() const { return chain_.max_bond(); }
  std::size_t total_elements() const { return chain_.total_elements(); }
  double log_norm() const { return chain_.log_norm(); }

  const SiteChain& chain() const { return chain_; }
  SiteChain& chain() { return chain_; }

 private:
  SiteChain chain_;
};

MatrixProductOperator identity_mpo(int n);

/// Absorbs `g` from `side` (Left or Right). Two-qubit gates must act on
/// adjacent sites and go through one two-site SVD at the orthogonality
/// center; single-qubit gates are a local 2x2 contraction.
MatrixProductOperator absorb_gate(MatrixProductOperator m, const Gate& g, Side side,
                                  const Truncation& trunc);

/// Two-sided canonicalizing sweep; see SiteChain::compress.
MatrixProductOperator compress(MatrixProductOperator m, const Truncation& trunc);

/// SWAP(bond, bond+1) applied from `side` with recompression of that bond.
MatrixProductOperator apply_swap_boundary(MatrixProductOperator m, int bond, Side side,
                                          const Truncation& trunc);

std::size_t total_elements(const MatrixProductOperator& m);

/// Full 2^n x 2^n matrix (qubit 0 least significant), including the norm
/// factor. n <= 12.
DenseTensor mpo_to_dense(const MatrixProductOperator& m);

/// Permutes the physical axes of a two-site MPO theta
/// (l, t_i, b_i, t_j, b_j, r) to apply SWAP(i, j) from `side`.
DenseTensor swap_theta(const DenseTensor& theta, Side side);

}  // namespace mirrorbreak
