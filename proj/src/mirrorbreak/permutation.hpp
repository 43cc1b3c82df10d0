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
#include <string>
#include <vector>

#include "mirrorbreak/tensor.hpp"

namespace mirrorbreak {

/// A bijection sigma on {0..N-1} together with a factorization into
/// adjacent transpositions t_i = (i, i+1):
///
///     sigma = t_{f[0]} o t_{f[1]} o ... o t_{f[k-1]}
///
/// As an operator, P_sigma moves the content of qubit q to qubit sigma(q),
/// so P_sigma * g(a, b) * P_sigma^-1 = g(sigma(a), sigma(b)) and
/// P_alpha * P_beta = P_{alpha o beta}. SWAP(i, i+1) is P_{t_i}.
class QubitPermutation {
 public:
  QubitPermutation() = default;
  static QubitPermutation identity(int n);

  /// Validates bijectivity; factorization by bubble sort
  /// (length = inversion count <= N(N-1)/2).
  static QubitPermutation from_mapping(std::vector<int> mapping);
  /// sigma = t_{f[0]} o ... o t_{f[k-1]}.
  static QubitPermutation from_transpositions(int n, std::vector<int> factors);

  int size() const { return static_cast<int>(mapping_.size()); }
  int operator()(int q) const { return mapping_.at(static_cast<std::size_t>(q)); }
  const std::vector<int>& mapping() const { return mapping_; }
  const std::vector<int>& factorization() const { return factors_; }
  bool is_identity() const;

  QubitPermutation inverse() const;
  /// (this o other)(q) = this(other(q)).
  QubitPermutation compose(const QubitPermutation& other) const;

  /// this <- this o t_i  (operator: P * SWAP(i, i+1)).
  void push_right(int i);
  /// this <- t_i o this  (operator: SWAP(i, i+1) * P).
  void push_left(int i);

  /// 2^N x 2^N operator matrix, qubit 0 least significant. N <= 12.
  DenseTensor dense() const;

  /// Bitstring relabeling: out[sigma(q)] = bits[q].
  std::string apply_to_bits(const std::string& bits) const;

  friend bool operator==(const QubitPermutation& a, const QubitPermutation& b) {
    return a.mapping_ == b.mapping_;
  }

 private:
  std::vector<int> mapping_;
  std::vector<int> factors_;
};

}  // namespace mirrorbreak
