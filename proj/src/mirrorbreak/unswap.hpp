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
#include <limits>

#include "mirrorbreak/chain.hpp"
#include "mirrorbreak/mpo.hpp"
#include "mirrorbreak/permutation.hpp"

namespace mirrorbreak {

enum class Acceptance { Strict, Relaxed };
enum class UnswapStrategy { Sequential, ParityParallel };

struct UnswapConfig {
  Acceptance acceptance = Acceptance::Strict;
  UnswapStrategy strategy = UnswapStrategy::ParityParallel;
  int max_outer_iterations = 20;
  double epsilon = 2e-3;
  std::size_t chi_max = 8192;
  /// Candidate SVDs of one bond run concurrently when > 1.
  int threads = 1;

  Truncation truncation() const { return {epsilon, chi_max}; }
};

/// M = P_L * reduced * P_R.
struct UnswapResult {
  MatrixProductOperator reduced;
  QubitPermutation p_left;
  QubitPermutation p_right;
  std::size_t accepted_swaps = 0;
  std::size_t candidate_evaluations = 0;
  std::size_t elements_before = 0;
  std::size_t elements_after = 0;
};

/// Availability-set greedy: repeatedly pick the largest available bond
/// (lowest index on ties), try SWAP from the left, right and both sides,
/// keep the best if it shrinks the bond (strict) or does not grow it
/// (relaxed). Accepted bonds leave the set and re-add their neighbours.
UnswapResult unswap_sequential(const MatrixProductOperator& m, const UnswapConfig& cfg);

/// Batched greedy over bond parities in the cycle
/// both-even, both-odd, left-even, left-odd, right-even, right-odd,
/// until a full cycle yields no reduction.
UnswapResult unswap_parallel(const MatrixProductOperator& m, const UnswapConfig& cfg);

UnswapResult unswap(const MatrixProductOperator& m, const UnswapConfig& cfg);

}  // namespace mirrorbreak
