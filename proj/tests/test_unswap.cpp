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


#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "mirrorbreak/unswap.hpp"

using namespace mirrorbreak;
using mbtest::max_abs_diff;

namespace {

MatrixProductOperator permutation_mpo(const QubitPermutation& p, Side side = Side::Left) {
  MatrixProductOperator m = identity_mpo(p.size());
  const auto& f = p.factorization();
  // P = S_{f0} ... S_{fk-1}: the innermost factor goes in first
  if (side == Side::Left) {
    for (auto it = f.rbegin(); it != f.rend(); ++it) m = apply_swap_boundary(m, *it, Side::Left, {});
  } else {
    for (int i : f) m = apply_swap_boundary(m, i, Side::Right, {});
  }
  return m;
}

UnswapConfig config(UnswapStrategy s, Acceptance a = Acceptance::Strict) {
  UnswapConfig c;
  c.strategy = s;
  c.acceptance = a;
  c.epsilon = 1e-12;
  c.chi_max = 1 << 20;
  return c;
}

void check_decomposition(const MatrixProductOperator& input, const UnswapResult& r, double tol) {
  const DenseTensor rec = matmul(matmul(r.p_left.dense(), mpo_to_dense(r.reduced)), r.p_right.dense());
  CHECK(mbtest::rel_diff(rec, mpo_to_dense(input)) <= tol);
}

bool is_identity_mpo(const MatrixProductOperator& m) {
  const std::size_t dim = std::size_t{1} << m.num_sites();
  return m.max_bond() == 1 && max_abs_diff(mpo_to_dense(m), DenseTensor::identity(dim)) <= 1e-10;
}

}  // namespace

TEST_CASE("unswap: identity input") {
  for (auto s : {UnswapStrategy::Sequential, UnswapStrategy::ParityParallel}) {
    const UnswapResult r = unswap(identity_mpo(5), config(s));
    CHECK(r.accepted_swaps == 0);
    CHECK(r.p_left.is_identity());
    CHECK(r.p_right.is_identity());
    CHECK(r.elements_after == r.elements_before);
  }
}

TEST_CASE("unswap: single SWAP(0,1)") {
  const MatrixProductOperator m = absorb_gate(identity_mpo(2), Gate::two(GateKind::SWAP, 0, 1), Side::Left, {});
  for (auto s : {UnswapStrategy::Sequential, UnswapStrategy::ParityParallel}) {
    const UnswapResult r = unswap(m, config(s));
    CHECK(r.accepted_swaps == 1);
    CHECK(is_identity_mpo(r.reduced));
    CHECK(r.p_left.compose(r.p_right) == QubitPermutation::from_mapping({1, 0}));
    check_decomposition(m, r, 1e-10);
  }
}

TEST_CASE("unswap_parallel: SWAP(0,1) SWAP(2,3) extracted in the first left-even batch") {
  MatrixProductOperator m = identity_mpo(4);
  m = absorb_gate(m, Gate::two(GateKind::SWAP, 0, 1), Side::Left, {});
  m = absorb_gate(m, Gate::two(GateKind::SWAP, 2, 3), Side::Left, {});
  UnswapConfig cfg = config(UnswapStrategy::ParityParallel);
  cfg.max_outer_iterations = 1;
  const UnswapResult r = unswap_parallel(m, cfg);
  CHECK(r.accepted_swaps == 2);
  CHECK(r.p_left == QubitPermutation::from_mapping({1, 0, 3, 2}));
  CHECK(r.p_right.is_identity());
  CHECK(is_identity_mpo(r.reduced));
}

TEST_CASE("permutation completeness: every permutation for n <= 5, both strategies, both sides") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const QubitPermutation p = QubitPermutation::from_mapping(perm);
      for (Side side : {Side::Left, Side::Right}) {
        const MatrixProductOperator m = permutation_mpo(p, side);
        CHECK(max_abs_diff(mpo_to_dense(m), p.dense()) <= 1e-12);
        for (auto s : {UnswapStrategy::Sequential, UnswapStrategy::ParityParallel}) {
          const UnswapResult r = unswap(m, config(s));
          CHECK(is_identity_mpo(r.reduced));
          CHECK(r.p_left.compose(r.p_right) == p);
          check_decomposition(m, r, 1e-10);
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("permutation completeness: sampled n = 6, sequential vs parallel agreement") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const QubitPermutation p = QubitPermutation::from_mapping(perm);
    const MatrixProductOperator m = permutation_mpo(p);
    const UnswapResult a = unswap_sequential(m, config(UnswapStrategy::Sequential));
    const UnswapResult b = unswap_parallel(m, config(UnswapStrategy::ParityParallel));
    CHECK(is_identity_mpo(a.reduced));
    CHECK(is_identity_mpo(b.reduced));
    CHECK(a.p_left.compose(a.p_right) == b.p_left.compose(b.p_right));
  }
}

TEST_CASE("soundness, monotonicity and termination on structureless MPOs") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + mbtest::rand_int(rng, 4);
    const Circuit c = mbtest::random_adjacent_circuit(n, 3 * n, rng);
    MatrixProductOperator m = mbtest::mpo_of(c, {1e-12, 1 << 20});
    m = compress(m, {1e-12, 1 << 20});
    for (auto s : {UnswapStrategy::Sequential, UnswapStrategy::ParityParallel}) {
      for (auto a : {Acceptance::Strict, Acceptance::Relaxed}) {
        const UnswapResult r = unswap(m, config(s, a));
        check_decomposition(m, r, 1e-9);
        if (a == Acceptance::Strict) CHECK(r.elements_after <= r.elements_before);
        CHECK(r.candidate_evaluations <= static_cast<std::size_t>(20 * 3 * 64 * n));
      }
    }
  }
}

TEST_CASE("mixed structure: permutation on top of a shallow circuit") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const QubitPermutation p = QubitPermutation::from_mapping(perm);
    MatrixProductOperator m = permutation_mpo(p);
    Circuit layer(n);
    for (int q = 0; q + 1 < n; q += 2) mbtest::add_random_block(layer, q, q + 1, rng);
    for (const Gate& g : layer.gates()) m = absorb_gate(m, g, Side::Right, {});
    const UnswapResult r = unswap(m, config(UnswapStrategy::ParityParallel));
    check_decomposition(m, r, 1e-9);
    CHECK(r.elements_after <= r.elements_before);
  }
}
