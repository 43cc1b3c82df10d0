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
#include <ranges>

#include "doctest.h"
#include "helpers.hpp"
#include "mirrorbreak/transpiler.hpp"

using namespace mirrorbreak;

namespace {

bool all_adjacent(const Circuit& c) {
  return std::all_of(c.gates().begin(), c.gates().end(), [](const Gate& g) {
    return !g.is_two_qubit() || std::abs(g.qubits[0] - g.qubits[1]) == 1;
  });
}

std::size_t count_transpilation_swaps(const Circuit& c) {
  return static_cast<std::size_t>(std::count_if(c.gates().begin(), c.gates().end(), [](const Gate& g) {
    return g.origin == GateOrigin::TranspilationSwap;
  }));
}

QubitPermutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  std::shuffle(m.begin(), m.end(), rng);
  return QubitPermutation::from_mapping(m);
}

}  // namespace

TEST_CASE("permutation: factorization reproduces the mapping") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + mbtest::rand_int(rng, 9);
    const QubitPermutation p = random_permutation(n, rng);
    CHECK(p.factorization().size() <= static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(QubitPermutation::from_transpositions(n, p.factorization()) == p);
    CHECK(p.compose(p.inverse()).is_identity());
  }
  CHECK_THROWS_AS(QubitPermutation::from_mapping({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(QubitPermutation::from_mapping({0, 3}), std::invalid_argument);
}

TEST_CASE("permutation: operator conventions") {
  std::mt19937_64 rng(22);
  const int n = 4;
  for (int trial = 0; trial < 20; ++trial) {
    const QubitPermutation a = random_permutation(n, rng), b = random_permutation(n, rng);
    // P_a P_b = P_{a o b}
    CHECK(mbtest::max_abs_diff(matmul(a.dense(), b.dense()), a.compose(b).dense()) == 0.0);
    // P g(x, y) P^-1 = g(a(x), a(y))
    const Gate g = Gate::two(GateKind::CX, 0, 2);
    const DenseTensor lhs = matmul(matmul(a.dense(), mbtest::dense_gate(n, g)), a.inverse().dense());
    CHECK(mbtest::max_abs_diff(lhs, mbtest::dense_gate(n, Gate::two(GateKind::CX, a(0), a(2)))) < 1e-15);
    // push_left / push_right
    QubitPermutation l = a, r = a;
    l.push_left(1);
    r.push_right(1);
    const DenseTensor s = mbtest::dense_gate(n, Gate::two(GateKind::SWAP, 1, 2));
    CHECK(mbtest::max_abs_diff(l.dense(), matmul(s, a.dense())) == 0.0);
    CHECK(mbtest::max_abs_diff(r.dense(), matmul(a.dense(), s)) == 0.0);
    CHECK(QubitPermutation::from_transpositions(n, l.factorization()) == l);
    CHECK(QubitPermutation::from_transpositions(n, r.factorization()) == r);
  }
  // bit relabeling: P_sigma |x> = |y>, y[sigma(q)] = x[q]
  const QubitPermutation p = QubitPermutation::from_mapping({2, 0, 1});
  CHECK(p.apply_to_bits("100") == "001");
}

TEST_CASE("route_linear: adjacent circuits are untouched") {
  std::mt19937_64 rng(23);
  const Circuit c = mbtest::random_adjacent_circuit(6, 20, rng);
  const RoutedCircuit r = route_linear(c);
  CHECK(r.circuit == c);
  CHECK(r.final_layout.is_identity());
  CHECK(strip_transpilation_swaps(r.circuit) == c);
}

TEST_CASE("route_linear: RZZ(0,3) on 4 qubits") {
  Circuit c(4);
  c.add(Gate::two(GateKind::RZZ, 0, 3, {0.7}));
  const RoutedCircuit r = route_linear(c);
  // shortest path: distance 3 needs 2 swaps
  CHECK(count_transpilation_swaps(r.circuit) == 2);
  CHECK(all_adjacent(r.circuit));
  // routed operator = P_final * U
  const DenseTensor want = matmul(r.final_layout.dense(), mbtest::dense_of(c));
  CHECK(mbtest::max_abs_diff(mbtest::dense_of(r.circuit), want) <= 1e-12);
  // statevector check on every basis input
  const Circuit undo = [&] {
    Circuit u = r.circuit;
    const std::vector<int> factors = r.final_layout.inverse().factorization();
    for (int f : factors | std::views::reverse) {
      u.add(Gate::two(GateKind::SWAP, f, f + 1));
    }
    return u;
  }();
  CHECK(mbtest::max_abs_diff(mbtest::dense_of(undo), mbtest::dense_of(c)) <= 1e-12);
}

TEST_CASE("route_linear property: unitary equivalence, adjacency and exact round trip") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + mbtest::rand_int(rng, 7);
    const Circuit c = mbtest::random_long_range_circuit(n, 20, rng);
    const RoutedCircuit r = route_linear(c);
    CHECK(all_adjacent(r.circuit));
    CHECK(strip_transpilation_swaps(r.circuit) == c);
    CHECK(track_layout(r.circuit, QubitPermutation::identity(n)) == r.final_layout);
    const DenseTensor want = matmul(r.final_layout.dense(), mbtest::dense_of(c));
    CHECK(mbtest::max_abs_diff(mbtest::dense_of(r.circuit), want) <= 1e-10);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = mbtest::random_long_range_circuit(10, 40, rng);
    CHECK(strip_transpilation_swaps(route_linear(c).circuit) == c);
  }
}

TEST_CASE("strip: source SWAPs are retained, inconsistent tags rejected") {
  Circuit c(3);
  c.add(Gate::two(GateKind::SWAP, 0, 2));
  const RoutedCircuit r = route_linear(c);
  const Circuit s = strip_transpilation_swaps(r.circuit);
  REQUIRE(s.size() == 1);
  CHECK(s.gates()[0].kind == GateKind::SWAP);
  CHECK(s.gates()[0].origin == GateOrigin::Source);

  Circuit bad(3);
  Gate g = Gate::transpilation_swap(0, 1);
  g.qubits = {0, 2};
  bad.add(g);
  CHECK_THROWS_AS(strip_transpilation_swaps(bad), std::logic_error);
}

TEST_CASE("strip from a non-identity layout") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    const Circuit c = mbtest::random_long_range_circuit(6, 30, rng);
    const RoutedCircuit r = route_linear(c);
    auto [a, b] = split_at_midpoint(r.circuit);
    const QubitPermutation mid = track_layout(a, QubitPermutation::identity(6));
    Circuit joined = strip_transpilation_swaps(a);
    joined.append(strip_transpilation_swaps(b, mid));
    CHECK(joined == c);
  }
}

TEST_CASE("reindex: identity, single swap, round trip") {
  std::mt19937_64 rng(26);
  const Circuit c = mbtest::random_long_range_circuit(5, 30, rng);
  CHECK(reindex(c, QubitPermutation::identity(5)) == c);
  Circuit h(2);
  h.add(Gate::one(GateKind::H, 0));
  const Circuit moved = reindex(h, QubitPermutation::from_mapping({1, 0}));
  CHECK(moved.gates()[0].qubits[0] == 1);
  const QubitPermutation p = random_permutation(5, rng);
  CHECK(reindex(reindex(c, p), p.inverse()) == c);
  CHECK_THROWS_AS(reindex(c, QubitPermutation::identity(4)), std::invalid_argument);
  // P U P^-1 = U relabeled
  const DenseTensor lhs = matmul(matmul(p.dense(), mbtest::dense_of(c)), p.inverse().dense());
  CHECK(mbtest::max_abs_diff(lhs, mbtest::dense_of(reindex(c, p))) <= 1e-12);
}
