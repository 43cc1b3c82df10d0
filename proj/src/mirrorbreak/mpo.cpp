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

#include "mirrorbreak/mpo.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mirrorbreak/errors.hpp"

namespace mirrorbreak {

namespace {

void check_site_shapes(const SiteChain& chain) {
  for (std::size_t i = 0; i < chain.length(); ++i) {
    const auto& sh = chain.site(i).shape();
    if (sh.size() != 4 || sh[1] != 2 || sh[2] != 2) {
      throw std::invalid_argument("MPO site " + std::to_string(i) + " must have shape (l, 2, 2, r)");
    }
  }
}

}  // namespace

MatrixProductOperator::MatrixProductOperator(std::vector<DenseTensor> sites, double log_norm)
    : chain_(std::move(sites), log_norm) {
  check_site_shapes(chain_);
}

MatrixProductOperator MatrixProductOperator::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity_mpo: n must be >= 1");
  std::vector<DenseTensor> sites(static_cast<std::size_t>(n),
                                 DenseTensor::identity(2).reshaped({1, 2, 2, 1}));
  return MatrixProductOperator(std::move(sites));
}

MatrixProductOperator identity_mpo(int n) { return MatrixProductOperator::identity(n); }

std::size_t total_elements(const MatrixProductOperator& m) { return m.total_elements(); }

DenseTensor swap_theta(const DenseTensor& theta, Side side) {
  switch (side) {
    case Side::Left: return permute_axes(theta, {0, 3, 2, 1, 4, 5});
    case Side::Right: return permute_axes(theta, {0, 1, 4, 3, 2, 5});
    case Side::Both: return permute_axes(theta, {0, 3, 4, 1, 2, 5});
  }
  throw std::invalid_argument("swap_theta: invalid side");
}

MatrixProductOperator absorb_gate(MatrixProductOperator m, const Gate& g, Side side,
                                  const Truncation& trunc) {
  if (side != Side::Left && side != Side::Right) {
    throw std::invalid_argument("absorb_gate: side must be Left or Right");
  }
  const int n = m.num_sites();
  for (std::size_t k = 0; k < g.arity(); ++k) {
    if (g.qubits[k] < 0 || g.qubits[k] >= n) throw std::out_of_range("absorb_gate: qubit out of range");
  }
  SiteChain& chain = m.chain();

  if (!g.is_two_qubit()) {
    const auto q = static_cast<std::size_t>(g.qubits[0]);
    const DenseTensor u = gate_unitary(g);
    const DenseTensor& w = chain.site(q);
    DenseTensor out = side == Side::Left
                          // (o, i) x (l, t, b, r) over i=t -> (o, l, b, r)
                          ? permute_axes(contract(u, w, {{1, 1}}), {1, 0, 2, 3})
                          // (l, t, b, r) x (b, o) -> (l, t, r, o)
                          : permute_axes(contract(w, u, {{2, 0}}), {0, 1, 3, 2});
    chain.set_site(q, std::move(out));
    // unitary on a physical leg keeps the isometry property of every site
    return m;
  }

  const int a = g.qubits[0], b = g.qubits[1];
  if (std::abs(a - b) != 1) {
    throw std::invalid_argument("absorb_gate: two-qubit gate on non-adjacent sites " +
                                std::to_string(a) + "," + std::to_string(b));
  }
  const auto i = static_cast<std::size_t>(std::min(a, b));
  DenseTensor u = gate_unitary(g).reshaped({2, 2, 2, 2});  // (o_a, o_b, in_a, in_b)
  if (a > b) u = permute_axes(u, {1, 0, 3, 2});          // reorder to (site i, site i+1)

  const DenseTensor theta = chain.merged(i);  // (l, t_i, b_i, t_j, b_j, r)
  DenseTensor updated = side == Side::Left
                            ? permute_axes(contract(u, theta, {{2, 1}, {3, 3}}), {2, 0, 3, 1, 4, 5})
                            : permute_axes(contract(theta, u, {{2, 0}, {4, 1}}), {0, 1, 4, 2, 5, 3});
  chain.commit_split(i, svd_truncate(updated, 3, trunc.epsilon, trunc.chi_max));
  return m;
}

MatrixProductOperator compress(MatrixProductOperator m, const Truncation& trunc) {
  m.chain().compress(trunc);
  return m;
}

MatrixProductOperator apply_swap_boundary(MatrixProductOperator m, int bond, Side side,
                                          const Truncation& trunc) {
  if (bond < 0 || bond + 1 >= m.num_sites()) {
    throw std::out_of_range("apply_swap_boundary: bond " + std::to_string(bond) + " out of range");
  }
  const auto i = static_cast<std::size_t>(bond);
  const DenseTensor theta = m.chain().merged(i);
  m.chain().commit_split(i, svd_truncate(swap_theta(theta, side), 3, trunc.epsilon, trunc.chi_max));
  return m;
}

DenseTensor mpo_to_dense(const MatrixProductOperator& m) {
  const int n = m.num_sites();
  if (n > 12) throw GuardError("mpo_to_dense: at most 12 sites");
  DenseTensor acc = m.site(0).reshaped({2, 2, m.site(0).shape().back()});
  for (int i = 1; i < n; ++i) acc = contract(acc, m.site(i), {{acc.rank() - 1, 0}});
  // axes now (t0, b0, t1, b1, ..., r=1); qubit 0 must end up least significant
  std::vector<std::size_t> shape(static_cast<std::size_t>(2 * n), 2);
  acc = std::move(acc).reshaped(shape);
  std::vector<std::size_t> order;
  for (int q = n - 1; q >= 0; --q) order.push_back(static_cast<std::size_t>(2 * q));
  for (int q = n - 1; q >= 0; --q) order.push_back(static_cast<std::size_t>(2 * q + 1));
  const std::size_t dim = std::size_t{1} << n;
  DenseTensor out = permute_axes(acc, order).reshaped({dim, dim});
  out *= std::exp(m.log_norm());
  return out;
}

}  // namespace mirrorbreak
