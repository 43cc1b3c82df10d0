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


#include "mirrorbreak/mps.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "mirrorbreak/errors.hpp"
#include "mirrorbreak/rng.hpp"

namespace mirrorbreak {

MatrixProductState::MatrixProductState(std::vector<DenseTensor> sites, double log_norm)
    : chain_(std::move(sites), log_norm) {
  for (std::size_t i = 0; i < chain_.length(); ++i) {
    const auto& sh = chain_.site(i).shape();
    if (sh.size() != 3 || sh[1] != 2) {
      throw std::invalid_argument("MPS site " + std::to_string(i) + " must have shape (l, 2, r)");
    }
  }
}

MatrixProductState product_state(const std::string& bits) {
  if (bits.empty()) throw std::invalid_argument("product_state: empty bitstring");
  std::vector<DenseTensor> sites;
  for (char b : bits) {
    if (b != '0' && b != '1') throw std::invalid_argument("product_state: bits must be 0/1");
    DenseTensor t({1, 2, 1});
    t[b == '1' ? 1 : 0] = 1.0;
    sites.push_back(std::move(t));
  }
  MatrixProductState psi(std::move(sites));
  psi.chain().move_center(0);
  return psi;
}

MatrixProductState apply_to_zero(const MatrixProductOperator& m, const Truncation& trunc) {
  const int n = m.num_sites();
  std::vector<DenseTensor> sites;
  sites.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const DenseTensor& w = m.site(i);
    const std::size_t l = w.extent(0), r = w.extent(3);
    DenseTensor s({l, 2, r});
    // keep bottom index 0
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t b = 0; b < r; ++b) s.at({a, t, b}) = w.at({a, t, 0, b});
    sites.push_back(std::move(s));
  }
  MatrixProductState psi(std::move(sites), m.log_norm());
  if (psi.chain().log_frobenius_norm() == -INFINITY) {
    throw NumericalError("apply_to_zero: state collapsed to zero");
  }
  const double expected = m.chain().log_frobenius_norm() - 0.5 * n * std::log(2.0);
  psi.chain().compress(trunc);
  if (psi.log_norm() - expected < std::log(1e-12)) {
    throw NumericalError("apply_to_zero: state norm below 1e-12 of expectation");
  }
  return psi;
}

std::vector<std::string> sample(const MatrixProductState& psi_in, std::size_t shots,
                                std::uint64_t seed) {
  MatrixProductState psi = psi_in;
  psi.chain().move_center(0);
  const double nrm = psi.site(0).norm();
  if (std::abs(nrm * nrm - 1.0) > 1e-8) {
    throw NumericalError("sample: state is not normalized (norm^2 = " + std::to_string(nrm * nrm) + ")");
  }
  const int n = psi.num_sites();
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  out.reserve(shots);
  std::vector<cplx> env, next, cand[2];
  for (std::size_t shot = 0; shot < shots; ++shot) {
    std::string bits(static_cast<std::size_t>(n), '0');
    env.assign(1, 1.0);
    for (int i = 0; i < n; ++i) {
      const DenseTensor& a = psi.site(i);
      const std::size_t l = a.extent(0), r = a.extent(2);
      double w[2] = {0.0, 0.0};
      for (std::size_t p = 0; p < 2; ++p) {
        cand[p].assign(r, 0.0);
        for (std::size_t x = 0; x < l; ++x) {
          const cplx e = env[x];
          if (e == 0.0) continue;
          const cplx* row = &a[(x * 2 + p) * r];
          for (std::size_t y = 0; y < r; ++y) cand[p][y] += e * row[y];
        }
        for (const cplx& c : cand[p]) w[p] += std::norm(c);
      }
      // sites right of i are right isometries, so w[p] is the conditional weight
      const double u = uniform01(rng) * (w[0] + w[1]);
      const std::size_t pick = u < w[0] ? 0 : 1;
      bits[static_cast<std::size_t>(i)] = pick ? '1' : '0';
      const double scale = 1.0 / std::sqrt(w[pick]);
      env.swap(cand[pick]);
      for (cplx& c : env) c *= scale;
    }
    out.push_back(std::move(bits));
  }
  return out;
}

DenseTensor mps_to_dense(const MatrixProductState& psi) {
  const int n = psi.num_sites();
  if (n > 12) throw GuardError("mps_to_dense: at most 12 sites");
  DenseTensor acc = psi.site(0).reshaped({2, psi.site(0).extent(2)});
  for (int i = 1; i < n; ++i) acc = contract(acc, psi.site(i), {{acc.rank() - 1, 0}});
  acc = std::move(acc).reshaped(std::vector<std::size_t>(static_cast<std::size_t>(n), 2));
  std::vector<std::size_t> order;
  for (int q = n - 1; q >= 0; --q) order.push_back(static_cast<std::size_t>(q));
  return permute_axes(acc, order).reshaped({std::size_t{1} << n});
}

}  // namespace mirrorbreak
