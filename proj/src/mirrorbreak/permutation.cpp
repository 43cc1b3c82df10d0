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

#include "mirrorbreak/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mirrorbreak/errors.hpp"

namespace mirrorbreak {

namespace {

std::vector<int> bubble_factorization(std::vector<int> a) {
  // Right-multiplying by t_i swaps entries i, i+1 of the mapping array.
  // Sorting with swaps j1..jm gives sigma o t_j1 o ... o t_jm = id, hence
  // sigma = t_jm o ... o t_j1.
  std::vector<int> sweeps;
  const int n = static_cast<int>(a.size());
  for (int pass = 0; pass < n; ++pass) {
    bool swapped = false;
    for (int i = 0; i + 1 < n - pass; ++i) {
      if (a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(i + 1)]) {
        std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i + 1)]);
        sweeps.push_back(i);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  std::reverse(sweeps.begin(), sweeps.end());
  return sweeps;
}

}  // namespace

QubitPermutation QubitPermutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation size must be non-negative");
  QubitPermutation p;
  p.mapping_.resize(static_cast<std::size_t>(n));
  std::iota(p.mapping_.begin(), p.mapping_.end(), 0);
  return p;
}

QubitPermutation QubitPermutation::from_mapping(std::vector<int> mapping) {
  std::vector<bool> hit(mapping.size(), false);
  for (int v : mapping) {
    if (v < 0 || static_cast<std::size_t>(v) >= mapping.size() || hit[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("mapping is not a bijection");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
  QubitPermutation p;
  p.factors_ = bubble_factorization(mapping);
  p.mapping_ = std::move(mapping);
  return p;
}

QubitPermutation QubitPermutation::from_transpositions(int n, std::vector<int> factors) {
  QubitPermutation p = identity(n);
  // innermost factor acts first: sigma(q) = t_f0(t_f1(...(q)))
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) p.push_left(*it);
  p.factors_ = std::move(factors);
  return p;
}

bool QubitPermutation::is_identity() const {
  for (std::size_t q = 0; q < mapping_.size(); ++q) {
    if (mapping_[q] != static_cast<int>(q)) return false;
  }
  return true;
}

QubitPermutation QubitPermutation::inverse() const {
  std::vector<int> inv(mapping_.size());
  for (std::size_t q = 0; q < mapping_.size(); ++q) inv[static_cast<std::size_t>(mapping_[q])] = static_cast<int>(q);
  QubitPermutation p;
  p.mapping_ = std::move(inv);
  p.factors_.assign(factors_.rbegin(), factors_.rend());
  return p;
}

QubitPermutation QubitPermutation::compose(const QubitPermutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
  QubitPermutation p;
  p.mapping_.resize(mapping_.size());
  for (std::size_t q = 0; q < mapping_.size(); ++q) {
    p.mapping_[q] = mapping_[static_cast<std::size_t>(other.mapping_[q])];
  }
  p.factors_ = factors_;
  p.factors_.insert(p.factors_.end(), other.factors_.begin(), other.factors_.end());
  return p;
}

void QubitPermutation::push_right(int i) {
  if (i < 0 || i + 1 >= size()) throw std::invalid_argument("transposition index out of range");
  std::swap(mapping_[static_cast<std::size_t>(i)], mapping_[static_cast<std::size_t>(i + 1)]);
  factors_.push_back(i);
}

void QubitPermutation::push_left(int i) {
  if (i < 0 || i + 1 >= size()) throw std::invalid_argument("transposition index out of range");
  for (int& v : mapping_) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  factors_.insert(factors_.begin(), i);
}

DenseTensor QubitPermutation::dense() const {
  const int n = size();
  if (n > 12) throw GuardError("QubitPermutation::dense: at most 12 qubits");
  const std::size_t dim = std::size_t{1} << n;
  DenseTensor out({dim, dim});
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (int q = 0; q < n; ++q) {
      if ((x >> q) & 1U) y |= std::size_t{1} << mapping_[static_cast<std::size_t>(q)];
    }
    out[y * dim + x] = 1.0;
  }
  return out;
}

std::string QubitPermutation::apply_to_bits(const std::string& bits) const {
  if (bits.size() != mapping_.size()) throw std::invalid_argument("apply_to_bits: length mismatch");
  std::string out(bits.size(), '0');
  for (std::size_t q = 0; q < bits.size(); ++q) out[static_cast<std::size_t>(mapping_[q])] = bits[q];
  return out;
}

}  // namespace mirrorbreak
