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

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mirrorbreak {

using cplx = std::complex<double>;

/// Dense complex tensor with row-major linearization: the LAST axis varies
/// fastest. Every other module relies on this order only through
/// `reshaped`, `permute_axes` and `contract`.
class DenseTensor {
 public:
  DenseTensor() = default;

  /// Zero tensor of the given shape. Every extent must be positive.
  explicit DenseTensor(std::vector<std::size_t> shape);
  DenseTensor(std::vector<std::size_t> shape, std::vector<cplx> data);

  /// n x n identity matrix.
  static DenseTensor identity(std::size_t n);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t extent(std::size_t axis) const { return shape_.at(axis); }
  std::size_t size() const { return data_.size(); }

  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  cplx& operator[](std::size_t flat) { return data_[flat]; }
  const cplx& operator[](std::size_t flat) const { return data_[flat]; }

  cplx& at(std::span<const std::size_t> index);
  const cplx& at(std::span<const std::size_t> index) const;
  cplx& at(std::initializer_list<std::size_t> index) {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }
  const cplx& at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }

  /// Same data, new shape with equal element count.
  DenseTensor reshaped(std::vector<std::size_t> shape) const&;
  DenseTensor reshaped(std::vector<std::size_t> shape) &&;

  double norm() const;
  double max_abs() const;
  bool all_finite() const;

  DenseTensor& operator*=(cplx factor);
  friend DenseTensor operator*(DenseTensor t, cplx factor) { return t *= factor; }

 private:
  std::vector<std::size_t> shape_;
  std::vector<cplx> data_;
};

/// Standard tensor contraction. Result axes: uncontracted axes of `a` in
/// order, then uncontracted axes of `b` in order.
DenseTensor contract(const DenseTensor& a, const DenseTensor& b,
                     std::span<const std::pair<std::size_t, std::size_t>> axis_pairs);
DenseTensor contract(const DenseTensor& a, const DenseTensor& b,
                     std::initializer_list<std::pair<std::size_t, std::size_t>> axis_pairs);

/// numpy-style transpose: result.shape[k] == t.shape[order[k]].
DenseTensor permute_axes(const DenseTensor& t, std::span<const std::size_t> order);
DenseTensor permute_axes(const DenseTensor& t, std::initializer_list<std::size_t> order);

/// Matrix product of rank-2 tensors.
DenseTensor matmul(const DenseTensor& a, const DenseTensor& b);
/// Conjugate transpose of a rank-2 tensor.
DenseTensor adjoint(const DenseTensor& m);

struct TruncatedSVD {
  DenseTensor u;               // (left axes..., k), orthonormal columns
  std::vector<double> s;       // descending, length k
  DenseTensor v;               // (k, right axes...), orthonormal rows
  double discarded_weight = 0; // dropped sum s^2 / total sum s^2
  bool capped = false;         // true when chi_max cut the kept rank
};

/// SVD of `t` matricized as (first `split` axes) x (remaining axes).
///
/// Kept rank is the smallest r whose relative discarded weight is at most
/// epsilon^2, extended over singular values tied with the last kept one
/// (within 1e-12 * s_max) and finally clamped to chi_max. Values at or below
/// 1e-13 * s_max are round-off and never kept.
///
/// Throws NumericalError on an all-zero tensor, or when the backend fails
/// twice (the second attempt perturbs the input by 1e-14 * ||t||).
TruncatedSVD svd_truncate(const DenseTensor& t, std::size_t split, double epsilon,
                          std::size_t chi_max);

/// Thin QR of `t` matricized at `split`: q is (left axes..., k) with
/// orthonormal columns, r is (k, right axes...).
std::pair<DenseTensor, DenseTensor> qr_split(const DenseTensor& t, std::size_t split);

/// Thin LQ of `t` matricized at `split`: l is (left axes..., k), q is
/// (k, right axes...) with orthonormal rows.
std::pair<DenseTensor, DenseTensor> lq_split(const DenseTensor& t, std::size_t split);

}  // namespace mirrorbreak
