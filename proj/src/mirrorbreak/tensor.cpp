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

#include "mirrorbreak/tensor.hpp"

#include <Eigen/Dense>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "mirrorbreak/errors.hpp"

namespace mirrorbreak {

namespace {

using RowMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixMap = Eigen::Map<RowMatrix>;
using ConstMatrixMap = Eigen::Map<const RowMatrix>;

std::size_t product(std::span<const std::size_t> extents) {
  return std::accumulate(extents.begin(), extents.end(), std::size_t{1}, std::multiplies<>());
}

void check_shape(const std::vector<std::size_t>& shape) {
  for (std::size_t e : shape) {
    if (e == 0) throw std::invalid_argument("DenseTensor: zero extent in shape");
  }
}

std::vector<std::size_t> row_major_strides(const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t k = shape.size(); k-- > 1;) strides[k - 1] = strides[k] * shape[k];
  return strides;
}

ConstMatrixMap as_matrix(const DenseTensor& t, std::size_t rows, std::size_t cols) {
  return ConstMatrixMap(t.data().data(), static_cast<Eigen::Index>(rows),
                        static_cast<Eigen::Index>(cols));
}

std::pair<std::size_t, std::size_t> matricize(const DenseTensor& t, std::size_t split) {
  if (split < 1 || split >= t.rank()) {
    throw std::invalid_argument("split must satisfy 1 <= split < rank (got " +
                                std::to_string(split) + " for rank " + std::to_string(t.rank()) +
                                ")");
  }
  const auto& sh = t.shape();
  std::size_t rows = product(std::span(sh).first(split));
  return {rows, t.size() / rows};
}

std::vector<std::size_t> join_shape(std::span<const std::size_t> head, std::size_t mid,
                                    std::span<const std::size_t> tail) {
  std::vector<std::size_t> out(head.begin(), head.end());
  if (mid) out.push_back(mid);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

DenseTensor from_matrix(const RowMatrix& m, std::vector<std::size_t> shape) {
  std::vector<cplx> data(m.data(), m.data() + m.size());
  return DenseTensor(std::move(shape), std::move(data));
}

}  // namespace

DenseTensor::DenseTensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  check_shape(shape_);
  data_.assign(product(shape_), cplx{0.0, 0.0});
}

DenseTensor::DenseTensor(std::vector<std::size_t> shape, std::vector<cplx> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  check_shape(shape_);
  if (product(shape_) != data_.size()) {
    throw std::invalid_argument("DenseTensor: shape product " + std::to_string(product(shape_)) +
                                " does not match data length " + std::to_string(data_.size()));
  }
}

DenseTensor DenseTensor::identity(std::size_t n) {
  DenseTensor t({n, n});
  for (std::size_t i = 0; i < n; ++i) t.data_[i * n + i] = 1.0;
  return t;
}

cplx& DenseTensor::at(std::span<const std::size_t> index) {
  return const_cast<cplx&>(std::as_const(*this).at(index));
}

const cplx& DenseTensor::at(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) throw std::out_of_range("DenseTensor::at: wrong index rank");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= shape_[k]) throw std::out_of_range("DenseTensor::at: index out of range");
    flat = flat * shape_[k] + index[k];
  }
  return data_[flat];
}

DenseTensor DenseTensor::reshaped(std::vector<std::size_t> shape) const& {
  return DenseTensor(std::move(shape), data_);
}

DenseTensor DenseTensor::reshaped(std::vector<std::size_t> shape) && {
  return DenseTensor(std::move(shape), std::move(data_));
}

double DenseTensor::norm() const {
  double acc = 0.0;
  for (const cplx& z : data_) acc += std::norm(z);
  return std::sqrt(acc);
}

double DenseTensor::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool DenseTensor::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

DenseTensor& DenseTensor::operator*=(cplx factor) {
  for (cplx& z : data_) z *= factor;
  return *this;
}

DenseTensor permute_axes(const DenseTensor& t, std::span<const std::size_t> order) {
  const std::size_t r = t.rank();
  if (order.size() != r) throw std::invalid_argument("permute_axes: order length != rank");
  std::vector<bool> seen(r, false);
  for (std::size_t a : order) {
    if (a >= r || seen[a]) throw std::invalid_argument("permute_axes: order is not a bijection");
    seen[a] = true;
  }
  bool is_identity = true;
  for (std::size_t k = 0; k < r; ++k) is_identity &= (order[k] == k);
  if (is_identity) return t;

  std::vector<std::size_t> out_shape(r);
  const auto in_strides = row_major_strides(t.shape());
  std::vector<std::size_t> strides(r);  // source stride for each output axis
  for (std::size_t k = 0; k < r; ++k) {
    out_shape[k] = t.shape()[order[k]];
    strides[k] = in_strides[order[k]];
  }
  DenseTensor out(out_shape);
  std::vector<std::size_t> idx(r, 0);
  std::size_t src = 0;
  const auto in = t.data();
  auto dst = out.data();
  for (std::size_t flat = 0; flat < dst.size(); ++flat) {
    dst[flat] = in[src];
    // odometer increment on the output index, tracking the source offset
    for (std::size_t k = r; k-- > 0;) {
      ++idx[k];
      src += strides[k];
      if (idx[k] < out_shape[k]) break;
      src -= strides[k] * out_shape[k];
      idx[k] = 0;
    }
  }
  return out;
}

DenseTensor permute_axes(const DenseTensor& t, std::initializer_list<std::size_t> order) {
  return permute_axes(t, std::span<const std::size_t>(order.begin(), order.size()));
}

DenseTensor contract(const DenseTensor& a, const DenseTensor& b,
                     std::span<const std::pair<std::size_t, std::size_t>> axis_pairs) {
  std::vector<bool> used_a(a.rank(), false), used_b(b.rank(), false);
  std::vector<std::size_t> ca, cb;
  for (auto [ia, ib] : axis_pairs) {
    if (ia >= a.rank() || ib >= b.rank()) throw std::out_of_range("contract: axis out of range");
    if (used_a[ia] || used_b[ib]) throw std::invalid_argument("contract: axis paired twice");
    if (a.shape()[ia] != b.shape()[ib]) {
      throw std::invalid_argument("contract: extent mismatch on axis pair (" + std::to_string(ia) +
                                  ", " + std::to_string(ib) + "): " +
                                  std::to_string(a.shape()[ia]) + " vs " +
                                  std::to_string(b.shape()[ib]));
    }
    used_a[ia] = used_b[ib] = true;
    ca.push_back(ia);
    cb.push_back(ib);
  }
  std::vector<std::size_t> order_a, order_b, free_shape_a, free_shape_b;
  for (std::size_t k = 0; k < a.rank(); ++k) {
    if (!used_a[k]) {
      order_a.push_back(k);
      free_shape_a.push_back(a.shape()[k]);
    }
  }
  order_a.insert(order_a.end(), ca.begin(), ca.end());
  order_b = cb;
  for (std::size_t k = 0; k < b.rank(); ++k) {
    if (!used_b[k]) {
      order_b.push_back(k);
      free_shape_b.push_back(b.shape()[k]);
    }
  }
  const std::size_t m = product(free_shape_a);
  const std::size_t n = product(free_shape_b);
  const std::size_t inner = a.size() / m;

  const DenseTensor ap = permute_axes(a, order_a);
  const DenseTensor bp = permute_axes(b, order_b);
  RowMatrix prod = as_matrix(ap, m, inner) * as_matrix(bp, inner, n);

  std::vector<std::size_t> out_shape = free_shape_a;
  out_shape.insert(out_shape.end(), free_shape_b.begin(), free_shape_b.end());
  if (out_shape.empty()) out_shape.push_back(1);  // full contraction -> scalar as shape {1}
  return from_matrix(prod, std::move(out_shape));
}

DenseTensor contract(const DenseTensor& a, const DenseTensor& b,
                     std::initializer_list<std::pair<std::size_t, std::size_t>> axis_pairs) {
  return contract(a, b,
                  std::span<const std::pair<std::size_t, std::size_t>>(axis_pairs.begin(),
                                                                       axis_pairs.size()));
}

DenseTensor matmul(const DenseTensor& a, const DenseTensor& b) {
  if (a.rank() != 2 || b.rank() != 2) throw std::invalid_argument("matmul: rank-2 tensors only");
  return contract(a, b, {{1, 0}});
}

DenseTensor adjoint(const DenseTensor& m) {
  if (m.rank() != 2) throw std::invalid_argument("adjoint: rank-2 tensor only");
  DenseTensor out = permute_axes(m, {1, 0});
  for (cplx& z : out.data()) z = std::conj(z);
  return out;
}

namespace {

constexpr double kRoundoffFloor = 1e-13;
constexpr double kTieTolerance = 1e-12;

struct RawSVD {
  RowMatrix u;
  Eigen::VectorXd s;
  RowMatrix v;  // rows are right singular vectors (already V^H)
};

bool finite(const RowMatrix& m) { return m.allFinite(); }

std::optional<RawSVD> try_svd(RowMatrix a, bool divide_and_conquer) {
  const auto m = static_cast<lapack_int>(a.rows());
  const auto n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  RawSVD out{RowMatrix(m, k), Eigen::VectorXd(k), RowMatrix(k, n)};
  lapack_int info = 0;
  if (divide_and_conquer) {
    info = LAPACKE_zgesdd(LAPACK_ROW_MAJOR, 'S', m, n, a.data(), n, out.s.data(), out.u.data(), k,
                          out.v.data(), n);
  } else {
    std::vector<double> superb(static_cast<std::size_t>(std::max<lapack_int>(k - 1, 1)));
    info = LAPACKE_zgesvd(LAPACK_ROW_MAJOR, 'S', 'S', m, n, a.data(), n, out.s.data(), out.u.data(),
                          k, out.v.data(), n, superb.data());
  }
  if (info != 0) return std::nullopt;
  if (!finite(out.u) || !finite(out.v) || !out.s.allFinite()) return std::nullopt;
  return out;
}

// Residual of U diag(s) V^H against the input plus the deviation of U and V
// from isometries, relative to the input norm.
bool consistent(const RowMatrix& a, const RawSVD& r) {
  constexpr double kResidualTol = 1e-10;
  constexpr double kIsometryTol = 1e-8;
  const Eigen::Index k = r.s.size();
  if ((r.u * r.s.asDiagonal() * r.v - a).norm() > kResidualTol * a.norm()) return false;
  const RowMatrix id = RowMatrix::Identity(k, k);
  const double iso_tol = kIsometryTol * std::sqrt(static_cast<double>(k));
  return (r.u.adjoint() * r.u - id).norm() <= iso_tol && (r.v * r.v.adjoint() - id).norm() <= iso_tol;
}

// Divide and conquer first; its result is checked because both Eigen 3.4.0's
// BDCSVD and OpenBLAS 0.3.20's zgesdd return wrong factors on some complex
// inputs (degenerate spectra, dimensions >= 256). QR iteration is the fallback.
std::optional<RawSVD> try_svd(const RowMatrix& mat) {
  if (auto r = try_svd(mat, true); r && consistent(mat, *r)) return r;
  return try_svd(mat, false);
}

}  // namespace

TruncatedSVD svd_truncate(const DenseTensor& t, std::size_t split, double epsilon,
                          std::size_t chi_max) {
  if (epsilon < 0.0) throw std::invalid_argument("svd_truncate: epsilon must be >= 0");
  if (chi_max < 1) throw std::invalid_argument("svd_truncate: chi_max must be >= 1");
  auto [rows, cols] = matricize(t, split);
  const double tnorm = t.norm();
  if (tnorm == 0.0) throw NumericalError("svd_truncate: zero tensor has no singular spectrum");
  if (!std::isfinite(tnorm)) throw NumericalError("svd_truncate: non-finite input");

  RowMatrix mat = as_matrix(t, rows, cols);
  std::optional<RawSVD> raw = try_svd(mat);
  if (!raw) {
    // single retry on a slightly perturbed copy
    const double delta = 1e-14 * tnorm;
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
      for (Eigen::Index j = 0; j < mat.cols(); ++j) {
        mat(i, j) += delta * static_cast<double>(((i * 31 + j * 17) % 7) - 3) / 3.0;
      }
    }
    raw = try_svd(mat);
    if (!raw) throw NumericalError("svd_truncate: SVD backend did not converge");
  }

  const Eigen::VectorXd& s = raw->s;
  const Eigen::Index full = s.size();
  const double smax = s(0);
  double total = 0.0;
  for (Eigen::Index k = 0; k < full; ++k) total += s(k) * s(k);

  // smallest r with tail weight <= eps^2 * total
  Eigen::Index r = full;
  double tail = 0.0;
  const double budget = epsilon * epsilon * total;
  while (r > 1 && tail + s(r - 1) * s(r - 1) <= budget) {
    tail += s(r - 1) * s(r - 1);
    --r;
  }
  while (r > 1 && s(r - 1) <= kRoundoffFloor * smax) --r;
  while (r < full && s(r) > kRoundoffFloor * smax && std::abs(s(r) - s(r - 1)) <= kTieTolerance * smax) {
    ++r;
  }
  TruncatedSVD out;
  if (static_cast<std::size_t>(r) > chi_max) {
    r = static_cast<Eigen::Index>(chi_max);
    out.capped = true;
  }

  double kept = 0.0;
  for (Eigen::Index k = 0; k < r; ++k) kept += s(k) * s(k);
  out.discarded_weight = std::max(0.0, (total - kept) / total);
  out.s.assign(s.data(), s.data() + r);

  const auto& sh = t.shape();
  std::span<const std::size_t> left(sh.data(), split);
  std::span<const std::size_t> right(sh.data() + split, sh.size() - split);
  out.u = from_matrix(raw->u.leftCols(r), join_shape(left, static_cast<std::size_t>(r), {}));
  out.v = from_matrix(raw->v.topRows(r), join_shape({}, static_cast<std::size_t>(r), right));
  return out;
}

std::pair<DenseTensor, DenseTensor> qr_split(const DenseTensor& t, std::size_t split) {
  auto [rows, cols] = matricize(t, split);
  const RowMatrix mat = as_matrix(t, rows, cols);
  const Eigen::Index k = static_cast<Eigen::Index>(std::min(rows, cols));
  Eigen::HouseholderQR<RowMatrix> qr(mat);
  RowMatrix q = qr.householderQ() * RowMatrix::Identity(static_cast<Eigen::Index>(rows), k);
  RowMatrix r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  const auto& sh = t.shape();
  std::span<const std::size_t> left(sh.data(), split);
  std::span<const std::size_t> right(sh.data() + split, sh.size() - split);
  return {from_matrix(q, join_shape(left, static_cast<std::size_t>(k), {})),
          from_matrix(r, join_shape({}, static_cast<std::size_t>(k), right))};
}

std::pair<DenseTensor, DenseTensor> lq_split(const DenseTensor& t, std::size_t split) {
  auto [rows, cols] = matricize(t, split);
  // LQ of A from QR of A^H: A^H = Q R  =>  A = R^H Q^H
  const RowMatrix mat_h = as_matrix(t, rows, cols).adjoint();
  const Eigen::Index k = static_cast<Eigen::Index>(std::min(rows, cols));
  Eigen::HouseholderQR<RowMatrix> qr(mat_h);
  RowMatrix q = qr.householderQ() * RowMatrix::Identity(static_cast<Eigen::Index>(cols), k);
  RowMatrix r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  RowMatrix l = r.adjoint();
  RowMatrix qh = q.adjoint();
  const auto& sh = t.shape();
  std::span<const std::size_t> left(sh.data(), split);
  std::span<const std::size_t> right(sh.data() + split, sh.size() - split);
  return {from_matrix(l, join_shape(left, static_cast<std::size_t>(k), {})),
          from_matrix(qh, join_shape({}, static_cast<std::size_t>(k), right))};
}

}  // namespace mirrorbreak
