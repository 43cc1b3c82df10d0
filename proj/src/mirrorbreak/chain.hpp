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
#include <memory>
#include <vector>

#include "mirrorbreak/tensor.hpp"

namespace mirrorbreak {

/// SVD truncation policy shared by every chain operation.
struct Truncation {
  double epsilon = 0.0;
  std::size_t chi_max = std::numeric_limits<std::size_t>::max();
};

/// Open-boundary chain of site tensors shaped (left, physical..., right),
/// the common substrate of MPS and MPO.
///
/// Sites are shared copy-on-write, so copying a chain costs O(N) pointer
/// copies and trial updates only duplicate the sites they touch. The
/// represented object is exp(log_norm) times the plain contraction.
/// `center` marks the orthogonality center (every site left of it is a
/// left isometry, every site right of it a right isometry), or kNoCenter
/// when no gauge is known.
class SiteChain {
 public:
  static constexpr std::size_t kNoCenter = std::numeric_limits<std::size_t>::max();

  SiteChain() = default;
  explicit SiteChain(std::vector<DenseTensor> sites, double log_norm = 0.0);

  std::size_t length() const { return sites_.size(); }
  const DenseTensor& site(std::size_t i) const { return *sites_.at(i); }
  void set_site(std::size_t i, DenseTensor t);

  /// Extent of the bond between sites i and i+1.
  std::size_t bond_dim(std::size_t i) const;
  std::vector<std::size_t> bond_dims() const;
  std::size_t max_bond() const;
  std::size_t total_elements() const;

  double log_norm() const { return log_norm_; }
  std::size_t center() const { return center_; }

  /// Upper bound on the relative Frobenius error introduced by truncation
  /// so far: sum of sqrt(discarded_weight) over all truncating SVDs.
  double truncation_error() const { return truncation_error_; }
  bool chi_capped() const { return chi_capped_; }
  void clear_chi_capped() { chi_capped_ = false; }

  /// Gauge move (QR/LQ sweeps); the represented object is unchanged.
  void move_center(std::size_t k);

  /// Two-site tensor of sites (i, i+1) after moving the center into the
  /// pair. Axes: (left, phys_i..., phys_{i+1}..., right).
  DenseTensor merged(std::size_t i);
  /// Number of leading theta axes belonging to site i (left bond + phys_i).
  std::size_t split_axis(std::size_t i) const { return site(i).rank() - 1; }

  /// Commits a factorization of a replacement theta for sites (i, i+1).
  /// Singular values are normalized into log_norm; they are absorbed into
  /// site i+1 (center moves to i+1) or site i.
  void commit_split(std::size_t i, TruncatedSVD svd, bool center_right = true);

  /// Two-sided sweep: left-to-right orthogonalization, right-to-left
  /// truncation, center normalized into log_norm. Center ends at site 0.
  void compress(const Truncation& trunc);

  /// Scales the center (moving it to site 0 if no gauge is known) to unit
  /// norm, folding the factor into log_norm. Returns the old norm.
  double normalize();

  /// Frobenius norm of the represented object, as a logarithm.
  double log_frobenius_norm() const;

  void record_truncation(const TruncatedSVD& svd);

 private:
  void shift_right(std::size_t i);  // center i -> i+1
  void shift_left(std::size_t i);   // center i -> i-1

  std::vector<std::shared_ptr<const DenseTensor>> sites_;
  double log_norm_ = 0.0;
  std::size_t center_ = kNoCenter;
  double truncation_error_ = 0.0;
  bool chi_capped_ = false;
};

}  // namespace mirrorbreak
