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

#include "mirrorbreak/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mirrorbreak/errors.hpp"

namespace mirrorbreak {

SiteChain::SiteChain(std::vector<DenseTensor> sites, double log_norm) : log_norm_(log_norm) {
  if (sites.empty()) throw std::invalid_argument("chain needs at least one site");
  sites_.reserve(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const DenseTensor& t = sites[i];
    if (t.rank() < 3) throw std::invalid_argument("site tensors need rank >= 3");
    if (i == 0 && t.shape().front() != 1) throw std::invalid_argument("left boundary bond must be 1");
    if (i + 1 == sites.size() && t.shape().back() != 1) {
      throw std::invalid_argument("right boundary bond must be 1");
    }
    if (i > 0 && sites[i - 1].shape().back() != t.shape().front()) {
      throw std::invalid_argument("bond mismatch between sites " + std::to_string(i - 1) + " and " +
                                  std::to_string(i));
    }
  }
  for (DenseTensor& t : sites) sites_.push_back(std::make_shared<const DenseTensor>(std::move(t)));
}

void SiteChain::set_site(std::size_t i, DenseTensor t) {
  sites_.at(i) = std::make_shared<const DenseTensor>(std::move(t));
}

std::size_t SiteChain::bond_dim(std::size_t i) const {
  if (i + 1 >= sites_.size()) throw std::out_of_range("bond index out of range");
  return sites_[i]->shape().back();
}

std::vector<std::size_t> SiteChain::bond_dims() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < sites_.size(); ++i) out.push_back(bond_dim(i));
  return out;
}

std::size_t SiteChain::max_bond() const {
  std::size_t m = 1;
  for (std::size_t i = 0; i + 1 < sites_.size(); ++i) m = std::max(m, bond_dim(i));
  return m;
}

std::size_t SiteChain::total_elements() const {
  std::size_t n = 0;
  for (const auto& s : sites_) n += s->size();
  return n;
}

void SiteChain::shift_right(std::size_t i) {
  auto [q, r] = qr_split(site(i), site(i).rank() - 1);
  DenseTensor next = contract(r, site(i + 1), {{1, 0}});
  set_site(i, std::move(q));
  set_site(i + 1, std::move(next));
}

void SiteChain::shift_left(std::size_t i) {
  auto [l, q] = lq_split(site(i), 1);
  const DenseTensor& prev = site(i - 1);
  DenseTensor merged = contract(prev, l, {{prev.rank() - 1, 0}});
  set_site(i, std::move(q));
  set_site(i - 1, std::move(merged));
}

void SiteChain::move_center(std::size_t k) {
  if (k >= sites_.size()) throw std::out_of_range("move_center: site out of range");
  if (center_ == kNoCenter) {
    for (std::size_t i = 0; i < k; ++i) shift_right(i);
    for (std::size_t i = sites_.size() - 1; i > k; --i) shift_left(i);
  } else {
    for (std::size_t i = center_; i < k; ++i) shift_right(i);
    for (std::size_t i = center_; i > k; --i) shift_left(i);
  }
  center_ = k;
}

DenseTensor SiteChain::merged(std::size_t i) {
  if (i + 1 >= sites_.size()) throw std::out_of_range("two-site block out of range");
  if (center_ == kNoCenter || center_ <= i) {
    move_center(i);
  } else if (center_ > i + 1) {
    move_center(i + 1);
  }
  return contract(site(i), site(i + 1), {{site(i).rank() - 1, 0}});
}

void SiteChain::record_truncation(const TruncatedSVD& svd) {
  truncation_error_ += std::sqrt(svd.discarded_weight);
  chi_capped_ = chi_capped_ || svd.capped;
}

void SiteChain::commit_split(std::size_t i, TruncatedSVD svd, bool center_right) {
  record_truncation(svd);
  double norm2 = 0.0;
  for (double s : svd.s) norm2 += s * s;
  const double norm = std::sqrt(norm2);
  log_norm_ += std::log(norm);
  DenseTensor& carrier = center_right ? svd.v : svd.u;
  // scale each singular direction, renormalized
  const std::size_t k = svd.s.size();
  auto data = carrier.data();
  if (center_right) {
    const std::size_t stride = carrier.size() / k;
    for (std::size_t a = 0; a < k; ++a) {
      const double f = svd.s[a] / norm;
      for (std::size_t j = 0; j < stride; ++j) data[a * stride + j] *= f;
    }
  } else {
    for (std::size_t j = 0; j < carrier.size(); ++j) data[j] *= svd.s[j % k] / norm;
  }
  set_site(i, std::move(svd.u));
  set_site(i + 1, std::move(svd.v));
  center_ = center_right ? i + 1 : i;
}

double SiteChain::normalize() {
  if (center_ == kNoCenter) move_center(0);
  const double norm = site(center_).norm();
  if (norm == 0.0) throw NumericalError("chain collapsed to zero");
  DenseTensor t = site(center_);
  t *= 1.0 / norm;
  set_site(center_, std::move(t));
  log_norm_ += std::log(norm);
  return norm;
}

void SiteChain::compress(const Truncation& trunc) {
  const std::size_t n = sites_.size();
  move_center(n - 1);
  for (std::size_t i = n - 1; i > 0; --i) {
    TruncatedSVD svd = svd_truncate(site(i), 1, trunc.epsilon, trunc.chi_max);
    record_truncation(svd);
    // fold u * diag(s) into the left neighbour
    DenseTensor us = std::move(svd.u);
    const std::size_t k = svd.s.size();
    auto d = us.data();
    for (std::size_t j = 0; j < us.size(); ++j) d[j] *= svd.s[j % k];
    const DenseTensor& prev = site(i - 1);
    DenseTensor merged_prev = contract(prev, us, {{prev.rank() - 1, 0}});
    set_site(i, std::move(svd.v));
    set_site(i - 1, std::move(merged_prev));
  }
  center_ = 0;
  normalize();
}

double SiteChain::log_frobenius_norm() const {
  SiteChain copy = *this;
  copy.move_center(0);
  return copy.log_norm_ + std::log(copy.site(0).norm());
}

}  // namespace mirrorbreak
