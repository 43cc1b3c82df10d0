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


#include "mirrorbreak/unswap.hpp"

#include <array>
#include <future>
#include <optional>
#include <set>
#include <stdexcept>

namespace mirrorbreak {

namespace {

constexpr std::array<Side, 3> kAllSides = {Side::Left, Side::Right, Side::Both};

struct Candidate {
  Side side;
  TruncatedSVD svd;
  std::size_t extent() const { return svd.s.size(); }
};

class Unswapper {
 public:
  Unswapper(const MatrixProductOperator& m, const UnswapConfig& cfg) : cfg_(cfg) {
    if (cfg.max_outer_iterations < 1) throw std::invalid_argument("max_outer_iterations must be >= 1");
    result_.reduced = m;
    result_.p_left = QubitPermutation::identity(m.num_sites());
    result_.p_right = QubitPermutation::identity(m.num_sites());
    result_.elements_before = m.total_elements();
  }

  MatrixProductOperator& mpo() { return result_.reduced; }

  // Best of the given sides at `bond`; ties resolved by the order of `sides`.
  template <std::size_t K>
  Candidate best_candidate(int bond, const std::array<Side, K>& sides) {
    const DenseTensor theta = mpo().chain().merged(static_cast<std::size_t>(bond));
    const Truncation tr = cfg_.truncation();
    auto eval = [&](Side s) { return Candidate{s, svd_truncate(swap_theta(theta, s), 3, tr.epsilon, tr.chi_max)}; };
    std::vector<Candidate> cands;
    if (cfg_.threads > 1 && K > 1) {
      std::vector<std::future<Candidate>> futs;
      for (Side s : sides) futs.push_back(std::async(std::launch::async, eval, s));
      for (auto& f : futs) cands.push_back(f.get());
    } else {
      for (Side s : sides) cands.push_back(eval(s));
    }
    result_.candidate_evaluations += K;
    std::size_t best = 0;
    for (std::size_t k = 1; k < cands.size(); ++k) {
      if (cands[k].extent() < cands[best].extent()) best = k;
    }
    return std::move(cands[best]);
  }

  bool acceptable(std::size_t before, std::size_t after) const {
    return cfg_.acceptance == Acceptance::Strict ? after < before : after <= before;
  }

  void commit(int bond, Candidate c) {
    mpo().chain().commit_split(static_cast<std::size_t>(bond), std::move(c.svd));
    if (c.side != Side::Right) result_.p_left.push_right(bond);
    if (c.side != Side::Left) result_.p_right.push_left(bond);
    ++result_.accepted_swaps;
  }

  UnswapResult finish() {
    result_.elements_after = result_.reduced.total_elements();
    return std::move(result_);
  }

  const UnswapConfig& cfg() const { return cfg_; }

 private:
  UnswapConfig cfg_;
  UnswapResult result_;
};

}  // namespace

UnswapResult unswap_sequential(const MatrixProductOperator& m, const UnswapConfig& cfg) {
  Unswapper u(m, cfg);
  const int bonds = m.num_sites() - 1;
  for (int pass = 0; pass < cfg.max_outer_iterations && bonds > 0; ++pass) {
    std::set<int> available;
    for (int i = 0; i < bonds; ++i) available.insert(i);
    std::set<std::pair<int, Side>> taken;  // relaxed-mode cycle guard
    bool any = false;
    // each acceptance needs a strictly smaller bond (strict) or a fresh
    // (bond, side) pair (relaxed), so this cap is never the binding limit
    std::size_t guard = 0;
    const std::size_t guard_max = 64 * static_cast<std::size_t>(bonds) * 3 + 1024;
    while (!available.empty()) {
      if (++guard > guard_max) throw std::logic_error("unswap_sequential: iteration guard tripped");
      int bond = *available.begin();
      for (int i : available) {
        if (u.mpo().bond_dim(i) > u.mpo().bond_dim(bond)) bond = i;
      }
      available.erase(bond);
      const std::size_t before = u.mpo().bond_dim(bond);
      Candidate c = u.best_candidate(bond, kAllSides);
      if (cfg.acceptance == Acceptance::Relaxed && c.extent() == before) {
        if (taken.count({bond, c.side})) continue;
        taken.insert({bond, c.side});
      }
      if (!u.acceptable(before, c.extent())) continue;
      any = any || c.extent() < before;
      u.commit(bond, std::move(c));
      if (bond > 0) available.insert(bond - 1);
      if (bond + 1 < bonds) available.insert(bond + 1);
    }
    if (!any) break;
  }
  return u.finish();
}

UnswapResult unswap_parallel(const MatrixProductOperator& m, const UnswapConfig& cfg) {
  Unswapper u(m, cfg);
  const int bonds = m.num_sites() - 1;
  static constexpr std::array<std::pair<Side, int>, 6> kCycle = {{
      {Side::Both, 0}, {Side::Both, 1}, {Side::Left, 0},
      {Side::Left, 1}, {Side::Right, 0}, {Side::Right, 1},
  }};
  for (int cycle = 0; cycle < cfg.max_outer_iterations && bonds > 0; ++cycle) {
    std::set<std::pair<int, Side>> taken;
    bool reduced = false;
    for (const auto& [side, parity] : kCycle) {
      // pairs of one parity are disjoint, and the extent of a local SVD is
      // gauge invariant, so evaluating in ascending order equals
      // evaluating on one snapshot
      for (int bond = parity; bond < bonds; bond += 2) {
        const std::size_t before = u.mpo().bond_dim(bond);
        Candidate c = u.best_candidate(bond, std::array<Side, 1>{side});
        if (!u.acceptable(before, c.extent())) continue;
        if (c.extent() == before) {
          if (taken.count({bond, side})) continue;
          taken.insert({bond, side});
        }
        reduced = reduced || c.extent() < before;
        u.commit(bond, std::move(c));
      }
    }
    if (!reduced) break;
  }
  return u.finish();
}

UnswapResult unswap(const MatrixProductOperator& m, const UnswapConfig& cfg) {
  return cfg.strategy == UnswapStrategy::Sequential ? unswap_sequential(m, cfg)
                                                    : unswap_parallel(m, cfg);
}

}  // namespace mirrorbreak
