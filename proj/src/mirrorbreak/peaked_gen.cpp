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


#include "mirrorbreak/peaked_gen.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <vector>

#include "json.hpp"
#include "mirrorbreak/errors.hpp"
#include "mirrorbreak/oracle.hpp"
#include "mirrorbreak/qasm.hpp"
#include "mirrorbreak/rng.hpp"
#include "mirrorbreak/transpiler.hpp"

namespace mirrorbreak {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::mt19937_64 stream(std::uint64_t seed, std::uint32_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag};
  return std::mt19937_64(seq);
}

std::pair<int, int> random_pair(std::mt19937_64& rng, int n) {
  const int a = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  int b = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
  if (b >= a) ++b;
  return {a, b};
}

void validate(const GenerateParams& p) {
  if (p.qubits < 2) throw GuardError("qubits must be >= 2");
  if (p.qubits > 62) throw GuardError("qubits must be <= 62");
  if (p.depth < p.qubits) throw GuardError("depth must be >= qubits");
  if (p.obfuscation_swaps < 0) throw GuardError("obfuscation swaps must be >= 0");
  if (!(p.peak_weight <= 1.0) || !(p.peak_weight > std::ldexp(1.0, -p.qubits))) {
    throw GuardError("peak weight must lie in (2^-n, 1]");
  }
}

}  // namespace

PeakedInstance generate(const GenerateParams& p) {
  validate(p);
  const int n = p.qubits;
  auto peak_rng = stream(p.seed, 1);
  auto u_rng = stream(p.seed, 2);
  auto obf_rng = stream(p.seed, 3);

  PeakedInstance inst;
  inst.seed = p.seed;
  inst.design_weight = p.peak_weight;
  inst.peak.assign(static_cast<std::size_t>(n), '0');
  for (char& c : inst.peak) c = (peak_rng() >> 63) ? '1' : '0';

  const int swaps_in_u = p.obfuscation_swaps / 2;
  const int swaps_pi = p.obfuscation_swaps - swaps_in_u;
  const int u_gates = std::max(1, (p.depth - 2 * swaps_in_u - swaps_pi) / 2);

  // U: brickwork of dressed RZZ gates (even bonds, then odd bonds) with
  // obfuscation SWAPs at random positions
  std::vector<std::pair<int, int>> brick;
  for (int parity : {0, 1}) {
    for (int a = parity; a + 1 < n; a += 2) brick.emplace_back(a, a + 1);
  }
  Circuit u(n);
  std::vector<int> swap_slots;
  for (int k = 0; k < swaps_in_u; ++k) {
    swap_slots.push_back(static_cast<int>(uniform_below(obf_rng, static_cast<std::uint64_t>(u_gates + 1))));
  }
  std::sort(swap_slots.begin(), swap_slots.end());
  std::size_t next_swap = 0;
  for (int k = 0; k <= u_gates; ++k) {
    while (next_swap < swap_slots.size() && swap_slots[next_swap] == k) {
      const auto [a, b] = random_pair(obf_rng, n);
      u.add(Gate::two(GateKind::SWAP, a, b));
      ++next_swap;
    }
    if (k == u_gates) break;
    const auto [a, b] = brick[static_cast<std::size_t>(k) % brick.size()];
    for (int q : {a, b}) {
      const double t = std::numbers::pi * uniform01(u_rng);
      const double ph = kTwoPi * uniform01(u_rng);
      const double la = kTwoPi * uniform01(u_rng);
      u.add(Gate::one(GateKind::U3, q, {t, ph, la}));
    }
    u.add(Gate::two(GateKind::RZZ, a, b, {kTwoPi * uniform01(u_rng)}));
  }

  // Pi = t_m o ... o t_1 from the SWAP sequence s_1 ... s_m
  Circuit pi_swaps(n);
  std::vector<int> mapping(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) mapping[static_cast<std::size_t>(q)] = q;
  for (int k = 0; k < swaps_pi; ++k) {
    const auto [a, b] = random_pair(obf_rng, n);
    pi_swaps.add(Gate::two(GateKind::SWAP, a, b));
    for (int& v : mapping) {
      if (v == a) {
        v = b;
      } else if (v == b) {
        v = a;
      }
    }
  }
  inst.hidden_permutation = QubitPermutation::from_mapping(mapping);

  Circuit c(n);
  if (p.peak_weight < 1.0) {
    const double theta = 2.0 * std::acos(std::pow(p.peak_weight, 1.0 / (2.0 * n)));
    for (int q = 0; q < n; ++q) c.add(Gate::one(GateKind::RY, q, {theta}));
  }
  for (int q = 0; q < n; ++q) {
    if (inst.peak[static_cast<std::size_t>(inst.hidden_permutation(q))] == '1') c.add(Gate::one(GateKind::X, q));
  }
  c.append(u);
  c.append(pi_swaps);
  c.append(reindex(u.inverse(), inst.hidden_permutation));
  inst.circuit = std::move(c);

  if (n <= 14) {
    const Statevector psi = simulate(inst.circuit);
    inst.achieved_weight = std::norm(psi[bits_to_index(inst.peak)]);
  }
  return inst;
}

std::string sidecar_json(const PeakedInstance& inst) {
  nlohmann::ordered_json j;
  j["peak"] = inst.peak;
  j["design_weight"] = inst.design_weight;
  if (inst.achieved_weight) j["achieved_weight"] = *inst.achieved_weight;
  j["seed"] = inst.seed;
  return j.dump(2) + "\n";
}

void write_instance(const PeakedInstance& inst, const std::string& stem) {
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
  };
  write(stem + ".qasm", to_qasm(inst.circuit));
  write(stem + ".json", sidecar_json(inst));
}

}  // namespace mirrorbreak
