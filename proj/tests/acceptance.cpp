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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "mirrorbreak/driver.hpp"
#include "mirrorbreak/oracle.hpp"
#include "mirrorbreak/peaked_gen.hpp"
#include "mirrorbreak/qasm.hpp"
#include "mirrorbreak/transpiler.hpp"
#include "mirrorbreak/unswap.hpp"
#include "mirrorbreak/verify.hpp"

using namespace mirrorbreak;

namespace {

int failures = 0;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int id, const std::string& name, bool ok, const std::string& detail, const Stopwatch& w) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << " ("
            << std::fixed << std::setprecision(1) << w.seconds() << " s)" << std::defaultfloat << std::endl;
}

void note(const std::string& text) { std::cout << "     note: " << text << std::endl; }

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

double max_abs_diff(const DenseTensor& a, const DenseTensor& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

std::size_t peak_count(const std::vector<std::string>& samples, const std::string& peak) {
  return static_cast<std::size_t>(std::count(samples.begin(), samples.end(), peak));
}

std::string mode_of(const std::vector<std::string>& samples) {
  const Histogram h = histogram(samples);
  return std::max_element(h.begin(), h.end(), [](const auto& a, const auto& b) { return a.second < b.second; })
      ->first;
}

// 1. G * G^dagger contracts to the identity.
void mirror_cancellation() {
  const Stopwatch w;
  std::mt19937_64 rng(101);
  const int sizes[] = {6, 8, 10};
  int ok = 0;
  double worst = 1.0;
  for (int i = 0; i < 100; ++i) {
    const int n = sizes[i % 3];
    const Circuit g = mbtest::random_adjacent_circuit(n, 40 + mbtest::rand_int(rng, 81), rng);
    Circuit c = g;
    c.append(g.inverse());
    ContractionConfig cfg;
    cfg.epsilon = 1e-10;
    const SimulationResult r = run(c, cfg);
    const double f = std::norm(output_statevector(r)[0]);
    worst = std::min(worst, f);
    if (r.final_mpo.max_bond() == 1 && f >= 1 - 1e-8) ++ok;
  }
  report(1, "mirror cancellation", ok == 100,
         std::to_string(ok) + "/100 identity, min fidelity 1 - " + fmt(1 - worst), w);
}

MatrixProductOperator permutation_mpo(const QubitPermutation& p) {
  MatrixProductOperator m = identity_mpo(p.size());
  const auto& f = p.factorization();
  for (auto it = f.rbegin(); it != f.rend(); ++it) m = apply_swap_boundary(m, *it, Side::Left, {});
  return m;
}

// 2. Every permutation MPO unswaps to bond 1 with exact reconstruction.
void permutation_extraction() {
  const Stopwatch w;
  UnswapConfig cfg;
  cfg.epsilon = 1e-12;
  cfg.chi_max = 1 << 20;
  int cases = 0;
  int ok = 0;
  double worst = 0.0;
  auto check = [&](const QubitPermutation& p) {
    const MatrixProductOperator m = permutation_mpo(p);
    const UnswapResult r = unswap(m, cfg);
    const DenseTensor rec = matmul(matmul(r.p_left.dense(), mpo_to_dense(r.reduced)), r.p_right.dense());
    const double err = max_abs_diff(rec, mpo_to_dense(m));
    worst = std::max(worst, err);
    ++cases;
    if (r.reduced.max_bond() == 1 && err <= 1e-10) ++ok;
  };
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      check(QubitPermutation::from_mapping(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::mt19937_64 rng(102);
  for (int i = 0; i < 50; ++i) {
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    check(QubitPermutation::from_mapping(perm));
  }
  report(2, "permutation extraction", ok == cases,
         std::to_string(ok) + "/" + std::to_string(cases) + " reduced to bond 1, max reconstruction error " +
             fmt(worst),
         w);
}

PeakedInstance peaked_instance(int i) {
  GenerateParams p;
  p.qubits = 8 + 2 * (i % 3);
  p.depth = 10 * p.qubits;
  p.peak_weight = 0.1;
  p.obfuscation_swaps = 20 + (i * 7) % 41;
  p.seed = 1000 + static_cast<std::uint64_t>(i);
  return generate(p);
}

struct PeakTally {
  int matched = 0;
  int within = 0;
  int stalled = 0;
};

PeakTally peak_tally(Acceptance acceptance) {
  constexpr std::size_t kShots = 1000;
  PeakTally t;
  for (int i = 0; i < 50; ++i) {
    const PeakedInstance inst = peaked_instance(i);
    ContractionConfig cfg;
    cfg.tau = 5000;
    cfg.unswap.acceptance = acceptance;
    try {
      const SimulationResult r = run(inst.circuit, cfg);
      const auto samples = sample_output(r, kShots, 7);
      if (mode_of(samples) == inst.peak) ++t.matched;
      const auto exact = probabilities(simulate(inst.circuit));
      const double p = exact[bits_to_index(inst.peak)];
      const double sigma = std::sqrt(p * (1 - p) / kShots);
      const double freq = static_cast<double>(peak_count(samples, inst.peak)) / kShots;
      if (std::abs(freq - p) <= 3 * sigma) ++t.within;
    } catch (const StallError&) {
      ++t.stalled;
    }
  }
  return t;
}

// 3. Sampled argmax recovers the planted peak at the designed weight.
void peak_recovery() {
  const Stopwatch w;
  const PeakTally t = peak_tally(Acceptance::Relaxed);
  report(3, "peak recovery", t.matched == 50 && t.within == 50,
         std::to_string(t.matched) + "/50 argmax match, " + std::to_string(t.within) +
             "/50 peak frequency within 3 sigma, " + std::to_string(t.stalled) + " stalled (tau 5e3, relaxed)",
         w);
  const PeakTally s = peak_tally(Acceptance::Strict);
  note("strict acceptance: " + std::to_string(s.matched) + "/50 match, " + std::to_string(s.within) +
       "/50 within 3 sigma, " + std::to_string(s.stalled) + " stalled");
}

// 4. Sampled distribution vs the statevector oracle.
void distribution_accuracy() {
  const Stopwatch w;
  constexpr std::size_t kShots = 50000;
  std::mt19937_64 rng(104);
  int ok = 0;
  double worst = 0.0;
  double worst_floor = 0.0;
  double worst_exact = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Circuit c = mbtest::random_long_range_circuit(8, 20, rng);
    ContractionConfig cfg;
    cfg.epsilon = 1e-10;
    const SimulationResult r = run(c, cfg);
    const auto p = probabilities(simulate(c));
    const double d = tvd(p, empirical_distribution(sample_output(r, kShots, 200 + i), 8));
    // expected TVD of an exact sampler at this shot count
    double floor = 0.0;
    for (double x : p) floor += std::sqrt(x);
    floor *= 0.5 * std::sqrt(2.0 / (std::numbers::pi * kShots));
    worst = std::max(worst, d);
    worst_floor = std::max(worst_floor, floor);
    worst_exact = std::max(worst_exact, tvd(p, probabilities(output_statevector(r))));
    if (d <= 0.02) ++ok;
  }
  report(4, "distribution accuracy", ok == 20,
         std::to_string(ok) + "/20 with TVD <= 0.02 at 50k shots, max " + fmt(worst), w);
  note("max shot-noise floor " + fmt(worst_floor) + ", max TVD of the exact output distribution " +
       fmt(worst_exact));
}

// 5. Absorb/unswap sawtooth at a small element budget.
void sawtooth() {
  const Stopwatch w;
  GenerateParams p;
  p.qubits = 12;
  p.depth = 120;
  p.peak_weight = 0.1;
  p.obfuscation_swaps = 20 + (23 * 7) % 41;
  p.seed = 1023;
  const PeakedInstance inst = generate(p);
  ContractionConfig cfg;
  cfg.tau = 5000;
  const SimulationResult r = run(inst.circuit, cfg);
  int cycles = 0;
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    if (r.trace[i].phase != Phase::Unswap) continue;
    const std::size_t entry = r.trace[i - 1].elements;
    if (entry >= cfg.tau && r.trace[i].elements < entry) ++cycles;
  }
  report(5, "sawtooth telemetry", cycles >= 3,
         std::to_string(cycles) + " unswaps entered at >= tau and shrank (" + std::to_string(r.unswap_calls) +
             " unswap calls)",
         w);
}

// 6. Routing preserves the unitary up to the tracked layout.
void router_soundness() {
  const Stopwatch w;
  std::mt19937_64 rng(106);
  int ok = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + mbtest::rand_int(rng, 7);
    const Circuit c = mbtest::random_long_range_circuit(n, 10 + mbtest::rand_int(rng, 41), rng);
    const RoutedCircuit r = route_linear(c);
    const double err =
        max_abs_diff(circuit_unitary(r.circuit), matmul(r.final_layout.dense(), circuit_unitary(c)));
    worst = std::max(worst, err);
    if (err <= 1e-10 && strip_transpilation_swaps(r.circuit) == c) ++ok;
  }
  report(6, "router soundness", ok == 100,
         std::to_string(ok) + "/100 exact, max unitary error " + fmt(worst), w);
}

// 7. Full-scale run on an external circuit file.
void full_scale() {
  const char* path = std::getenv("MIRRORBREAK_AC7_CIRCUIT");
  const char* peak = std::getenv("MIRRORBREAK_AC7_PEAK");
  if (path == nullptr || peak == nullptr) {
    std::cout << "SKIP [7] full-scale reproduction: set MIRRORBREAK_AC7_CIRCUIT and MIRRORBREAK_AC7_PEAK"
              << std::endl;
    return;
  }
  const Stopwatch w;
  std::ifstream f(path);
  if (!f) throw std::runtime_error(std::string("cannot read ") + path);
  std::stringstream text;
  text << f.rdbuf();
  const SimulationResult r = run(parse_qasm(text.str()), ContractionConfig{});
  const auto samples = sample_output(r, 1000, 7);
  const double weight = static_cast<double>(peak_count(samples, peak)) / 1000.0;
  report(7, "full-scale reproduction", mode_of(samples) == peak && std::abs(weight - 0.11) <= 0.03,
         "mode " + mode_of(samples) + ", peak weight " + fmt(weight), w);
}

}  // namespace

int main() {
  const std::pair<int, void (*)()> criteria[] = {
      {1, mirror_cancellation}, {2, permutation_extraction}, {3, peak_recovery}, {4, distribution_accuracy},
      {5, sawtooth},            {6, router_soundness},       {7, full_scale},
  };
  for (const auto& [id, fn] : criteria) {
    try {
      fn();
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL [" << id << "] " << e.what() << std::endl;
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
