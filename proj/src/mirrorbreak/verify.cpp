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


#include "mirrorbreak/verify.hpp"

#include <algorithm>
#include <map>

#include "mirrorbreak/errors.hpp"
#include "mirrorbreak/oracle.hpp"

namespace mirrorbreak {

Histogram histogram(const std::vector<std::string>& samples) {
  std::map<std::string, std::size_t> counts;
  for (const auto& s : samples) ++counts[s];
  Histogram h(counts.begin(), counts.end());
  std::stable_sort(h.begin(), h.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return h;
}

std::vector<double> empirical_distribution(const std::vector<std::string>& samples, int num_qubits) {
  if (num_qubits > 24) throw GuardError("empirical_distribution: at most 24 qubits");
  std::vector<double> p(std::size_t{1} << num_qubits, 0.0);
  if (samples.empty()) return p;
  const double w = 1.0 / static_cast<double>(samples.size());
  for (const auto& s : samples) p.at(bits_to_index(s)) += w;
  return p;
}

VerifyReport verify_against_oracle(const Circuit& c, const ContractionConfig& cfg,
                                   std::size_t shots, std::uint64_t seed) {
  const int n = c.num_qubits();
  if (n > 12) throw GuardError("verify: oracle comparison limited to 12 qubits, circuit has " + std::to_string(n));
  const Statevector exact = simulate(c);
  const SimulationResult r = run(c, cfg);
  const std::vector<cplx> got = output_statevector(r);

  VerifyReport rep;
  rep.fidelity = fidelity(got, exact);
  rep.shots = shots;
  if (shots > 0) {
    rep.tvd = tvd(empirical_distribution(sample_output(r, shots, seed), n), probabilities(exact));
  }
  rep.method_peak = peak_of(got).first;
  std::tie(rep.oracle_peak, rep.oracle_peak_probability) = peak_of(exact);
  rep.peak_match = rep.method_peak == rep.oracle_peak;
  return rep;
}

}  // namespace mirrorbreak
