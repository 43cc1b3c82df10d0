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


#include "mirrorbreak/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "mirrorbreak/errors.hpp"

namespace mirrorbreak {

void apply_gate(Statevector& psi, int num_qubits, const Gate& g) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (psi.size() != dim) throw std::invalid_argument("apply_gate: statevector size mismatch");
  const DenseTensor u = gate_unitary(g);
  if (!g.is_two_qubit()) {
    const std::size_t m = std::size_t{1} << g.qubits[0];
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & m) continue;
      const cplx a0 = psi[i], a1 = psi[i | m];
      psi[i] = u[0] * a0 + u[1] * a1;
      psi[i | m] = u[2] * a0 + u[3] * a1;
    }
    return;
  }
  const std::size_t ma = std::size_t{1} << g.qubits[0];
  const std::size_t mb = std::size_t{1} << g.qubits[1];
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & (ma | mb)) continue;
    const std::size_t idx[4] = {i, i | mb, i | ma, i | ma | mb};  // 2*bit(a) + bit(b)
    cplx in[4];
    for (int k = 0; k < 4; ++k) in[k] = psi[idx[k]];
    for (int r = 0; r < 4; ++r) {
      cplx acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += u[static_cast<std::size_t>(4 * r + k)] * in[k];
      psi[idx[r]] = acc;
    }
  }
}

Statevector simulate(const Circuit& c) {
  const int n = c.num_qubits();
  if (n > 24) throw GuardError("simulate: at most 24 qubits");
  Statevector psi(std::size_t{1} << n, 0.0);
  psi[0] = 1.0;
  for (const Gate& g : c.gates()) apply_gate(psi, n, g);
  return psi;
}

std::vector<double> probabilities(const Statevector& psi) {
  std::vector<double> p(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) p[i] = std::norm(psi[i]);
  return p;
}

std::string index_to_bits(std::uint64_t index, int num_qubits) {
  std::string s(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q) {
    if ((index >> q) & 1) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

std::uint64_t bits_to_index(const std::string& bits) {
  if (bits.size() > 63) throw std::invalid_argument("bits_to_index: bitstring too long");
  std::uint64_t idx = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] == '1') {
      idx |= std::uint64_t{1} << q;
    } else if (bits[q] != '0') {
      throw std::invalid_argument("bits_to_index: bits must be 0/1");
    }
  }
  return idx;
}

std::pair<std::string, double> peak_of(const Statevector& psi) {
  if (psi.empty()) throw std::invalid_argument("peak_of: empty statevector");
  std::size_t best = 0;
  double pbest = std::norm(psi[0]);
  for (std::size_t i = 1; i < psi.size(); ++i) {
    const double p = std::norm(psi[i]);
    if (p > pbest) {
      pbest = p;
      best = i;
    }
  }
  int n = 0;
  while ((std::size_t{1} << n) < psi.size()) ++n;
  return {index_to_bits(best, n), pbest};
}

double tvd(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("tvd: distribution size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

double fidelity(const Statevector& a, const Statevector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("fidelity: size mismatch");
  cplx ov = 0.0;
  double na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ov += std::conj(a[i]) * b[i];
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
  }
  return std::norm(ov) / (na * nb);
}

DenseTensor circuit_unitary(const Circuit& c) {
  const int n = c.num_qubits();
  if (n > 12) throw GuardError("circuit_unitary: at most 12 qubits");
  const std::size_t dim = std::size_t{1} << n;
  DenseTensor u({dim, dim});
  for (std::size_t col = 0; col < dim; ++col) {
    Statevector psi(dim, 0.0);
    psi[col] = 1.0;
    for (const Gate& g : c.gates()) apply_gate(psi, n, g);
    for (std::size_t row = 0; row < dim; ++row) u[row * dim + col] = psi[row];
  }
  return u;
}

}  // namespace mirrorbreak
