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

#include "mirrorbreak/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mirrorbreak {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::U3: return "u3";
    case GateKind::CX: return "cx";
    case GateKind::RZZ: return "rzz";
    case GateKind::SWAP: return "swap";
  }
  return "?";
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::RZZ:
    case GateKind::SWAP: return 2;
    default: return 1;
  }
}

std::size_t gate_param_count(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::RZZ: return 1;
    case GateKind::U3: return 3;
    default: return 0;
  }
}

namespace {

Gate make_gate(GateKind kind, std::array<int, 2> qubits, const std::vector<double>& params) {
  if (params.size() != gate_param_count(kind)) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " expects " +
                                std::to_string(gate_param_count(kind)) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
  Gate g;
  g.kind = kind;
  g.qubits = qubits;
  std::copy(params.begin(), params.end(), g.params.begin());
  return g;
}

}  // namespace

Gate Gate::one(GateKind kind, int q, std::vector<double> params) {
  if (gate_arity(kind) != 1) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " is a two-qubit gate");
  }
  if (q < 0) throw std::invalid_argument("negative qubit index");
  return make_gate(kind, {q, -1}, params);
}

Gate Gate::two(GateKind kind, int a, int b, std::vector<double> params) {
  if (gate_arity(kind) != 2) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " is a single-qubit gate");
  }
  if (a < 0 || b < 0) throw std::invalid_argument("negative qubit index");
  if (a == b) throw std::invalid_argument("two-qubit gate on repeated qubit " + std::to_string(a));
  return make_gate(kind, {a, b}, params);
}

Gate Gate::transpilation_swap(int a, int b) {
  Gate g = two(GateKind::SWAP, a, b);
  g.origin = GateOrigin::TranspilationSwap;
  return g;
}

Gate Gate::dagger() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::RZZ: g.params[0] = -params[0]; break;
    case GateKind::U3:
      // U3(t, p, l)^dagger = U3(-t, -l, -p)
      g.params = {-params[0], -params[2], -params[1]};
      break;
    default: break;
  }
  return g;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

Circuit::Circuit(int num_qubits, std::vector<Gate> gates) : Circuit(num_qubits) {
  gates_.reserve(gates.size());
  for (Gate& g : gates) add(g);
}

void Circuit::add(Gate g) {
  for (std::size_t k = 0; k < g.arity(); ++k) {
    if (g.qubits[k] < 0 || g.qubits[k] >= num_qubits_) {
      throw std::out_of_range("qubit index " + std::to_string(g.qubits[k]) +
                              " out of range for " + std::to_string(num_qubits_) + " qubits");
    }
  }
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) throw std::invalid_argument("append: qubit count mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::size_t Circuit::two_qubit_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_two_qubit(); }));
}

std::size_t Circuit::source_two_qubit_count() const {
  return static_cast<std::size_t>(std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) {
    return g.is_two_qubit() && g.origin == GateOrigin::Source;
  }));
}

Circuit Circuit::inverse() const {
  Circuit out(num_qubits_);
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(it->dagger());
  return out;
}

DenseTensor gate_unitary(const Gate& g) {
  const cplx i1{0.0, 1.0};
  const double t = g.params[0];
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  const double r = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H: return DenseTensor({2, 2}, {r, r, r, -r});
    case GateKind::X: return DenseTensor({2, 2}, {0.0, 1.0, 1.0, 0.0});
    case GateKind::RX: return DenseTensor({2, 2}, {c, -i1 * s, -i1 * s, c});
    case GateKind::RY: return DenseTensor({2, 2}, {c, -s, s, c});
    case GateKind::RZ: return DenseTensor({2, 2}, {std::exp(-i1 * t / 2.0), 0.0, 0.0, std::exp(i1 * t / 2.0)});
    case GateKind::U3: {
      const double phi = g.params[1], lam = g.params[2];
      return DenseTensor({2, 2}, {c, -std::exp(i1 * lam) * s, std::exp(i1 * phi) * s,
                                  std::exp(i1 * (phi + lam)) * c});
    }
    case GateKind::CX: {
      DenseTensor u({4, 4});
      u.at({0, 0}) = u.at({1, 1}) = u.at({2, 3}) = u.at({3, 2}) = 1.0;
      return u;
    }
    case GateKind::RZZ: {
      DenseTensor u({4, 4});
      const cplx even = std::exp(-i1 * t / 2.0), odd = std::exp(i1 * t / 2.0);
      u.at({0, 0}) = even;
      u.at({1, 1}) = odd;
      u.at({2, 2}) = odd;
      u.at({3, 3}) = even;
      return u;
    }
    case GateKind::SWAP: {
      DenseTensor u({4, 4});
      u.at({0, 0}) = u.at({1, 2}) = u.at({2, 1}) = u.at({3, 3}) = 1.0;
      return u;
    }
  }
  throw std::logic_error("gate_unitary: unknown gate kind");
}

std::pair<Circuit, Circuit> split_at_midpoint(const Circuit& c) {
  if (c.empty()) throw std::invalid_argument("split_at_midpoint: empty circuit");
  const auto& gates = c.gates();
  const std::size_t target = c.two_qubit_count() / 2;

  // [gap_begin, gap_end) holds the single-qubit gates between the target-th
  // and (target+1)-th two-qubit gate.
  std::size_t gap_begin = 0, seen = 0;
  if (target > 0) {
    for (std::size_t k = 0; k < gates.size(); ++k) {
      if (gates[k].is_two_qubit() && ++seen == target) {
        gap_begin = k + 1;
        break;
      }
    }
  }
  std::size_t gap_end = gap_begin;
  while (gap_end < gates.size() && !gates[gap_end].is_two_qubit()) ++gap_end;
  const std::size_t cut = gap_begin + (gap_end - gap_begin) / 2;

  Circuit left(c.num_qubits(), std::vector<Gate>(gates.begin(), gates.begin() + static_cast<std::ptrdiff_t>(cut)));
  Circuit right(c.num_qubits(), std::vector<Gate>(gates.begin() + static_cast<std::ptrdiff_t>(cut), gates.end()));
  return {std::move(left), std::move(right)};
}

}  // namespace mirrorbreak
