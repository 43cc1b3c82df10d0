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

#include <string>
#include <string_view>

#include "mirrorbreak/circuit.hpp"

namespace mirrorbreak {

/// Parses the OpenQASM 2.0 subset used by this project: a single `qreg`,
/// gates h x rx ry rz u3 (alias u) cx rzz swap, angle expressions over
/// numbers and `pi`. `creg`, `barrier` and `measure` statements are
/// accepted and dropped. Throws ParseError with line/column.
Circuit parse_qasm(std::string_view text);

/// Emits `OPENQASM 2.0;`, one register `q`, one gate per line, angles with
/// 17 significant digits so that parse_qasm(to_qasm(c)) == c for circuits
/// whose gates all have GateOrigin::Source.
std::string to_qasm(const Circuit& c);

}  // namespace mirrorbreak
