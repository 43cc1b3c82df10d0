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
#include <iosfwd>
#include <string>
#include <vector>

namespace mirrorbreak {

enum class Phase { Absorb, Unswap };

/// One telemetry sample. Serialized as a single JSON object per line:
///   {"phase":"absorb"|"unswap","unitaries_consumed":int,"elements":int,
///    "wall_time_s":float}
/// plus "chi_capped":true when some SVD since the previous record was
/// clamped by chi_max.
struct TraceRecord {
  Phase phase = Phase::Absorb;
  std::size_t unitaries_consumed = 0;  // cumulative source two-qubit gates
  std::size_t elements = 0;            // MPO total_elements after the step
  double wall_time_s = 0.0;
  bool chi_capped = false;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

using ContractionTrace = std::vector<TraceRecord>;

std::string phase_name(Phase p);

/// Writes ND-JSON. Throws std::runtime_error if the stream fails.
void emit_trace(const ContractionTrace& trace, std::ostream& sink);
std::string trace_to_string(const ContractionTrace& trace);

/// Inverse of emit_trace; blank lines are skipped.
ContractionTrace parse_trace(std::istream& in);
ContractionTrace parse_trace(const std::string& text);

}  // namespace mirrorbreak
