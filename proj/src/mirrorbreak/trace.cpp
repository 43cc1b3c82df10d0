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


#include "mirrorbreak/trace.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mirrorbreak {

std::string phase_name(Phase p) { return p == Phase::Absorb ? "absorb" : "unswap"; }

void emit_trace(const ContractionTrace& trace, std::ostream& sink) {
  for (const TraceRecord& r : trace) {
    nlohmann::ordered_json j;
    j["phase"] = phase_name(r.phase);
    j["unitaries_consumed"] = r.unitaries_consumed;
    j["elements"] = r.elements;
    j["wall_time_s"] = r.wall_time_s;
    if (r.chi_capped) j["chi_capped"] = true;
    sink << j.dump() << '\n';
  }
  sink.flush();
  if (!sink) throw std::runtime_error("trace sink write failed");
}

std::string trace_to_string(const ContractionTrace& trace) {
  std::ostringstream os;
  emit_trace(trace, os);
  return os.str();
}

ContractionTrace parse_trace(std::istream& in) {
  ContractionTrace out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      TraceRecord r;
      const std::string phase = j.at("phase").get<std::string>();
      if (phase == "absorb") {
        r.phase = Phase::Absorb;
      } else if (phase == "unswap") {
        r.phase = Phase::Unswap;
      } else {
        throw std::invalid_argument("unknown phase '" + phase + "'");
      }
      r.unitaries_consumed = j.at("unitaries_consumed").get<std::size_t>();
      r.elements = j.at("elements").get<std::size_t>();
      r.wall_time_s = j.at("wall_time_s").get<double>();
      r.chi_capped = j.value("chi_capped", false);
      out.push_back(r);
    } catch (const std::exception& e) {
      throw std::invalid_argument("trace line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

ContractionTrace parse_trace(const std::string& text) {
  std::istringstream is(text);
  return parse_trace(is);
}

}  // namespace mirrorbreak
