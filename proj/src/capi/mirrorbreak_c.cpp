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


#include "mirrorbreak/mirrorbreak.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "mirrorbreak/driver.hpp"
#include "mirrorbreak/errors.hpp"
#include "mirrorbreak/oracle.hpp"
#include "mirrorbreak/peaked_gen.hpp"
#include "mirrorbreak/qasm.hpp"
#include "mirrorbreak/verify.hpp"

using namespace mirrorbreak;

struct mb_circuit {
  Circuit circuit;
};

struct mb_result {
  std::optional<SimulationResult> result;
  ContractionTrace trace;
  int num_qubits = 0;
};

struct mb_instance {
  PeakedInstance inst;
};

namespace {

thread_local std::string g_last_error;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

mb_status fail(mb_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Maps the exception in flight to a status code.
mb_status translate() {
  try {
    throw;
  } catch (const ParseError& e) {
    return fail(MB_ERR_PARSE, e.what());
  } catch (const GuardError& e) {
    return fail(MB_ERR_GUARD, e.what());
  } catch (const StallError& e) {
    return fail(MB_ERR_STALL, e.what());
  } catch (const NumericalError& e) {
    return fail(MB_ERR_NUMERIC, e.what());
  } catch (const IoError& e) {
    return fail(MB_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(MB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(MB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(MB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MB_ERR_INTERNAL, "unknown exception");
  }
}

template <typename F>
mb_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return MB_OK;
  } catch (...) {
    return translate();
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " must not be null");
}

ContractionConfig to_config(const mb_config* c) {
  ContractionConfig cfg;
  if (!c) return cfg;
  cfg.epsilon = c->epsilon;
  cfg.chi_max = static_cast<std::size_t>(c->chi_max);
  cfg.tau = static_cast<std::size_t>(c->tau);
  cfg.unswap.max_outer_iterations = c->max_unswap_iterations;
  cfg.unswap.acceptance = c->acceptance == MB_ACCEPT_RELAXED ? Acceptance::Relaxed : Acceptance::Strict;
  cfg.unswap.strategy = c->unswap_strategy == MB_UNSWAP_SEQUENTIAL ? UnswapStrategy::Sequential
                                                                     : UnswapStrategy::ParityParallel;
  if (c->fixed_side_frequency < 0) throw std::invalid_argument("fixed_side_frequency must be >= 0");
  cfg.side_mode = c->fixed_side_frequency > 0 ? SideMode::Fixed : SideMode::Adaptive;
  cfg.fixed_frequency = c->fixed_side_frequency > 0 ? c->fixed_side_frequency : 1;
  cfg.stall_limit = c->stall_limit;
  if (c->threads < 1) throw std::invalid_argument("threads must be >= 1");
  cfg.threads = c->threads;
  return cfg;
}

const SimulationResult& completed(const mb_result* r) {
  require(r, "result");
  if (!r->result) throw std::invalid_argument("result holds no state (contraction did not complete)");
  return *r->result;
}

}  // namespace

extern "C" {

const char* mb_version(void) { return "0.1.0"; }

const char* mb_last_error(void) { return g_last_error.c_str(); }

const char* mb_status_name(mb_status s) {
  switch (s) {
    case MB_OK: return "ok";
    case MB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MB_ERR_GUARD: return "size guard exceeded";
    case MB_ERR_PARSE: return "parse error";
    case MB_ERR_IO: return "I/O error";
    case MB_ERR_NUMERIC: return "numerical error";
    case MB_ERR_STALL: return "stalled";
    case MB_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void mb_string_free(char* s) { std::free(s); }

void mb_config_default(mb_config* cfg) {
  if (!cfg) return;
  const ContractionConfig d;
  cfg->epsilon = d.epsilon;
  cfg->chi_max = d.chi_max;
  cfg->tau = d.tau;
  cfg->max_unswap_iterations = d.unswap.max_outer_iterations;
  cfg->acceptance = MB_ACCEPT_STRICT;
  cfg->unswap_strategy = MB_UNSWAP_PARALLEL;
  cfg->fixed_side_frequency = 0;
  cfg->stall_limit = d.stall_limit;
  cfg->threads = d.threads;
}

mb_status mb_circuit_parse(const char* qasm, mb_circuit** out) {
  return guarded([&] {
    require(qasm, "qasm");
    require(out, "out");
    *out = new mb_circuit{parse_qasm(qasm)};
  });
}

mb_status mb_circuit_load(const char* path, mb_circuit** out) {
  const mb_status s = guarded([&] {
    require(path, "path");
    require(out, "out");
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError(std::string("cannot read circuit file '") + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    *out = new mb_circuit{parse_qasm(ss.str())};
  });
  if (s == MB_ERR_PARSE) g_last_error = std::string(path) + ": " + g_last_error;
  return s;
}

mb_status mb_circuit_to_qasm(const mb_circuit* c, char** out) {
  return guarded([&] {
    require(c, "circuit");
    require(out, "out");
    *out = dup_string(to_qasm(c->circuit));
  });
}

int mb_circuit_num_qubits(const mb_circuit* c) { return c ? c->circuit.num_qubits() : 0; }
size_t mb_circuit_num_gates(const mb_circuit* c) { return c ? c->circuit.size() : 0; }
size_t mb_circuit_two_qubit_count(const mb_circuit* c) { return c ? c->circuit.two_qubit_count() : 0; }
void mb_circuit_free(mb_circuit* c) { delete c; }

mb_status mb_run(const mb_circuit* c, const mb_config* cfg, mb_result** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(c, "circuit");
    require(out, "out");
    const ContractionConfig config = to_config(cfg);
    auto r = std::make_unique<mb_result>();
    r->num_qubits = c->circuit.num_qubits();
    try {
      r->result = run(c->circuit, config);
      r->trace = r->result->trace;
    } catch (const StallError& e) {
      r->trace = e.trace();
      *out = r.release();
      throw;
    }
    *out = r.release();
  });
}

int mb_result_completed(const mb_result* r) { return r && r->result ? 1 : 0; }
int mb_result_num_qubits(const mb_result* r) { return r ? r->num_qubits : 0; }

size_t mb_result_unitaries_consumed(const mb_result* r) {
  if (!r) return 0;
  if (r->result) return r->result->unitaries_consumed;
  return r->trace.empty() ? 0 : r->trace.back().unitaries_consumed;
}

size_t mb_result_final_max_bond(const mb_result* r) {
  return r && r->result ? r->result->final_mpo.max_bond() : 0;
}

size_t mb_result_final_elements(const mb_result* r) {
  return r && r->result ? r->result->final_mpo.total_elements() : 0;
}

mb_status mb_result_sample(const mb_result* r, size_t shots, uint64_t seed, char** out) {
  return guarded([&] {
    require(out, "out");
    std::string text;
    for (const auto& s : sample_output(completed(r), shots, seed)) text += s + '\n';
    *out = dup_string(text);
  });
}

mb_status mb_result_histogram_csv(const mb_result* r, size_t shots, uint64_t seed, char** out) {
  return guarded([&] {
    require(out, "out");
    std::string text = "bitstring,count\n";
    for (const auto& [bits, count] : histogram(sample_output(completed(r), shots, seed))) {
      text += bits + ',' + std::to_string(count) + '\n';
    }
    *out = dup_string(text);
  });
}

mb_status mb_result_trace_ndjson(const mb_result* r, char** out) {
  return guarded([&] {
    require(r, "result");
    require(out, "out");
    *out = dup_string(trace_to_string(r->trace));
  });
}

mb_status mb_result_write_trace(const mb_result* r, const char* path) {
  return guarded([&] {
    require(r, "result");
    require(path, "path");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError(std::string("cannot open '") + path + "' for writing");
    try {
      emit_trace(r->trace, f);
    } catch (const std::runtime_error& e) {
      throw IoError(std::string(path) + ": " + e.what());
    }
  });
}

mb_status mb_result_statevector(const mb_result* r, double* out, size_t len) {
  return guarded([&] {
    require(out, "out");
    const std::vector<cplx> v = output_statevector(completed(r));
    if (len != 2 * v.size()) throw std::invalid_argument("statevector buffer must hold 2 * 2^n doubles");
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[2 * i] = v[i].real();
      out[2 * i + 1] = v[i].imag();
    }
  });
}

void mb_result_free(mb_result* r) { delete r; }

mb_status mb_generate(int qubits, int depth, double peak_weight, int obfuscation_swaps, uint64_t seed,
                      mb_instance** out) {
  if (out) *out = nullptr;
  return guarded([&] {
    require(out, "out");
    GenerateParams p;
    p.qubits = qubits;
    p.depth = depth;
    p.peak_weight = peak_weight;
    p.obfuscation_swaps = obfuscation_swaps;
    p.seed = seed;
    *out = new mb_instance{generate(p)};
  });
}

const char* mb_instance_peak(const mb_instance* inst) { return inst ? inst->inst.peak.c_str() : ""; }

mb_status mb_instance_circuit(const mb_instance* inst, mb_circuit** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    *out = new mb_circuit{inst->inst.circuit};
  });
}

mb_status mb_instance_sidecar_json(const mb_instance* inst, char** out) {
  return guarded([&] {
    require(inst, "instance");
    require(out, "out");
    *out = dup_string(sidecar_json(inst->inst));
  });
}

mb_status mb_instance_write(const mb_instance* inst, const char* stem) {
  return guarded([&] {
    require(inst, "instance");
    require(stem, "stem");
    try {
      write_instance(inst->inst, stem);
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
  });
}

void mb_instance_free(mb_instance* inst) { delete inst; }

mb_status mb_oracle_probabilities(const mb_circuit* c, double* out, size_t len) {
  return guarded([&] {
    require(c, "circuit");
    require(out, "out");
    const std::vector<double> p = probabilities(simulate(c->circuit));
    if (len != p.size()) throw std::invalid_argument("probability buffer must hold 2^n doubles");
    std::copy(p.begin(), p.end(), out);
  });
}

mb_status mb_verify(const mb_circuit* c, const mb_config* cfg, size_t shots, uint64_t seed,
                    mb_verify_report* out) {
  return guarded([&] {
    require(c, "circuit");
    require(out, "out");
    const VerifyReport rep = verify_against_oracle(c->circuit, to_config(cfg), shots, seed);
    out->fidelity = rep.fidelity;
    out->tvd = rep.tvd;
    out->oracle_peak_probability = rep.oracle_peak_probability;
    out->peak_match = rep.peak_match ? 1 : 0;
    std::snprintf(out->method_peak, sizeof out->method_peak, "%s", rep.method_peak.c_str());
    std::snprintf(out->oracle_peak, sizeof out->oracle_peak, "%s", rep.oracle_peak.c_str());
  });
}

}  // extern "C"
