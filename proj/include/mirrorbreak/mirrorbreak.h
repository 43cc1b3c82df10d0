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


/* C interface to the mirrorbreak contraction engine.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an mb_status; on failure mb_last_error()
 * returns a message valid until the next call on the same thread.
 * Strings returned through char** are released with mb_string_free.
 *
 * Bit order: bitstrings have qubit 0 as their first character; amplitude
 * and probability arrays are indexed with qubit 0 as the least significant
 * bit. */

#ifndef MIRRORBREAK_MIRRORBREAK_H_
#define MIRRORBREAK_MIRRORBREAK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MIRRORBREAK_BUILDING_DLL)
#define MB_API __declspec(dllexport)
#else
#define MB_API __declspec(dllimport)
#endif
#else
#define MB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mb_status {
  MB_OK = 0,
  MB_ERR_INVALID_ARGUMENT = 1, /* bad parameter or configuration */
  MB_ERR_GUARD = 2,            /* size guard exceeded */
  MB_ERR_PARSE = 3,            /* OpenQASM syntax or semantic error */
  MB_ERR_IO = 4,               /* file could not be read or written */
  MB_ERR_NUMERIC = 5,          /* SVD failure, collapsed norm */
  MB_ERR_STALL = 6,            /* contraction stalled */
  MB_ERR_INTERNAL = 7
} mb_status;

typedef enum mb_acceptance { MB_ACCEPT_STRICT = 0, MB_ACCEPT_RELAXED = 1 } mb_acceptance;
typedef enum mb_unswap_strategy { MB_UNSWAP_PARALLEL = 0, MB_UNSWAP_SEQUENTIAL = 1 } mb_unswap_strategy;

typedef struct mb_config {
  double epsilon;
  uint64_t chi_max;
  uint64_t tau;
  int max_unswap_iterations;
  mb_acceptance acceptance;
  mb_unswap_strategy unswap_strategy;
  int fixed_side_frequency; /* 0 = adaptive side selection */
  int stall_limit;
  int threads;
} mb_config;

typedef struct mb_verify_report {
  double fidelity;
  double tvd;
  double oracle_peak_probability;
  int peak_match;
  char method_peak[64];
  char oracle_peak[64];
} mb_verify_report;

typedef struct mb_circuit mb_circuit;
typedef struct mb_result mb_result;
typedef struct mb_instance mb_instance;

MB_API const char* mb_version(void);
MB_API const char* mb_last_error(void);
MB_API const char* mb_status_name(mb_status s);
MB_API void mb_string_free(char* s);

/* Defaults: epsilon 2e-3, chi_max 8192, tau 1e6, 20 unswap iterations,
 * strict acceptance, parity-parallel unswapping, adaptive sides,
 * stall limit 3, one thread. */
MB_API void mb_config_default(mb_config* cfg);

MB_API mb_status mb_circuit_parse(const char* qasm, mb_circuit** out);
MB_API mb_status mb_circuit_load(const char* path, mb_circuit** out);
MB_API mb_status mb_circuit_to_qasm(const mb_circuit* c, char** out);
MB_API int mb_circuit_num_qubits(const mb_circuit* c);
MB_API size_t mb_circuit_num_gates(const mb_circuit* c);
MB_API size_t mb_circuit_two_qubit_count(const mb_circuit* c);
MB_API void mb_circuit_free(mb_circuit* c);

/* Runs the contraction. On MB_ERR_STALL *out still receives a result whose
 * trace is available but which holds no state (mb_result_completed == 0). */
MB_API mb_status mb_run(const mb_circuit* c, const mb_config* cfg, mb_result** out);
MB_API int mb_result_completed(const mb_result* r);
MB_API int mb_result_num_qubits(const mb_result* r);
MB_API size_t mb_result_unitaries_consumed(const mb_result* r);
MB_API size_t mb_result_final_max_bond(const mb_result* r);
MB_API size_t mb_result_final_elements(const mb_result* r);
/* Newline-separated bitstrings. */
MB_API mb_status mb_result_sample(const mb_result* r, size_t shots, uint64_t seed, char** out);
/* "bitstring,count\n" rows sorted by count descending, then bitstring. */
MB_API mb_status mb_result_histogram_csv(const mb_result* r, size_t shots, uint64_t seed, char** out);
MB_API mb_status mb_result_trace_ndjson(const mb_result* r, char** out);
MB_API mb_status mb_result_write_trace(const mb_result* r, const char* path);
/* Interleaved (re, im) pairs, 2 * 2^n doubles; n <= 12. */
MB_API mb_status mb_result_statevector(const mb_result* r, double* out, size_t len);
MB_API void mb_result_free(mb_result* r);

MB_API mb_status mb_generate(int qubits, int depth, double peak_weight, int obfuscation_swaps,
                             uint64_t seed, mb_instance** out);
MB_API const char* mb_instance_peak(const mb_instance* inst);
MB_API mb_status mb_instance_circuit(const mb_instance* inst, mb_circuit** out);
MB_API mb_status mb_instance_sidecar_json(const mb_instance* inst, char** out);
/* Writes <stem>.qasm and <stem>.json. */
MB_API mb_status mb_instance_write(const mb_instance* inst, const char* stem);
MB_API void mb_instance_free(mb_instance* inst);

/* Statevector oracle, 2^n probabilities; n <= 24. */
MB_API mb_status mb_oracle_probabilities(const mb_circuit* c, double* out, size_t len);
MB_API mb_status mb_verify(const mb_circuit* c, const mb_config* cfg, size_t shots, uint64_t seed,
                           mb_verify_report* out);

#ifdef __cplusplus
}
#endif

#endif /* MIRRORBREAK_MIRRORBREAK_H_ */
