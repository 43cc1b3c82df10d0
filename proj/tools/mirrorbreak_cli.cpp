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


// Command-line frontend. Talks to the engine only through the C API.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "mirrorbreak/mirrorbreak.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStall = 3;
constexpr int kExitIo = 4;

constexpr const char* kBitOrder =
    "Bit order: every printed bitstring lists qubit 0 first (leftmost);\n"
    "as an integer index, qubit 0 is the least significant bit.";

int exit_code(mb_status s) {
  switch (s) {
    case MB_OK: return kExitOk;
    case MB_ERR_INVALID_ARGUMENT:
    case MB_ERR_GUARD: return kExitUsage;
    case MB_ERR_STALL: return kExitStall;
    case MB_ERR_IO: return kExitIo;
    default: return kExitFailure;
  }
}

int report(mb_status s, const char* context) {
  std::cerr << "mirrorbreak " << context << ": " << mb_status_name(s) << ": " << mb_last_error() << "\n";
  return exit_code(s);
}

struct StringDeleter {
  void operator()(char* p) const { mb_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct CircuitDeleter {
  void operator()(mb_circuit* p) const { mb_circuit_free(p); }
};
struct ResultDeleter {
  void operator()(mb_result* p) const { mb_result_free(p); }
};
struct InstanceDeleter {
  void operator()(mb_instance* p) const { mb_instance_free(p); }
};

struct ContractionFlags {
  double epsilon;
  uint64_t chi_max;
  double tau;
  int max_unswap_iters;
  std::string acceptance = "strict";
  std::string side = "adaptive";
  std::string strategy = "parallel";
  int stall_limit;

  ContractionFlags() {
    mb_config d;
    mb_config_default(&d);
    epsilon = d.epsilon;
    chi_max = d.chi_max;
    tau = static_cast<double>(d.tau);
    max_unswap_iters = d.max_unswap_iterations;
    stall_limit = d.stall_limit;
  }

  void add_to(CLI::App* app) {
    app->add_option("--epsilon", epsilon, "SVD cutoff on the relative discarded weight")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app->add_option("--chi-max", chi_max, "Bond dimension ceiling")->capture_default_str()->check(CLI::PositiveNumber);
    app->add_option("--tau", tau, "MPO element threshold that triggers unswapping")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app->add_option("--max-unswap-iters", max_unswap_iters, "Maximum unswapping passes per call")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app->add_option("--acceptance", acceptance, "Swap acceptance rule")
        ->capture_default_str()
        ->check(CLI::IsMember({"strict", "relaxed"}));
    app->add_option("--side", side, "Side selection: adaptive or fixed:<k>")->capture_default_str();
    app->add_option("--unswap-strategy", strategy, "Unswap candidate schedule")
        ->capture_default_str()
        ->check(CLI::IsMember({"parallel", "sequential"}));
    app->add_option("--stall-limit", stall_limit, "Consecutive unproductive unswap calls before giving up")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  }

  // Returns false with a message on an invalid --side value.
  bool to_config(mb_config* cfg, std::string* err) const {
    mb_config_default(cfg);
    cfg->epsilon = epsilon;
    cfg->chi_max = chi_max;
    cfg->tau = static_cast<uint64_t>(tau);
    cfg->max_unswap_iterations = max_unswap_iters;
    cfg->acceptance = acceptance == "relaxed" ? MB_ACCEPT_RELAXED : MB_ACCEPT_STRICT;
    cfg->unswap_strategy = strategy == "sequential" ? MB_UNSWAP_SEQUENTIAL : MB_UNSWAP_PARALLEL;
    cfg->stall_limit = stall_limit;
    if (side == "adaptive") {
      cfg->fixed_side_frequency = 0;
    } else if (side.rfind("fixed:", 0) == 0) {
      try {
        std::size_t used = 0;
        const int k = std::stoi(side.substr(6), &used);
        if (used != side.size() - 6 || k < 1) throw std::invalid_argument("k");
        cfg->fixed_side_frequency = k;
      } catch (const std::exception&) {
        *err = "--side fixed:<k> needs a positive integer k, got '" + side + "'";
        return false;
      }
    } else {
      *err = "--side must be 'adaptive' or 'fixed:<k>', got '" + side + "'";
      return false;
    }
    if (const char* env = std::getenv("MIRRORBREAK_THREADS")) {
      const int t = std::atoi(env);
      if (t >= 1) cfg->threads = t;
    }
    return true;
  }
};

int load_circuit(const std::string& path, std::unique_ptr<mb_circuit, CircuitDeleter>* out) {
  mb_circuit* c = nullptr;
  const mb_status s = mb_circuit_load(path.c_str(), &c);
  if (s != MB_OK) return report(s, "load");
  out->reset(c);
  return kExitOk;
}

int write_text(const std::string& path, const std::string& text) {
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) {
    std::cerr << "mirrorbreak: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  if (std::fclose(f) != 0 || !ok) {
    std::cerr << "mirrorbreak: write to '" << path << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

struct GenerateArgs {
  int qubits = 0;
  int depth = 0;
  double peak_weight = 0.1;
  int obf_swaps = 0;
  uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  mb_instance* raw = nullptr;
  mb_status s = mb_generate(a.qubits, a.depth, a.peak_weight, a.obf_swaps, a.seed, &raw);
  if (s != MB_OK) return report(s, "generate");
  std::unique_ptr<mb_instance, InstanceDeleter> inst(raw);
  s = mb_instance_write(inst.get(), a.out.c_str());
  if (s != MB_OK) return report(s, "generate");
  std::cout << "wrote " << a.out << ".qasm and " << a.out << ".json (peak " << mb_instance_peak(inst.get())
            << ")\n";
  return kExitOk;
}

struct RunArgs {
  std::string circuit;
  ContractionFlags flags;
  std::size_t shots = 1000;
  uint64_t seed = 0;
  std::string trace;
  std::string hist;
};

int cmd_run(const RunArgs& a) {
  mb_config cfg;
  std::string err;
  if (!a.flags.to_config(&cfg, &err)) {
    std::cerr << "mirrorbreak run: " << err << "\n";
    return kExitUsage;
  }
  std::unique_ptr<mb_circuit, CircuitDeleter> circuit;
  if (int rc = load_circuit(a.circuit, &circuit)) return rc;

  mb_result* raw = nullptr;
  const mb_status s = mb_run(circuit.get(), &cfg, &raw);
  const std::string run_error = mb_last_error();
  std::unique_ptr<mb_result, ResultDeleter> result(raw);
  if (result && !a.trace.empty()) {
    const mb_status ts = mb_result_write_trace(result.get(), a.trace.c_str());
    if (ts != MB_OK) return report(ts, "run");
  }
  if (s != MB_OK) {
    std::cerr << "mirrorbreak run: " << mb_status_name(s) << ": " << run_error << "\n";
    return exit_code(s);
  }

  char* csv_raw = nullptr;
  const mb_status hs = mb_result_histogram_csv(result.get(), a.shots, a.seed, &csv_raw);
  if (hs != MB_OK) return report(hs, "run");
  const OwnedString csv(csv_raw);
  const std::string text(csv.get());
  if (!a.hist.empty()) {
    if (int rc = write_text(a.hist, text)) return rc;
  }
  const std::size_t row = text.find('\n') + 1;
  const std::size_t comma = text.find(',', row);
  const std::size_t end = text.find('\n', row);
  if (comma != std::string::npos && end != std::string::npos) {
    const std::string top = text.substr(row, comma - row);
    const double count = std::stod(text.substr(comma + 1, end - comma - 1));
    std::printf("top %s %.4f (%zu shots)\n", top.c_str(), count / static_cast<double>(a.shots), a.shots);
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string circuit;
  std::string against;
  ContractionFlags flags;
  std::size_t shots = 10000;
  uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a) {
  mb_config cfg;
  std::string err;
  if (!a.flags.to_config(&cfg, &err)) {
    std::cerr << "mirrorbreak verify: " << err << "\n";
    return kExitUsage;
  }
  std::unique_ptr<mb_circuit, CircuitDeleter> circuit;
  if (int rc = load_circuit(a.circuit, &circuit)) return rc;
  mb_verify_report rep;
  const mb_status s = mb_verify(circuit.get(), &cfg, a.shots, a.seed, &rep);
  if (s != MB_OK) return report(s, "verify");
  std::printf("fidelity %.12f\n", rep.fidelity);
  std::printf("tvd %.6f (%zu shots)\n", rep.tvd, a.shots);
  std::printf("method_peak %s\n", rep.method_peak);
  std::printf("oracle_peak %s %.6f\n", rep.oracle_peak, rep.oracle_peak_probability);
  std::printf("peak_match %s\n", rep.peak_match ? "true" : "false");
  return rep.peak_match ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mirrorbreak: simulate mirrored peaked circuits by MPO cancellation with unswapping"};
  app.footer(kBitOrder);
  app.require_subcommand(1);
  app.set_version_flag("--version", mb_version());

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a peaked mirror instance (<out>.qasm + <out>.json)");
  g->add_option("--qubits", gen.qubits, "Number of qubits (>= 2)")->required();
  g->add_option("--depth", gen.depth, "Two-qubit gate budget (>= qubits)")->required();
  g->add_option("--peak-weight", gen.peak_weight, "Planted peak probability in (2^-n, 1]")->capture_default_str();
  g->add_option("--obf-swaps", gen.obf_swaps, "Obfuscation SWAP count")->capture_default_str();
  g->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  g->add_option("--out", gen.out, "Output path stem")->required();
  g->footer(kBitOrder);

  RunArgs run;
  auto* r = app.add_subcommand("run", "Contract a circuit and sample its output");
  r->add_option("--circuit", run.circuit, "OpenQASM 2.0 input")->required();
  run.flags.add_to(r);
  r->add_option("--shots", run.shots, "Number of samples")->capture_default_str()->check(CLI::PositiveNumber);
  r->add_option("--seed", run.seed, "Sampling seed")->capture_default_str();
  r->add_option("--trace", run.trace, "ND-JSON trace output");
  r->add_option("--hist", run.hist, "Histogram CSV output (bitstring,count)");
  r->footer(std::string(kBitOrder) +
            "\nExit codes: 0 success, 1 parse or numerical failure, 2 usage, 3 stall, 4 I/O."
            "\nMIRRORBREAK_THREADS caps internal parallelism.");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Compare a contraction with the statevector oracle (n <= 12)");
  v->add_option("--circuit", ver.circuit, "OpenQASM 2.0 input")->required();
  v->add_option("--against", ver.against, "Reference to compare with")->required()->check(CLI::IsMember({"oracle"}));
  ver.flags.add_to(v);
  v->add_option("--shots", ver.shots, "Samples for the TVD estimate")->capture_default_str();
  v->add_option("--seed", ver.seed, "Sampling seed")->capture_default_str();
  v->footer(std::string(kBitOrder) + "\nExit code 0 iff the peak bitstring matches the oracle.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*g) return cmd_generate(gen);
  if (*r) return cmd_run(run);
  return cmd_verify(ver);
}
