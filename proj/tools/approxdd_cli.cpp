// Copyright 2026 The approxdd Authors
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

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "approxdd/errors.hpp"
#include "approxdd/generators.hpp"
#include "approxdd/ops.hpp"
#include "approxdd/oracle.hpp"
#include "approxdd/qasm.hpp"
#include "approxdd/report.hpp"
#include "approxdd/state.hpp"
#include "approxdd/strategies.hpp"

namespace {

using namespace approxdd;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr std::size_t kMaxVerifyQubits = 12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::vector<std::string> gen;
  bool inverse = false;
  std::string mode = "exact";
  std::optional<std::string> threshold;
  std::optional<double> f_round;
  std::optional<double> f_final;
  std::optional<std::string> placement;
  std::uint64_t seed = 0;
  bool verify = false;
  std::string stats_path;
  bool dump_amplitudes = false;
  bool csv = false;
};

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

// Accepts 500, 1e6 and 10^6.
std::size_t parse_threshold(const std::string& text) {
  double value = 0.0;
  if (const auto caret = text.find('^'); caret != std::string::npos) {
    const auto base = static_cast<double>(parse_unsigned(text.substr(0, caret), "--threshold"));
    const auto exp = static_cast<double>(parse_unsigned(text.substr(caret + 1), "--threshold"));
    value = std::pow(base, exp);
  } else {
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      throw UsageError("--threshold must be a node count such as 500, 1e6 or 10^6, got '" +
                       text + "'");
    }
  }
  if (!(value >= 1.0) || value != std::floor(value) || value > 1e18) {
    throw UsageError("--threshold must be a whole number of nodes >= 1, got '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

struct Source {
  Circuit circuit;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> warnings;
};

Source load_circuit(const Options& opt) {
  Source src;
  if (!opt.file.empty() && !opt.gen.empty()) {
    throw UsageError("give either a QASM file or --gen, not both");
  }
  if (opt.file.empty() && opt.gen.empty()) {
    throw UsageError("a QASM file or --gen is required");
  }
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) {
      throw ParseError("cannot read '" + opt.file + "'", 0, 0);
    }
    std::ostringstream text;
    text << in.rdbuf();
    src.circuit = parse_qasm(text.str(), &src.warnings);
    src.circuit.set_name(std::filesystem::path(opt.file).stem().string());
    return src;
  }
  const std::string& kind = opt.gen[0];
  const auto arity = [&](std::size_t n, const char* usage) {
    if (opt.gen.size() != n + 1) {
      throw UsageError(std::string("usage: --gen ") + usage);
    }
  };
  const auto arg = [&](std::size_t i) { return parse_unsigned(opt.gen[i], "--gen " + kind); };
  if (opt.inverse && kind != "qft") {
    throw UsageError("--inverse only applies to --gen qft");
  }
  if (kind == "ghz") {
    arity(1, "ghz N");
    src.circuit = gen_ghz(arg(1));
  } else if (kind == "qft") {
    arity(1, "qft N [--inverse]");
    src.circuit = gen_qft(arg(1), opt.inverse);
  } else if (kind == "supremacy") {
    arity(3, "supremacy ROWS COLS DEPTH");
    src.circuit = gen_supremacy(arg(1), arg(2), arg(3), opt.seed);
    src.seed = opt.seed;
  } else if (kind == "shor") {
    arity(2, "shor N A");
    src.circuit = gen_shor_period(arg(1), arg(2));
  } else if (kind == "random") {
    arity(2, "random QUBITS GATES");
    src.circuit = gen_random(arg(1), arg(2), opt.seed);
    src.seed = opt.seed;
  } else {
    throw UsageError("unknown generator '" + kind +
                     "' (expected ghz, qft, supremacy, shor or random)");
  }
  return src;
}

void check_mode_flags(const Options& opt) {
  const bool memory = opt.mode == "memory";
  const bool fidelity = opt.mode == "fidelity";
  if (opt.threshold && !memory) {
    throw UsageError("--threshold only applies to --mode memory");
  }
  if ((opt.f_final || opt.placement) && !fidelity) {
    throw UsageError("--f-final and --placement only apply to --mode fidelity");
  }
  if (opt.f_round && !memory && !fidelity) {
    throw UsageError("--f-round only applies to --mode memory or fidelity");
  }
  if (memory && (!opt.threshold || !opt.f_round)) {
    throw UsageError("--mode memory needs --threshold and --f-round");
  }
  if (fidelity && (!opt.f_final || !opt.f_round)) {
    throw UsageError("--mode fidelity needs --f-final and --f-round");
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << text)) {
    throw ResourceError("cannot write '" + path + "'");
  }
}

int simulate(const Options& opt) {
  check_mode_flags(opt);
  Source src = load_circuit(opt);
  const Circuit& circuit = src.circuit;

  RunReport report;
  report.benchmark = circuit.name().empty() ? "circuit" : circuit.name();
  report.qubits = circuit.num_qubits();
  report.gates = circuit.size();
  report.mode = opt.mode;
  report.seed = src.seed;

  MemoryDrivenConfig memory_cfg;
  FidelityDrivenConfig fidelity_cfg;
  if (opt.mode == "memory") {
    memory_cfg.initial_threshold = parse_threshold(*opt.threshold);
    memory_cfg.f_round = *opt.f_round;
    report.threshold = memory_cfg.initial_threshold;
    report.f_round = memory_cfg.f_round;
  } else if (opt.mode == "fidelity") {
    fidelity_cfg.f_final = *opt.f_final;
    fidelity_cfg.f_round = *opt.f_round;
    const std::string placement =
        opt.placement.value_or(circuit.markers().empty() ? "even" : "markers");
    fidelity_cfg.placement = placement == "markers" ? Placement::kMarkers : Placement::kEven;
    report.f_final = fidelity_cfg.f_final;
    report.f_round = fidelity_cfg.f_round;
    report.placement = placement;
    report.planned_rounds = plan_rounds(circuit, fidelity_cfg).rounds();
  }

  Package package(PackageConfig::from_environment());
  SimulationResult result;
  try {
    if (opt.mode == "memory") {
      result = simulate_memory_driven(package, circuit, memory_cfg);
    } else if (opt.mode == "fidelity") {
      result = simulate_fidelity_driven(package, circuit, fidelity_cfg);
    } else {
      result = simulate_exact(package, circuit);
    }
  } catch (const SimulationAborted& e) {
    report.stats = e.stats();
    report.stats.warnings.insert(report.stats.warnings.begin(), src.warnings.begin(),
                                 src.warnings.end());
    report.stats.warnings.push_back(std::string("aborted: ") + e.what());
    if (!opt.stats_path.empty() && opt.stats_path != "-") {
      emit(opt.stats_path, report_to_json(report));
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  report.stats = std::move(result.stats);
  report.stats.warnings.insert(report.stats.warnings.begin(), src.warnings.begin(),
                               src.warnings.end());

  if (opt.verify) {
    if (circuit.num_qubits() <= kMaxVerifyQubits) {
      const DenseState exact = dense_simulate(circuit);
      const std::vector<Complex> approx = to_dense(result.state);
      report.oracle_fidelity = dense_fidelity(exact, approx);
    } else {
      report.stats.warnings.push_back("--verify skipped: more than " +
                                      std::to_string(kMaxVerifyQubits) + " qubits");
    }
  }
  if (opt.dump_amplitudes) {
    if (circuit.num_qubits() <= kMaxDenseQubits) {
      report.amplitudes = nonzero_amplitudes(result.state);
    } else {
      report.stats.warnings.push_back("--dump-amplitudes skipped: more than " +
                                      std::to_string(kMaxDenseQubits) + " qubits");
    }
  }

  if (opt.csv) {
    std::cout << csv_row(report) << "\n";
    if (!opt.stats_path.empty()) {
      emit(opt.stats_path, report_to_json(report));
    }
  } else {
    emit(opt.stats_path, report_to_json(report));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximating decision-diagram quantum circuit simulator"};
  app.require_subcommand(1);
  Options opt;
  CLI::App* sim = app.add_subcommand("simulate", "Simulate a circuit and report statistics");
  sim->add_option("file", opt.file, "OpenQASM 2.0 input file");
  sim->add_option("--gen", opt.gen,
                  "Generated benchmark: ghz N | qft N | supremacy R C D | shor N A | "
                  "random QUBITS GATES")
      ->expected(1, 4);
  sim->add_flag("--inverse", opt.inverse, "Inverse QFT for --gen qft");
  sim->add_option("--mode", opt.mode, "exact, memory or fidelity")
      ->check(CLI::IsMember({"exact", "memory", "fidelity"}));
  sim->add_option("--threshold", opt.threshold, "Initial node-count threshold (memory mode)");
  sim->add_option("--f-round", opt.f_round, "Fidelity kept per approximation round");
  sim->add_option("--f-final", opt.f_final, "Required final fidelity (fidelity mode)");
  sim->add_option("--placement", opt.placement, "markers or even (fidelity mode)")
      ->check(CLI::IsMember({"markers", "even"}));
  sim->add_option("--seed", opt.seed, "Seed for the supremacy and random generators");
  sim->add_flag("--verify", opt.verify, "Compare against the dense oracle (up to 12 qubits)");
  sim->add_option("--stats", opt.stats_path, "Stats JSON path (default: stdout)");
  sim->add_flag("--dump-amplitudes", opt.dump_amplitudes,
                "Include nonzero amplitudes in the stats (up to 20 qubits)");
  sim->add_flag("--csv", opt.csv, "Print one CSV row in place of the JSON on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return simulate(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
}
