#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsets/io.hpp"

namespace qsets::corpus {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First counterexample, or an informational witness on success.
  std::string witness;
};

struct CorpusSpec {
  /// Suites to run; empty means all of suite_names().
  std::vector<std::string> suites;
  std::size_t exhaustive_min_n = 4;
  std::size_t exhaustive_max_n = 5;
  std::uint64_t seed = 1;
  std::size_t random_cases = 200;
  std::size_t random_max_n = 12;
  std::size_t topology_samples = 100;
  bool timing = false;
};

struct RunReport {
  static constexpr std::string_view kFormat = "qsets-report/1";

  std::string command;
  std::vector<std::pair<std::string, std::string>> input_digests;
  std::vector<CheckResult> checks;
  /// Only filled when timing was requested; never part of determinism.
  std::optional<double> duration_ms;

  bool passed() const;
  /// 0 when every check passed, 1 otherwise.
  int exit_status() const { return passed() ? 0 : 1; }
  io::Json to_json() const;
  std::string serialize() const;
};

/// structure, oracle, correspondence, commutation, examples, arcs,
/// regular-open, quantum-topology.
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view name, const CorpusSpec& spec);
RunReport run_corpus(const CorpusSpec& spec, std::string command);

/// 64-bit FNV-1a as 16 hex digits.
std::string digest(std::string_view bytes);

// Individual suites.
std::vector<CheckResult> structure_suite(std::size_t min_n, std::size_t max_n);
std::vector<CheckResult> oracle_suite(std::uint64_t seed, std::size_t cases, std::size_t max_n);
std::vector<CheckResult> correspondence_suite(std::size_t max_n);
std::vector<CheckResult> commutation_suite(std::size_t max_n);
std::vector<CheckResult> examples_suite();
std::vector<CheckResult> arcs_suite();
std::vector<CheckResult> regular_open_suite(std::uint64_t seed, std::size_t samples);
std::vector<CheckResult> quantum_topology_suite();

/// Power-set filter {D : D = D^⊥⊥}, sorted lectically.
std::vector<ElementSet> brute_force_qsubsets(const QuantumSet& x);
/// Random quantum set with n ≤ max_n elements drawn from rng.
QuantumSet random_quantum_set(std::mt19937_64& rng, std::size_t max_n);

}  // namespace qsets::corpus
