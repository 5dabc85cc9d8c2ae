#pragma once

#include <cstdint>
#include <string>

namespace modlearn {

// Exit statuses shared by the C API and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // bound violation or learning failure
inline constexpr int kExitConfig = 2;   // malformed configuration

struct ExperimentConfig {
  std::string command;  // learn | lowerbound | pac | table
  std::string class_spec;
  std::string target_spec;
  std::string mode;          // sup | sub | eq | mem | mem1pos | pos
  std::string construction;  // lowerbound: prefix | singleton | pos
  std::string format = "json";
  int k = 2;
  int r = 2;
  long long m = -1;  // -1 = command default
  long long trials = 0;  // 0 = command default
  long long budget = 1'000'000;
  double epsilon = 0.2;
  double delta = 0.2;
  double b = 4.0;
  uint64_t seed = 0;
  bool withmem = false;
};

struct Report {
  std::string text;
  int exit_code = kExitOk;
};

// Parses the JSON configuration accepted by the C API. Throws
// Error(Config) on malformed input.
ExperimentConfig config_from_json(const std::string& json_text);

// Runs one experiment. Configuration problems surface as exit_code 2 with a
// human-readable message; bound violations and learning failures as 1.
Report run_experiment(const ExperimentConfig& config);

}  // namespace modlearn
