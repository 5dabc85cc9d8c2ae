// Command-line front end for the modlearn shared library. Flag parsing and
// file output live here; everything else goes through the C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "modlearn.h"

namespace {

struct Flags {
  std::string class_spec;
  std::string target;
  std::string mode;
  std::string construction;
  std::string format;
  std::string out;
  long long k = 2;
  long long r = 2;
  long long m = -1;
  long long trials = 0;
  long long budget = 1'000'000;
  double epsilon = 0.2;
  double delta = 0.2;
  double b = 4.0;
  unsigned long long seed = 0;
  bool withmem = false;
};

void add_common_flags(CLI::App* cmd, Flags* flags) {
  cmd->add_option("--class", flags->class_spec, "concept class spec");
  cmd->add_option("--target", flags->target, "target concept spec");
  cmd->add_option("--mode", flags->mode, "query mode");
  cmd->add_option("--construction", flags->construction,
                  "lower-bound construction (prefix, singleton, pos)");
  cmd->add_option("--k", flags->k, "number of components");
  cmd->add_option("--r", flags->r, "string-length-sum level");
  cmd->add_option("--m", flags->m, "construction-specific size parameter");
  cmd->add_option("--epsilon", flags->epsilon, "PAC accuracy");
  cmd->add_option("--delta", flags->delta, "PAC confidence");
  cmd->add_option("--b", flags->b, "sample-complexity constant");
  cmd->add_option("--seed", flags->seed, "RNG seed");
  cmd->add_option("--budget", flags->budget, "oracle-call budget");
  cmd->add_option("--trials", flags->trials, "number of randomized trials");
  cmd->add_option("--format", flags->format, "output format (json or csv)");
  cmd->add_option("--out", flags->out, "write the report to a file");
  cmd->add_flag("--withmem", flags->withmem, "PAC variant with membership queries");
}

int run(const std::string& command, const Flags& flags) {
  nlohmann::json config{{"command", command}};
  if (!flags.class_spec.empty()) config["class"] = flags.class_spec;
  if (!flags.target.empty()) config["target"] = flags.target;
  if (!flags.mode.empty()) config["mode"] = flags.mode;
  if (!flags.construction.empty()) config["construction"] = flags.construction;
  if (!flags.format.empty()) {
    config["format"] = flags.format;
  } else if (command == "table") {
    config["format"] = "csv";
  }
  config["k"] = flags.k;
  config["r"] = flags.r;
  config["m"] = flags.m;
  config["trials"] = flags.trials;
  config["budget"] = flags.budget;
  config["epsilon"] = flags.epsilon;
  config["delta"] = flags.delta;
  config["b"] = flags.b;
  config["withmem"] = flags.withmem;

  unsigned long long seed = flags.seed;
  if (const char* env = std::getenv("MODLEARN_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: MODLEARN_SEED is not a number\n";
      return 2;
    }
  }
  config["seed"] = seed;

  ml_experiment* exp = nullptr;
  ml_status status = ml_experiment_create(config.dump().c_str(), &exp);
  if (status != ML_OK) {
    std::cerr << "error: invalid configuration (status " << status << ")\n";
    return 2;
  }
  status = ml_experiment_run(exp);
  if (status != ML_OK) {
    std::cerr << "error: " << ml_experiment_error(exp) << "\n";
    ml_experiment_destroy(exp);
    return status == ML_ERR_CONFIG ? 2 : 1;
  }
  std::string output = ml_experiment_output(exp);
  int exit_code = ml_experiment_exit_code(exp);
  ml_experiment_destroy(exp);

  if (!flags.out.empty()) {
    std::ofstream file(flags.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot write " << flags.out << "\n";
      return 2;
    }
    file << output;
  } else {
    std::cout << output;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modlearn: query-based learning of cross-products and disjoint unions"};
  app.require_subcommand(1);

  Flags flags;
  const char* commands[] = {"learn", "lowerbound", "pac", "table"};
  const char* descriptions[] = {
      "run one learning session against the honest oracle",
      "run a lower-bound construction and print its certificate",
      "run seeded PAC trials and report exact errors",
      "reproduce the summary table of measured counts vs. bounds",
  };
  for (int i = 0; i < 4; ++i) {
    CLI::App* cmd = app.add_subcommand(commands[i], descriptions[i]);
    add_common_flags(cmd, &flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (int i = 0; i < 4; ++i) {
    if (app.got_subcommand(commands[i])) return run(commands[i], flags);
  }
  return 2;
}
