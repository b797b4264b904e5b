#pragma once

// The qbounds command line: experiment configs in, CSV and JSON reports out.
// Every output starts with the config digest and the seed.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbounds/advice_dfa.hpp"
#include "qbounds/dimensions.hpp"
#include "qbounds/harness.hpp"
#include "qbounds/io.hpp"
#include "qbounds/witnesses.hpp"

namespace qbounds {

enum ExitCode : int { exit_ok = 0, exit_validation = 1, exit_usage = 2 };

struct GenericSetting {
  std::size_t points = 3;
  std::size_t members = 4;  // drawn from all concepts on `points`, with the seed
};

struct CountingSetting {
  std::size_t n = 1;
  std::size_t k = 1;
};

struct WitnessTarget {
  std::string name;
  WitnessKind kind = WitnessKind::advice_classes;
  std::size_t n = 1;
  std::size_t k = 1;
  std::optional<LanguageTable> table;  // advice-classes
  std::string fixture;                 // nominal-dimension, nominal-orbits
  std::optional<WordTable> words;      // non-equivariance
};

struct ExperimentConfig {
  std::string setting;  // advice, nominal or generic
  std::uint64_t seed = 0;
  std::string digest;
  std::vector<AdviceSetting> advice;
  std::vector<NominalSetting> nominal;
  std::vector<GenericSetting> generic;
  std::vector<CountingSetting> counting;
  std::map<std::string, NominalDFA> fixtures;  // builtins plus files named in the config
  std::uint64_t class_budget = 10'000'000;
  std::size_t random_automata = 100;
  Learner learner = Learner::halving_eq_mq;
  std::size_t gate_constant = 4;
  std::string hypothesis = "double";  // advice H: double (2n states), same (H = C) or all
  std::vector<WitnessTarget> witnesses;
};

/// Relative fixture paths resolve against `base_dir`.
ExperimentConfig parse_config(const json& j, const std::filesystem::path& base_dir);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Only the builtin fixtures; used when no config is given.
ExperimentConfig default_config();

struct RunOptions {
  std::filesystem::path out = ".";
  std::size_t jobs = 1;
};

int cmd_dims(const ExperimentConfig& c, const RunOptions& o, std::ostream& log);
int cmd_learn(const ExperimentConfig& c, const RunOptions& o, std::ostream& log);
int cmd_witness(const ExperimentConfig& c, const RunOptions& o, std::ostream& log);
int cmd_enumerate(const ExperimentConfig& c, const RunOptions& o, std::ostream& log);
int cmd_verify_bounds(const ExperimentConfig& c, const RunOptions& o, std::ostream& log);
int cmd_fixtures(const ExperimentConfig& c, const RunOptions& o, std::ostream& log);

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbounds
