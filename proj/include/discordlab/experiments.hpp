#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "discordlab/core.hpp"
#include "discordlab/optimize.hpp"

namespace discordlab {

inline constexpr const char* kVersion = "0.1.0";

/// Flags shared by all subcommands; each subcommand reads the ones it needs.
struct ExperimentConfig {
  std::string subcommand;
  std::string output;  // empty: "<subcommand>.csv"
  RngSeed seed{1};
  int threads = 0;     // 0: DISCORDLAB_THREADS or hardware concurrency

  std::string sweep;   // dqc1: "n" | "mu"; werner: "lambda" | "d"
  // dqc1
  double mu = 0.5;
  int n = 3;
  int n_min = 2;
  int n_max = 6;
  int mu_steps = 11;
  std::string unitary = "traceless";  // "traceless" | "laf2"
  // werner
  int d = 2;
  int d_min = 2;
  int d_max = 6;
  int lambda_steps = 51;
  double lambda = 1.0;
  // hierarchy, scatter2q, gaussian, gaussian-sts
  int dB = 2;
  int samples = 0;  // 0: subcommand default
  // qubitosc
  double beta = 3.0;
  double nbar = 2.0;
  int p_steps = 3;
  int r_steps = 3;
  int cutoff = 0;

  OptimizerConfig optimizer;

  std::string output_path() const { return output.empty() ? subcommand + ".csv" : output; }
  /// Throws InvalidArgument on out-of-range flags.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Header plus rows of preformatted cells (numbers at 12 significant digits).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const;
};

std::string format_number(double x);

struct ExperimentResult {
  CsvTable table;
  nlohmann::json summary;  // subcommand-specific fields
  int exit_code = 0;       // 1 when a property check failed
};

const std::vector<std::string>& experiment_names();

/// Runs one subcommand in memory. Throws InvalidArgument for bad
/// configurations and OptimizerFailed when an optimization does not converge.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Worker count from the config, the DISCORDLAB_THREADS variable, or the hardware.
int resolve_threads(int requested);

/// Runs body(i) for i in [0, count) on up to `threads` workers. The first
/// exception (by index) is rethrown after all workers finish.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

}  // namespace discordlab
