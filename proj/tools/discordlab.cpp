// Command-line driver: each subcommand writes one CSV table and prints a JSON
// summary on standard output.
//
// Exit codes: 0 ok, 1 property failure, 2 invalid configuration, 3 optimizer failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "discordlab/experiments.hpp"

namespace {

using discordlab::ExperimentConfig;

void add_common(CLI::App* sub, ExperimentConfig& cfg, std::uint64_t& seed) {
  sub->add_option("--seed", seed, "Base RNG seed");
  sub->add_option("--output,-o", cfg.output, "CSV output path (default <subcommand>.csv)");
  sub->add_option("--threads", cfg.threads, "Worker threads (default DISCORDLAB_THREADS or all cores)");
  sub->add_option("--multistarts", cfg.optimizer.multistarts, "Optimizer starting points");
  sub->add_option("--tol", cfg.optimizer.tol, "Simplex size at which refinement stops");
  sub->add_option("--max-iters", cfg.optimizer.max_iters, "Simplex iteration cap per start");
  sub->add_option("--grid-resolution", cfg.optimizer.grid_resolution, "Bloch-sphere pre-scan resolution");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-correlation measures: experiment drivers"};
  app.set_version_flag("--version", discordlab::kVersion);
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::uint64_t seed = 1;

  auto* dqc1 = app.add_subcommand("dqc1", "DQC1 output states: sweep over n at fixed mu, or over mu at fixed n");
  add_common(dqc1, cfg, seed);
  dqc1->add_option("--sweep", cfg.sweep, "n or mu")->check(CLI::IsMember({"n", "mu"}));
  dqc1->add_option("--mu", cfg.mu, "Ancilla polarization for the n sweep");
  dqc1->add_option("--n", cfg.n, "Register qubits for the mu sweep");
  dqc1->add_option("--n-min", cfg.n_min, "First register size");
  dqc1->add_option("--n-max", cfg.n_max, "Last register size");
  dqc1->add_option("--mu-steps", cfg.mu_steps, "Points in [0, 1] for the mu sweep");
  dqc1->add_option("--unitary", cfg.unitary, "traceless or laf2")->check(CLI::IsMember({"traceless", "laf2"}));

  auto* werner = app.add_subcommand("werner", "Werner states: sweep over lambda at fixed d, or over d at fixed lambda");
  add_common(werner, cfg, seed);
  werner->add_option("--sweep", cfg.sweep, "lambda or d")->check(CLI::IsMember({"lambda", "d"}));
  werner->add_option("--d", cfg.d, "Local dimension for the lambda sweep");
  werner->add_option("--lambda-steps", cfg.lambda_steps, "Points in [0, 1]");
  werner->add_option("--lambda", cfg.lambda, "Mixing parameter for the d sweep");
  werner->add_option("--d-min", cfg.d_min, "First dimension");
  werner->add_option("--d-max", cfg.d_max, "Last dimension");

  auto* hierarchy = app.add_subcommand("hierarchy", "Negativity bound on rescaled discord for random 2 x dB states");
  add_common(hierarchy, cfg, seed);
  hierarchy->add_option("--dB", cfg.dB, "Dimension of B");
  hierarchy->add_option("--samples", cfg.samples, "Number of random states (default 10000)");

  auto* scatter = app.add_subcommand("scatter2q", "Entropic vs rescaled discord for random two-qubit states");
  add_common(scatter, cfg, seed);
  scatter->add_option("--samples", cfg.samples, "Number of random states (default 1000)");

  auto* gaussian = app.add_subcommand("gaussian", "Gaussian rescaled discord of random two-mode covariances");
  add_common(gaussian, cfg, seed);
  gaussian->add_option("--samples", cfg.samples, "Number of covariances (default 1000)");

  auto* sts = app.add_subcommand("gaussian-sts", "Closed form vs numeric maximization on squeezed thermal states");
  add_common(sts, cfg, seed);
  sts->add_option("--samples", cfg.samples, "Number of covariances (default 200)");

  auto* qosc = app.add_subcommand("qubitosc", "Qubit-oscillator states over a (p, r) grid");
  add_common(qosc, cfg, seed);
  qosc->add_option("--beta", cfg.beta, "Displacement amplitude (real)");
  qosc->add_option("--nbar", cfg.nbar, "Thermal occupation of the oscillator");
  qosc->add_option("--p-steps", cfg.p_steps, "Points in p in [0, 1]");
  qosc->add_option("--r-steps", cfg.r_steps, "Points in r in [0, sqrt(p(1-p))]");
  qosc->add_option("--cutoff", cfg.cutoff, "Fock cutoff (0 picks the smallest adequate one)");

  auto* check = app.add_subcommand("check", "Run the seeded property suite");
  add_common(check, cfg, seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.seed = discordlab::RngSeed{seed};

  try {
    const auto start = std::chrono::steady_clock::now();
    const discordlab::ExperimentResult res = discordlab::run_experiment(cfg);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ofstream out(cfg.output_path(), std::ios::binary);
    if (!out) throw discordlab::InvalidArgument("cannot write " + cfg.output_path());
    out << res.table.str();
    out.close();
    if (!out) throw discordlab::InvalidArgument("failed writing " + cfg.output_path());

    nlohmann::json summary{{"version", discordlab::kVersion},
                           {"config", cfg.to_json()},
                           {"rows", res.table.rows.size()},
                           {"wall_time_s", wall}};
    if (!res.summary.is_null()) summary["summary"] = res.summary;
    std::cout << summary.dump(2) << "\n";
    return res.exit_code;
  } catch (const discordlab::InvalidArgument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const discordlab::OptimizerFailed& e) {
    std::cerr << "optimizer failure: " << e.what() << "\n";
    return 3;
  } catch (const discordlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
