#include "discordlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "discordlab/factories.hpp"
#include "discordlab/gaussian.hpp"
#include "discordlab/measures.hpp"
#include "discordlab/state.hpp"

namespace discordlab {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (x == 0.0) return "0";  // avoids "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string CsvTable::str() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << cells[k];
    os << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"dqc1",     "werner",       "hierarchy", "scatter2q",
                                              "gaussian", "gaussian-sts", "qubitosc",  "check"};
  return names;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DISCORDLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (count <= 0) return;
  const int workers = std::clamp(threads, 1, count);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace {

int default_samples(const std::string& sub) {
  if (sub == "hierarchy") return 10000;
  if (sub == "gaussian-sts") return 200;
  return 1000;
}

int samples_of(const ExperimentConfig& cfg) {
  return cfg.samples > 0 ? cfg.samples : default_samples(cfg.subcommand);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidArgument(msg);
}

}  // namespace

void ExperimentConfig::validate() const {
  const auto& names = experiment_names();
  require(std::find(names.begin(), names.end(), subcommand) != names.end(), "unknown subcommand: " + subcommand);
  require(samples >= 0, "--samples must be >= 1");
  require(threads >= 0, "--threads must be >= 0");
  optimizer.validate();
  if (subcommand == "dqc1") {
    require(sweep == "n" || sweep == "mu" || sweep.empty(), "dqc1: --sweep must be n or mu");
    require(mu >= 0.0 && mu <= 1.0, "dqc1: --mu must lie in [0, 1]");
    require(unitary == "traceless" || unitary == "laf2", "dqc1: --unitary must be traceless or laf2");
    if (sweep == "mu") {
      require(mu_steps >= 2, "dqc1: --mu-steps must be >= 2");
      require(n >= 1 && n <= 8, "dqc1: --n must lie in [1, 8]");
      require(unitary == "laf2" ? n == 3 : n >= 2, "dqc1: laf2 needs n = 3, traceless needs n >= 2");
    } else {
      require(n_min >= 2 && n_max <= 8 && n_min < n_max, "dqc1: need 2 <= n-min < n-max <= 8");
      require(unitary == "traceless", "dqc1: the n sweep needs --unitary traceless");
    }
  } else if (subcommand == "werner") {
    require(sweep == "lambda" || sweep == "d" || sweep.empty(), "werner: --sweep must be lambda or d");
    if (sweep == "d") {
      require(d_min >= 2 && d_max <= 16 && d_min < d_max, "werner: need 2 <= d-min < d-max <= 16");
      require(lambda >= 0.0 && lambda <= 1.0, "werner: --lambda must lie in [0, 1]");
    } else {
      require(d >= 2 && d <= 16, "werner: --d must lie in [2, 16]");
      require(lambda_steps >= 2, "werner: --lambda-steps must be >= 2");
    }
  } else if (subcommand == "hierarchy") {
    require(dB >= 2 && dB <= 16, "hierarchy: --dB must lie in [2, 16]");
  } else if (subcommand == "qubitosc") {
    require(p_steps >= 2 && r_steps >= 2, "qubitosc: --p-steps and --r-steps must be >= 2");
    require(nbar >= 0.0 && beta >= 0.0, "qubitosc: --nbar and --beta must be >= 0");
    require(cutoff >= 0, "qubitosc: --cutoff must be >= 0");
  }
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j{{"subcommand", subcommand}, {"output", output_path()}, {"seed", seed.value}};
  j["optimizer"] = {{"multistarts", optimizer.multistarts},
                    {"tol", optimizer.tol},
                    {"max_iters", optimizer.max_iters},
                    {"grid_resolution", optimizer.grid_resolution}};
  if (subcommand == "dqc1") {
    j.update({{"sweep", sweep.empty() ? "n" : sweep}, {"mu", mu}, {"n", n}, {"n_min", n_min},
              {"n_max", n_max}, {"mu_steps", mu_steps}, {"unitary", unitary}});
  } else if (subcommand == "werner") {
    j.update({{"sweep", sweep.empty() ? "lambda" : sweep}, {"d", d}, {"d_min", d_min}, {"d_max", d_max},
              {"lambda_steps", lambda_steps}, {"lambda", lambda}});
  } else if (subcommand == "hierarchy") {
    j.update({{"dB", dB}, {"samples", samples_of(*this)}});
  } else if (subcommand == "qubitosc") {
    j.update({{"beta", beta}, {"nbar", nbar}, {"p_steps", p_steps}, {"r_steps", r_steps}, {"cutoff", cutoff}});
  } else if (subcommand != "check") {
    j["samples"] = samples_of(*this);
  }
  return j;
}

namespace {

using Row = std::vector<std::string>;

std::vector<Row> run_rows(int count, const ExperimentConfig& cfg, const std::function<Row(int)>& fn) {
  std::vector<Row> rows(static_cast<std::size_t>(count));
  parallel_for(count, resolve_threads(cfg.threads), [&](int i) { rows[static_cast<std::size_t>(i)] = fn(i); });
  return rows;
}

Row numbers(std::initializer_list<double> xs) {
  Row r;
  for (double x : xs) r.push_back(format_number(x));
  return r;
}

// ---------------------------------------------------------------------------

ExperimentResult run_dqc1(const ExperimentConfig& cfg) {
  struct Point {
    double mu;
    int n;
  };
  std::vector<Point> points;
  if (cfg.sweep == "mu") {
    for (int k = 0; k < cfg.mu_steps; ++k) points.push_back({static_cast<double>(k) / (cfg.mu_steps - 1), cfg.n});
  } else {
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) points.push_back({cfg.mu, n});
  }
  ExperimentResult res;
  res.table.header = {"mu", "n", "D_entropic_exact", "D_entropic_approx", "D_G", "D_adj", "D_T"};
  res.table.rows = run_rows(static_cast<int>(points.size()), cfg, [&](int i) {
    const Point pt = points[static_cast<std::size_t>(i)];
    Dqc1Config dc;
    dc.mu = pt.mu;
    dc.n = pt.n;
    // One unitary per register size, shared across the mu sweep.
    if (cfg.unitary == "traceless") dc.unitary = TracelessRandom{derive_seed(cfg.seed, static_cast<std::uint64_t>(pt.n))};
    const DensityMatrix rho = dqc1_output_state(dc);
    const double ent = entropic_discord(rho, cfg.optimizer).value;
    const double approx = pt.mu > 0.0 ? dqc1_entropic_approx(pt.mu) : std::nan("");
    const double dG = geometric_discord_2xd(rho).value;
    return numbers({pt.mu, static_cast<double>(pt.n), ent, approx, dG, adjusted_discord(rho, dG),
                    rescaled_discord(rho, dG)});
  });
  return res;
}

std::vector<double> werner_lambdas(int d, int steps) {
  std::vector<double> ls;
  for (int k = 0; k < steps; ++k) ls.push_back(static_cast<double>(k) / (steps - 1));
  // Always include the maximally mixed point (d-1)/(2d).
  const double star = (d - 1.0) / (2.0 * d);
  if (std::none_of(ls.begin(), ls.end(), [&](double l) { return std::abs(l - star) < 1e-12; })) {
    ls.push_back(star);
    std::sort(ls.begin(), ls.end());
  }
  return ls;
}

Row werner_row(double lambda, int d, const OptimizerConfig& opt) {
  const DensityMatrix rho = werner_state(lambda, d);
  double ent = 0.0;
  double dG = 0.0;
  if (d == 2) {
    ent = entropic_discord(rho, opt).value;
    dG = geometric_discord_2xd(rho).value;
  } else if (d <= 4) {
    ent = entropic_discord(rho, opt).value;
    dG = geometric_discord_numeric(rho, opt).value;
  } else {
    // U⊗U symmetry makes every local basis optimal.
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    ent = entropic_discord_in_basis(rho, id);
    dG = geometric_discord_in_basis(rho, id);
  }
  return numbers({lambda, static_cast<double>(d), ent, dG, adjusted_discord(rho, dG), rescaled_discord(rho, dG)});
}

ExperimentResult run_werner(const ExperimentConfig& cfg) {
  ExperimentResult res;
  res.table.header = {"lambda", "d", "D_entropic", "D_G", "D_adj", "D_T"};
  if (cfg.sweep == "d") {
    res.table.rows = run_rows(cfg.d_max - cfg.d_min + 1, cfg,
                              [&](int i) { return werner_row(cfg.lambda, cfg.d_min + i, cfg.optimizer); });
  } else {
    const auto ls = werner_lambdas(cfg.d, cfg.lambda_steps);
    res.table.rows = run_rows(static_cast<int>(ls.size()), cfg,
                              [&](int i) { return werner_row(ls[static_cast<std::size_t>(i)], cfg.d, cfg.optimizer); });
  }
  return res;
}

DensityMatrix sample_state(Dims dims, RngSeed seed) {
  Rng rng(seed);
  const int rank = rng.uniform_int(1, dims.total());
  return random_state(dims, rank, rng);
}

ExperimentResult run_hierarchy(const ExperimentConfig& cfg) {
  const int samples = samples_of(cfg);
  ExperimentResult res;
  res.table.header = {"negativity", "D_T", "bound", "gap"};
  std::vector<double> gaps(static_cast<std::size_t>(samples));
  res.table.rows = run_rows(samples, cfg, [&](int i) {
    const HierarchyGap g = hierarchy_gap(sample_state(Dims{2, cfg.dB}, derive_seed(cfg.seed, static_cast<std::uint64_t>(i))));
    gaps[static_cast<std::size_t>(i)] = g.gap;
    return numbers({g.n, g.dT, g.bound, g.gap});
  });
  const long violations = std::count_if(gaps.begin(), gaps.end(), [](double g) { return g < -1e-9; });
  res.summary = {{"min_gap", *std::min_element(gaps.begin(), gaps.end())}, {"violations", violations},
                 {"violation_threshold", -1e-9}};
  return res;
}

ExperimentResult run_scatter2q(const ExperimentConfig& cfg) {
  ExperimentResult res;
  res.table.header = {"D_entropic", "D_G", "D_T"};
  res.table.rows = run_rows(samples_of(cfg), cfg, [&](int i) {
    const DensityMatrix rho = sample_state(Dims{2, 2}, derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    const double dG = geometric_discord_2xd(rho).value;
    return numbers({entropic_discord(rho, cfg.optimizer).value, dG, rescaled_discord(rho, dG)});
  });
  return res;
}

ExperimentResult run_gaussian(const ExperimentConfig& cfg) {
  ExperimentResult res;
  res.table.header = {"a", "b", "c", "d", "purity", "D_T_gaussian"};
  res.table.rows = run_rows(samples_of(cfg), cfg, [&](int i) {
    const TwoModeCovariance s = random_covariance(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    return numbers({s.a(), s.b(), s.c(), s.d(), gaussian_purity(s), gaussian_rescaled_discord(s, cfg.optimizer).value});
  });
  return res;
}

ExperimentResult run_gaussian_sts(const ExperimentConfig& cfg) {
  ExperimentResult res;
  res.table.header = {"a", "b", "c", "closed_form", "numeric", "residual"};
  const int samples = samples_of(cfg);
  std::vector<double> residuals(static_cast<std::size_t>(samples));
  res.table.rows = run_rows(samples, cfg, [&](int i) {
    const TwoModeCovariance s = random_squeezed_thermal(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
    const double closed = squeezed_thermal_rescaled_discord(s.a(), s.b(), s.c());
    const double numeric = gaussian_rescaled_discord(s, cfg.optimizer).value;
    residuals[static_cast<std::size_t>(i)] = numeric - closed;
    return numbers({s.a(), s.b(), s.c(), closed, numeric, numeric - closed});
  });
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, std::abs(r));
  res.summary = {{"max_abs_residual", worst}};
  return res;
}

ExperimentResult run_qubitosc(const ExperimentConfig& cfg) {
  struct Point {
    double p;
    double r;
  };
  std::vector<Point> points;
  for (int i = 0; i < cfg.p_steps; ++i) {
    const double p = static_cast<double>(i) / (cfg.p_steps - 1);
    const double rmax = std::sqrt(p * (1.0 - p));
    for (int j = 0; j < cfg.r_steps; ++j) points.push_back({p, rmax * j / (cfg.r_steps - 1)});
  }
  ExperimentResult res;
  res.table.header = {"p", "r", "D_entropic", "D_G", "D_T"};
  std::vector<int> cutoffs(points.size());
  res.table.rows = run_rows(static_cast<int>(points.size()), cfg, [&](int i) {
    const Point pt = points[static_cast<std::size_t>(i)];
    QubitOscConfig qc;
    qc.p = pt.p;
    qc.r = pt.r;
    qc.beta = cfg.beta;
    qc.nbar = cfg.nbar;
    qc.cutoff = cfg.cutoff;
    const QubitOscState st = qubit_oscillator_state(qc);
    cutoffs[static_cast<std::size_t>(i)] = st.cutoff;
    const double dG = geometric_discord_2xd(st.state).value;
    return numbers({pt.p, pt.r, entropic_discord(st.state, cfg.optimizer).value, dG, rescaled_discord(st.state, dG)});
  });
  res.summary = {{"cutoff_max", *std::max_element(cutoffs.begin(), cutoffs.end())}};
  return res;
}

// ---------------------------------------------------------------------------
// check: a seeded property suite.

struct PropertyOutcome {
  double worst = 0.0;  // largest violation measure, compared against tol
  double tol = 0.0;
  bool enforced = true;
};

double max_abs_entry(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

PropertyOutcome check_metric_axioms(RngSeed seed) {
  PropertyOutcome o{0.0, 1e-12};
  Rng rng(seed);
  for (int t = 0; t < 500; ++t) {
    const Dims dims{rng.uniform_int(1, 3), rng.uniform_int(2, 3)};
    const DensityMatrix r1 = random_state(dims, rng.uniform_int(1, dims.total()), rng);
    const DensityMatrix r2 = random_state(dims, rng.uniform_int(1, dims.total()), rng);
    const DensityMatrix r3 = random_state(dims, rng.uniform_int(1, dims.total()), rng);
    const double d12 = rescaled_distance(r1, r2);
    const double d21 = rescaled_distance(r2, r1);
    o.worst = std::max({o.worst, std::abs(d12 - d21), rescaled_distance(r1, r1),
                        d12 - rescaled_distance(r1, r3) - rescaled_distance(r3, r2)});
  }
  return o;
}

PropertyOutcome check_local_unitary(RngSeed seed) {
  PropertyOutcome o{0.0, 1e-8};
  Rng rng(seed);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_state(Dims{2, 3}, rng.uniform_int(1, 6), rng);
    const ComplexMatrix u = tensor_product(random_unitary(2, rng), random_unitary(3, rng));
    const DensityMatrix rot = DensityMatrix::trusted(u * rho.matrix() * u.adjoint(), rho.dims());
    const double a = geometric_discord_2xd(rho).value;
    const double b = geometric_discord_2xd(rot).value;
    o.worst = std::max({o.worst, std::abs(a - b), std::abs(rescaled_discord(rho, a) - rescaled_discord(rot, b)),
                        std::abs(negativity(rho) - negativity(rot))});
  }
  return o;
}

PropertyOutcome check_ancilla(RngSeed seed) {
  PropertyOutcome o{0.0, 1e-8};
  Rng rng(seed);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = random_state(Dims{2, 2}, rng.uniform_int(1, 4), rng);
    const int dt = rng.uniform_int(2, 3);
    const DensityMatrix tau = random_state(Dims{1, dt}, rng.uniform_int(1, dt), rng);
    const DensityMatrix big = append_ancilla(rho, tau);
    const double a = geometric_discord_2xd(rho).value;
    const double b = geometric_discord_2xd(big).value;
    o.worst = std::max({o.worst, std::abs(adjusted_discord(rho, a) - adjusted_discord(big, b)),
                        std::abs(b - a * purity(tau))});
  }
  return o;
}

PropertyOutcome check_closed_vs_numeric(RngSeed seed, const OptimizerConfig& opt) {
  PropertyOutcome o{0.0, 1e-6};
  Rng rng(seed);
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_state(Dims{2, 3}, rng.uniform_int(1, 6), rng);
    o.worst = std::max(o.worst, std::abs(geometric_discord_2xd(rho).value - geometric_discord_numeric(rho, opt).value));
  }
  return o;
}

PropertyOutcome check_dqc1_purity(RngSeed seed) {
  PropertyOutcome o{0.0, 1e-12};
  Rng rng(seed);
  for (int n = 1; n <= 6; ++n) {
    Dqc1Config dc;
    dc.n = n;
    dc.mu = rng.uniform();
    dc.unitary = random_unitary(1 << n, rng);
    const DensityMatrix rho = dqc1_output_state(dc);
    const double expected = (1.0 + dc.mu * dc.mu) / std::pow(2.0, n + 1);
    o.worst = std::max(o.worst, std::abs((rho.matrix() * rho.matrix()).trace().real() - expected));
  }
  return o;
}

PropertyOutcome check_werner_symmetry(RngSeed seed) {
  PropertyOutcome o{0.0, 1e-9};
  Rng rng(seed);
  for (int t = 0; t < 20; ++t) {
    const int d = rng.uniform_int(2, 4);
    const DensityMatrix w = werner_state(rng.uniform(), d);
    const ComplexMatrix u1 = random_unitary(d, rng);
    const ComplexMatrix uu = tensor_product(u1, u1);
    o.worst = std::max(o.worst, max_abs_entry(uu * w.matrix() * uu.adjoint() - w.matrix()));
  }
  return o;
}

PropertyOutcome check_gaussian_purity(RngSeed seed) {
  PropertyOutcome o{0.0, 1e-12};
  for (int t = 0; t < 100; ++t) {
    const TwoModeCovariance s = random_covariance(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const RealMatrix m = s.matrix();
    o.worst = std::max(o.worst, std::abs(gaussian_overlap(m, m) - gaussian_purity(s)) / gaussian_purity(s));
  }
  return o;
}

PropertyOutcome check_gaussian_closed_form(RngSeed seed, const OptimizerConfig& opt) {
  PropertyOutcome o{0.0, 1e-4};
  for (int t = 0; t < 10; ++t) {
    const TwoModeCovariance s = random_squeezed_thermal(derive_seed(seed, static_cast<std::uint64_t>(t)));
    o.worst = std::max(o.worst, std::abs(gaussian_rescaled_discord(s, opt).value -
                                         squeezed_thermal_rescaled_discord(s.a(), s.b(), s.c())));
  }
  return o;
}

// Not claimed in general; reported without affecting the exit code.
PropertyOutcome check_gaussian_monotone(const OptimizerConfig& opt) {
  PropertyOutcome o{0.0, 1e-6, false};
  for (double a : {1.5, 3.0}) {
    double prev = 0.0;
    for (int k = 0; k <= 6; ++k) {
      const double c = 0.95 * std::sqrt(a * a - 1.0) * k / 6.0;  // d = -c stays physical for |c| < sqrt(a^2 - 1)
      const double v = gaussian_rescaled_discord(TwoModeCovariance(a, a, c, -c), opt).value;
      o.worst = std::max(o.worst, prev - v);
      prev = v;
    }
  }
  return o;
}

PropertyOutcome check_hierarchy_small(RngSeed seed) {
  PropertyOutcome o{0.0, 1e-9};
  for (int t = 0; t < 500; ++t) {
    const DensityMatrix rho = sample_state(Dims{2, 2 + t % 2}, derive_seed(seed, static_cast<std::uint64_t>(t)));
    o.worst = std::max(o.worst, -hierarchy_gap(rho).gap);
  }
  return o;
}

PropertyOutcome check_lower_bound(RngSeed seed, const OptimizerConfig& opt) {
  PropertyOutcome o{0.0, 1e-8};
  Rng rng(seed);
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix rho = random_state(Dims{3, 3}, rng.uniform_int(1, 9), rng);
    const double dT = rescaled_discord(rho, geometric_discord_numeric(rho, opt).value);
    o.worst = std::max(o.worst, rescaled_discord_lower_bound(rho) - dT);
  }
  return o;
}

ExperimentResult run_check(const ExperimentConfig& cfg) {
  const OptimizerConfig& opt = cfg.optimizer;
  using Check = std::pair<std::string, std::function<PropertyOutcome(RngSeed)>>;
  const std::vector<Check> checks{
      {"metric_axioms", check_metric_axioms},
      {"local_unitary_invariance", check_local_unitary},
      {"ancilla_invariance", check_ancilla},
      {"closed_form_vs_numeric_D_G", [&](RngSeed s) { return check_closed_vs_numeric(s, opt); }},
      {"dqc1_purity", check_dqc1_purity},
      {"werner_UU_symmetry", check_werner_symmetry},
      {"gaussian_purity", check_gaussian_purity},
      {"gaussian_closed_form", [&](RngSeed s) { return check_gaussian_closed_form(s, opt); }},
      {"gaussian_monotone_in_c", [&](RngSeed) { return check_gaussian_monotone(opt); }},
      {"hierarchy_dB_2_3", check_hierarchy_small},
      {"lower_bound_below_D_T", [&](RngSeed s) { return check_lower_bound(s, opt); }},
  };
  std::vector<PropertyOutcome> outcomes(checks.size());
  parallel_for(static_cast<int>(checks.size()), resolve_threads(cfg.threads), [&](int i) {
    const auto k = static_cast<std::size_t>(i);
    outcomes[k] = checks[k].second(derive_seed(cfg.seed, k));
  });

  ExperimentResult res;
  res.table.header = {"property", "passed", "worst", "tolerance", "enforced"};
  int failures = 0;
  nlohmann::json flagged = nlohmann::json::array();
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const PropertyOutcome& o = outcomes[k];
    const bool pass = o.worst <= o.tol;
    if (!pass && o.enforced) ++failures;
    if (!pass && !o.enforced) flagged.push_back(checks[k].first);
    res.table.rows.push_back({checks[k].first, pass ? "1" : "0", format_number(o.worst), format_number(o.tol),
                              o.enforced ? "1" : "0"});
  }
  res.summary = {{"failures", failures}, {"flagged", flagged}};
  res.exit_code = failures > 0 ? 1 : 0;
  return res;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::string& s = cfg.subcommand;
  if (s == "dqc1") return run_dqc1(cfg);
  if (s == "werner") return run_werner(cfg);
  if (s == "hierarchy") return run_hierarchy(cfg);
  if (s == "scatter2q") return run_scatter2q(cfg);
  if (s == "gaussian") return run_gaussian(cfg);
  if (s == "gaussian-sts") return run_gaussian_sts(cfg);
  if (s == "qubitosc") return run_qubitosc(cfg);
  return run_check(cfg);
}

}  // namespace discordlab
