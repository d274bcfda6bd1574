#include "discordlab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <utility>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

namespace discordlab {

void OptimizerConfig::validate() const {
  if (multistarts < 1 || !(tol > 0.0) || max_iters < 1 || grid_resolution < 1)
    throw InvalidArgument("OptimizerConfig: all fields must be positive");
}

namespace {

struct GslContext {
  const Objective* f;
  RealVector scratch;
  int evaluations = 0;
};

double gsl_trampoline(const gsl_vector* v, void* params) {
  auto* ctx = static_cast<GslContext*>(params);
  for (Eigen::Index i = 0; i < ctx->scratch.size(); ++i)
    ctx->scratch(i) = gsl_vector_get(v, static_cast<std::size_t>(i));
  ++ctx->evaluations;
  const double y = (*ctx->f)(ctx->scratch);
  return std::isfinite(y) ? y : GSL_POSINF;
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

gsl_vector* to_gsl(const RealVector& x) {
  gsl_vector* v = gsl_vector_alloc(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) gsl_vector_set(v, static_cast<std::size_t>(i), x(i));
  return v;
}

const bool gsl_handler_disabled = [] {
  gsl_set_error_handler_off();
  return true;
}();

}  // namespace

SimplexResult minimize_simplex(const Objective& f, const RealVector& x0, const RealVector& step,
                               double xtol, int max_iters) {
  (void)gsl_handler_disabled;
  const auto n = static_cast<std::size_t>(x0.size());
  SimplexResult out;
  if (n == 0) {
    out.x = x0;
    out.value = f(x0);
    out.evaluations = 1;
    out.converged = true;
    return out;
  }
  GslContext ctx{&f, RealVector(x0.size())};
  gsl_multimin_function fn{&gsl_trampoline, n, &ctx};
  std::unique_ptr<gsl_vector, VectorDeleter> x(to_gsl(x0));
  std::unique_ptr<gsl_vector, VectorDeleter> ss(to_gsl(step));
  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> s(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  gsl_multimin_fminimizer_set(s.get(), &fn, x.get(), ss.get());

  // Besides the size test, stop once the best value has not moved beyond
  // round-off for a long stretch: flat or noise-limited objectives (e.g. a
  // minimum attained on a whole manifold) never shrink the simplex to xtol.
  const int stall_window = 50 * static_cast<int>(n) + 50;
  double anchor = s->fval;
  int anchor_iter = 0;
  int iter = 0;
  int status = GSL_CONTINUE;
  while (status == GSL_CONTINUE && iter < max_iters) {
    ++iter;
    if (gsl_multimin_fminimizer_iterate(s.get()) != GSL_SUCCESS) break;
    status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(s.get()), xtol);
    if (anchor - s->fval > 1e-14 * (1.0 + std::abs(s->fval))) {
      anchor = s->fval;
      anchor_iter = iter;
    } else if (iter - anchor_iter >= stall_window) {
      status = GSL_SUCCESS;
    }
  }
  out.x.resize(x0.size());
  for (std::size_t i = 0; i < n; ++i) out.x(static_cast<Eigen::Index>(i)) = gsl_vector_get(s->x, i);
  out.value = s->fval;
  out.iterations = iter;
  out.evaluations = ctx.evaluations;
  out.converged = status == GSL_SUCCESS;
  return out;
}

std::vector<ComplexMatrix> gell_mann_generators(int d) {
  if (d < 2) throw InvalidArgument("gell_mann_generators: d must be >= 2");
  std::vector<ComplexMatrix> gens;
  gens.reserve(static_cast<std::size_t>(d * d - 1));
  const Complex i1(0.0, 1.0);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      gens.push_back(std::move(g));
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = -i1;
      g(k, j) = i1;
      gens.push_back(std::move(g));
    }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix g = ComplexMatrix::Zero(d, d);
    const double c = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) g(j, j) = c;
    g(l, l) = -l * c;
    gens.push_back(std::move(g));
  }
  return gens;
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const ComplexVector phases =
      es.eigenvalues().unaryExpr([](double w) { return std::polar(1.0, w); }).cast<Complex>();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

UnitaryChart::UnitaryChart(ComplexMatrix base) : base_(std::move(base)) {
  const int d = static_cast<int>(base_.rows());
  auto gens = gell_mann_generators(d);
  gens.resize(static_cast<std::size_t>(d * (d - 1)));
  generators_ = std::move(gens);
}

ComplexMatrix UnitaryChart::operator()(const RealVector& x) const {
  ComplexMatrix h = ComplexMatrix::Zero(base_.rows(), base_.cols());
  for (std::size_t k = 0; k < generators_.size(); ++k) h += x(static_cast<Eigen::Index>(k)) * generators_[k];
  return base_ * exp_i_hermitian(h);
}

ComplexMatrix qubit_axis_basis(double theta, double phi) {
  ComplexMatrix u(2, 2);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex e = std::polar(1.0, phi);
  u(0, 0) = c;
  u(1, 0) = e * s;
  u(0, 1) = -s;
  u(1, 1) = e * c;
  return u;
}

namespace {

std::vector<ComplexMatrix> qubit_grid_seeds(const MeasurementObjective& f, int res, int max_seeds,
                                            int& evaluations) {
  const double pi = std::numbers::pi;
  RealMatrix grid(res, res);
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) {
      grid(i, j) = f(qubit_axis_basis(pi * (i + 0.5) / res, pi * j / res));
      ++evaluations;
    }
  std::vector<std::pair<double, std::pair<int, int>>> minima;
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) {
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1 && is_min; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ii = i + di;
          const int jj = (j + dj + res) % res;
          if (ii < 0 || ii >= res) continue;
          if (grid(ii, jj) < grid(i, j)) is_min = false;
        }
      if (is_min) minima.push_back({grid(i, j), {i, j}});
    }
  std::sort(minima.begin(), minima.end());
  if (minima.empty()) {
    Eigen::Index bi = 0, bj = 0;
    grid.minCoeff(&bi, &bj);
    minima.push_back({grid(bi, bj), {static_cast<int>(bi), static_cast<int>(bj)}});
  }
  std::vector<ComplexMatrix> seeds;
  for (const auto& m : minima) {
    if (static_cast<int>(seeds.size()) >= max_seeds) break;
    seeds.push_back(qubit_axis_basis(pi * (m.second.first + 0.5) / res, pi * m.second.second / res));
  }
  return seeds;
}

}  // namespace

MeasurementSearch minimize_over_measurements(int d, const MeasurementObjective& f,
                                             const OptimizerConfig& cfg) {
  cfg.validate();
  if (d < 2) throw InvalidArgument("minimize_over_measurements: d must be >= 2");
  MeasurementSearch best;
  best.value = std::numeric_limits<double>::infinity();

  std::vector<ComplexMatrix> seeds;
  if (d == 2) {
    seeds = qubit_grid_seeds(f, cfg.grid_resolution, cfg.multistarts, best.evaluations);
  } else {
    Rng rng(cfg.seed);
    seeds.push_back(ComplexMatrix::Identity(d, d));
    while (static_cast<int>(seeds.size()) < cfg.multistarts) seeds.push_back(random_unitary(d, rng));
  }

  for (const auto& seed : seeds) {
    UnitaryChart chart(seed);
    const int n = chart.dimension();
    Objective g = [&](const RealVector& x) { return f(chart(x)); };
    SimplexResult r = minimize_simplex(g, RealVector::Zero(n), RealVector::Constant(n, 0.2),
                                       cfg.tol, cfg.max_iters);
    best.evaluations += r.evaluations;
    // Restart once around the result in a re-centred chart; guards against
    // premature simplex collapse.
    UnitaryChart local(chart(r.x));
    Objective h = [&](const RealVector& x) { return f(local(x)); };
    SimplexResult r2 = minimize_simplex(h, RealVector::Zero(n), RealVector::Constant(n, 0.02),
                                        cfg.tol, cfg.max_iters);
    best.evaluations += r2.evaluations;
    const bool converged = r.converged && r2.converged;
    if (converged) ++best.converged_starts;
    const double value = std::min(r.value, r2.value);
    if (value < best.value) {
      best.value = value;
      best.basis = r2.value <= r.value ? local(r2.x) : chart(r.x);
    }
  }
  if (best.converged_starts == 0)
    throw OptimizerFailed("measurement optimization: no start converged within max_iters");
  return best;
}

}  // namespace discordlab
