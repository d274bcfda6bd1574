#include "discordlab/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

namespace discordlab {

namespace {

constexpr double kPhysicalTol = 1e-10;

Eigen::MatrixXcd with_symplectic_form(const RealMatrix& sigma) {
  const Eigen::Index n = sigma.rows();
  Eigen::MatrixXcd m = sigma.cast<Complex>();
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    m(k, k + 1) += Complex(0.0, 1.0);
    m(k + 1, k) -= Complex(0.0, 1.0);
  }
  return m;
}

}  // namespace

Eigen::Matrix4d symplectic_form() {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = omega(2, 3) = 1.0;
  omega(1, 0) = omega(3, 2) = -1.0;
  return omega;
}

double physicality_margin(const RealMatrix& sigma) {
  if (sigma.rows() != sigma.cols() || sigma.rows() % 2 != 0)
    throw DimensionMismatch("physicality_margin: covariance must be square with even size");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(with_symplectic_form(sigma), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

TwoModeCovariance::TwoModeCovariance(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
    throw InvalidState("TwoModeCovariance: non-finite entry");
  if (a < 1.0 - kPhysicalTol || b < 1.0 - kPhysicalTol)
    throw InvalidState("TwoModeCovariance: local variances must be >= 1");
  if (!(determinant() > 0.0)) throw InvalidState("TwoModeCovariance: Det Sigma must be positive");
  const double margin = physicality_margin(matrix());
  if (margin < -kPhysicalTol)
    throw InvalidState("TwoModeCovariance: Sigma + i Omega has eigenvalue " + std::to_string(margin));
}

Eigen::Matrix4d TwoModeCovariance::matrix() const {
  Eigen::Matrix4d s;
  s << a_, 0, c_, 0,
       0, a_, 0, d_,
       c_, 0, b_, 0,
       0, d_, 0, b_;
  return s;
}

std::pair<double, double> TwoModeCovariance::symplectic_eigenvalues() const {
  const double delta = a_ * a_ + b_ * b_ + 2.0 * c_ * d_;
  const double disc = std::sqrt(std::max(0.0, delta * delta - 4.0 * determinant()));
  return {std::sqrt(std::max(0.0, 0.5 * (delta - disc))), std::sqrt(0.5 * (delta + disc))};
}

double gaussian_overlap(const RealMatrix& s1, const RealMatrix& s2) {
  if (s1.rows() != s2.rows() || s1.cols() != s2.cols() || s1.rows() != s1.cols() ||
      (s1.rows() != 2 && s1.rows() != 4))
    throw DimensionMismatch("gaussian_overlap: need two 2x2 or two 4x4 covariances");
  const double det = (0.5 * (s1 + s2)).determinant();
  if (!(det > 0.0)) throw InvalidArgument("gaussian_overlap: singular sum matrix");
  return 1.0 / std::sqrt(det);
}

double gaussian_purity(const TwoModeCovariance& sigma) { return 1.0 / std::sqrt(sigma.determinant()); }

void GaussianPovmParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("GaussianPovmParams: lambda must be > 0");
  if (!(m >= 1.0) || !std::isfinite(m)) throw InvalidArgument("GaussianPovmParams: m must be >= 1");
  if (!std::isfinite(theta)) throw InvalidArgument("GaussianPovmParams: theta must be finite");
}

Eigen::Matrix2d GaussianPovmParams::seed_covariance() const {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  Eigen::Matrix2d s;
  s(0, 0) = m * lambda * ct * ct + m * st * st / lambda;
  s(0, 1) = s(1, 0) = -m * (lambda * lambda - 1.0) * st * ct / lambda;
  s(1, 1) = m * lambda * st * st + m * ct * ct / lambda;
  return s;
}

PostMeasurement post_measurement_covariance(const TwoModeCovariance& sigma, const GaussianPovmParams& povm) {
  povm.validate();
  PostMeasurement out;
  out.sigmaB = povm.seed_covariance();
  const Eigen::Matrix2d sum = sigma.blockB() + out.sigmaB;
  if (!(std::abs(sum.determinant()) > 1e-300))
    throw InvalidArgument("post_measurement_covariance: B + sigma_B is singular");
  const Eigen::Matrix2d c = sigma.blockC();
  out.sigmaA = sigma.blockA() - c * sum.inverse() * c.transpose();
  return out;
}

double gaussian_overlap_ratio(const TwoModeCovariance& sigma, const GaussianPovmParams& povm) {
  const PostMeasurement pm = post_measurement_covariance(sigma, povm);
  Eigen::Matrix4d measured = Eigen::Matrix4d::Zero();
  measured.topLeftCorner<2, 2>() = pm.sigmaA;
  measured.bottomRightCorner<2, 2>() = pm.sigmaB;
  const double den = (0.5 * (sigma.matrix() + measured)).determinant();
  return std::sqrt(pm.sigmaA.determinant() * pm.sigmaB.determinant()) / den;
}

namespace {

// Optimizer coordinates: v = log lambda, u with m = cosh u, and theta.
GaussianPovmParams from_coords(const RealVector& x) {
  const double vmax = std::log(kPovmLambdaMax);
  const double umax = std::acosh(kPovmMMax);
  GaussianPovmParams p;
  p.lambda = std::exp(std::clamp(x(0), -vmax, vmax));
  p.m = std::cosh(std::clamp(x(1), -umax, umax));
  p.theta = x(2);
  return p;
}

}  // namespace

GaussianDiscordResult gaussian_rescaled_discord(const TwoModeCovariance& sigma, const OptimizerConfig& cfg) {
  cfg.validate();
  constexpr int kLambdaSteps = 17;
  constexpr int kMSteps = 17;
  constexpr int kThetaSteps = 16;
  constexpr int kRefined = 4;

  GaussianDiscordResult out;
  auto ratio = [&](const GaussianPovmParams& p) {
    ++out.evaluations;
    return gaussian_overlap_ratio(sigma, p);
  };

  struct Cell {
    double value;
    RealVector x;
  };
  std::vector<Cell> cells;
  cells.reserve(kLambdaSteps * kMSteps * kThetaSteps);
  const double vmin = std::log(kPovmLambdaMin);
  const double vmax = std::log(kPovmLambdaMax);
  const double umax = std::acosh(kPovmMMax);
  for (int i = 0; i < kLambdaSteps; ++i)
    for (int j = 0; j < kMSteps; ++j)
      for (int k = 0; k < kThetaSteps; ++k) {
        RealVector x(3);
        x(0) = vmin + (vmax - vmin) * i / (kLambdaSteps - 1);
        // log-spaced m in [1, 1e3]
        x(1) = std::acosh(std::pow(kPovmMMax, static_cast<double>(j) / (kMSteps - 1)));
        x(2) = 2.0 * std::numbers::pi * k / kThetaSteps;
        cells.push_back({ratio(from_coords(x)), std::move(x)});
      }
  std::partial_sort(cells.begin(), cells.begin() + kRefined, cells.end(),
                    [](const Cell& l, const Cell& r) { return l.value > r.value; });

  double best = cells.front().value;
  out.best_povm = from_coords(cells.front().x);
  int converged = 0;
  for (int n = 0; n < kRefined; ++n) {
    Objective f = [&](const RealVector& x) {
      if (std::abs(x(0)) > vmax || std::abs(x(1)) > umax) return 1.0;  // outside the search box
      return -std::sqrt(ratio(from_coords(x)));
    };
    RealVector step(3);
    step << 0.3, 0.3, 0.3;
    const SimplexResult r = minimize_simplex(f, cells[static_cast<std::size_t>(n)].x, step, cfg.tol, cfg.max_iters);
    if (r.converged) ++converged;
    const double value = r.value * r.value;
    if (r.value < 0.0 && value > best) {
      best = value;
      out.best_povm = from_coords(r.x);
    }
  }
  if (converged == 0) throw OptimizerFailed("gaussian_rescaled_discord: no refinement converged");
  out.best_povm.theta = std::fmod(std::fmod(out.best_povm.theta, 2.0 * std::numbers::pi) + 2.0 * std::numbers::pi,
                                  2.0 * std::numbers::pi);
  out.raw = 1.0 - std::pow(sigma.determinant(), 0.25) * std::sqrt(best);
  out.value = std::clamp(out.raw, 0.0, 1.0);
  return out;
}

double squeezed_thermal_rescaled_discord(double a, double b, double c) {
  const TwoModeCovariance sigma(a, b, c, -c);  // throws when unphysical
  const double ab = a * b;
  const double g = ab - c * c;
  return 1.0 - 2.0 * std::sqrt(g / (2.0 * ab + 2.0 * std::sqrt(ab * g) - c * c));
}

namespace {

TwoModeCovariance sample_covariance(RngSeed seed, bool squeezed_thermal) {
  Rng rng(seed);
  const double a = rng.uniform(1.0, 5.0);
  const double b = rng.uniform(1.0, 5.0);
  const double box = std::sqrt(a * b);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const double c = rng.uniform(-box, box);
    const double d = squeezed_thermal ? -c : rng.uniform(-box, box);
    if ((a * b - c * c) * (a * b - d * d) <= 0.0 || (a * b - c * c) <= 0.0) continue;
    Eigen::Matrix4d s;
    s << a, 0, c, 0, 0, a, 0, d, c, 0, b, 0, 0, d, 0, b;
    if (physicality_margin(s) >= 0.0) return TwoModeCovariance(a, b, c, d);
  }
  return TwoModeCovariance(a, b, 0.0, 0.0);  // unreachable in practice: c = d = 0 is always physical
}

}  // namespace

TwoModeCovariance random_covariance(RngSeed seed) { return sample_covariance(seed, false); }

TwoModeCovariance random_squeezed_thermal(RngSeed seed) { return sample_covariance(seed, true); }

void write_covariances_csv(std::ostream& out, const std::vector<TwoModeCovariance>& rows) {
  out << "a,b,c,d\n";
  char buf[128];
  for (const auto& s : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.a(), s.b(), s.c(), s.d());
    out << buf;
  }
}

std::vector<TwoModeCovariance> read_covariances_csv(std::istream& in) {
  std::vector<TwoModeCovariance> rows;
  std::string line;
  if (!std::getline(in, line) || line.rfind("a,b,c,d", 0) != 0)
    throw InvalidArgument("read_covariances_csv: expected header a,b,c,d");
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::istringstream ss(line);
    double v[4];
    for (int k = 0; k < 4; ++k) {
      std::string field;
      if (!std::getline(ss, field, ',')) throw InvalidArgument("read_covariances_csv: short row: " + line);
      try {
        v[k] = std::stod(field);
      } catch (const std::exception&) {
        throw InvalidArgument("read_covariances_csv: bad number: " + field);
      }
    }
    rows.emplace_back(v[0], v[1], v[2], v[3]);
  }
  return rows;
}

}  // namespace discordlab
