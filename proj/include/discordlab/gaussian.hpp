#pragma once

#include <iosfwd>
#include <vector>

#include "discordlab/core.hpp"
#include "discordlab/optimize.hpp"

namespace discordlab {

/// Two-mode covariance matrix in standard form, quadrature order
/// (x1, p1, x2, p2), vacuum = identity:
///   [ a  0  c  0 ]
///   [ 0  a  0  d ]
///   [ c  0  b  0 ]
///   [ 0  d  0  b ]
class TwoModeCovariance {
 public:
  /// Validates a, b >= 1, Det > 0 and Sigma + i Omega >= 0 (to -1e-10).
  TwoModeCovariance(double a, double b, double c, double d);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  Eigen::Matrix4d matrix() const;
  Eigen::Matrix2d blockA() const { return a_ * Eigen::Matrix2d::Identity(); }
  Eigen::Matrix2d blockB() const { return b_ * Eigen::Matrix2d::Identity(); }
  Eigen::Matrix2d blockC() const { return Eigen::Vector2d(c_, d_).asDiagonal(); }
  double determinant() const { return (a_ * b_ - c_ * c_) * (a_ * b_ - d_ * d_); }

  /// Symplectic eigenvalues (nu_-, nu_+).
  std::pair<double, double> symplectic_eigenvalues() const;

 private:
  double a_, b_, c_, d_;
};

/// Two-mode symplectic form, block diag of [[0, 1], [-1, 0]].
Eigen::Matrix4d symplectic_form();

/// Smallest eigenvalue of Sigma + i Omega for a 2x2 or 4x4 covariance.
double physicality_margin(const RealMatrix& sigma);

/// Tr[rho1 rho2] = 1 / sqrt(Det[(s1 + s2)/2]) for zero-mean Gaussian states
/// with equal mode count (2x2 or 4x4 covariances).
double gaussian_overlap(const RealMatrix& s1, const RealMatrix& s2);
double gaussian_purity(const TwoModeCovariance& sigma);

/// Single-mode seed of a Gaussian measurement on mode B: diag(m lambda, m / lambda)
/// rotated by theta.
struct GaussianPovmParams {
  double lambda = 1.0;  // > 0
  double m = 1.0;       // >= 1
  double theta = 0.0;   // [0, 2 pi)

  void validate() const;
  Eigen::Matrix2d seed_covariance() const;
};

struct PostMeasurement {
  Eigen::Matrix2d sigmaA;
  Eigen::Matrix2d sigmaB;
};

/// sigma_A = A - C (B + sigma_B)^{-1} C^T, sigma_B = the POVM seed.
PostMeasurement post_measurement_covariance(const TwoModeCovariance& sigma,
                                            const GaussianPovmParams& povm);

/// sqrt(Det sigma_A Det sigma_B) / Det[(Sigma + sigma_A ⊕ sigma_B)/2], the
/// quantity maximized over measurements.
double gaussian_overlap_ratio(const TwoModeCovariance& sigma, const GaussianPovmParams& povm);

struct GaussianDiscordResult {
  double value = 0.0;
  double raw = 0.0;  // before clamping to [0, 1]
  GaussianPovmParams best_povm;
  int evaluations = 0;
};

/// Search box for the measurement parameters (log-spaced in lambda and m).
inline constexpr double kPovmLambdaMin = 1e-3;
inline constexpr double kPovmLambdaMax = 1e3;
inline constexpr double kPovmMMax = 1e3;

/// 1 - (Det Sigma)^{1/4} max_povm ratio^{1/2}, with the Gaussian constant
/// beta = 1/2. Grid pre-scan (lambda x m x theta = 17 x 17 x 16) plus simplex
/// refinement of the best grid cells; clamped to [0, 1].
GaussianDiscordResult gaussian_rescaled_discord(const TwoModeCovariance& sigma,
                                                const OptimizerConfig& cfg = {});

/// Closed form for squeezed thermal states (d = -c):
/// 1 - 2 sqrt[(ab - c^2) / (2ab + 2 sqrt(ab(ab - c^2)) - c^2)].
double squeezed_thermal_rescaled_discord(double a, double b, double c);

/// a, b ~ U[1, 5]; (c, d) uniform in |c|, |d| <= sqrt(ab), rejected until physical.
TwoModeCovariance random_covariance(RngSeed seed);

/// As random_covariance but constrained to d = -c.
TwoModeCovariance random_squeezed_thermal(RngSeed seed);

/// CSV with header "a,b,c,d".
void write_covariances_csv(std::ostream& out, const std::vector<TwoModeCovariance>& rows);
std::vector<TwoModeCovariance> read_covariances_csv(std::istream& in);

}  // namespace discordlab
