#pragma once

#include <string>
#include <vector>

#include "discordlab/optimize.hpp"
#include "discordlab/state.hpp"

namespace discordlab {

/// alpha_A = d/(d-1) makes D_G of a maximally entangled state equal to 1;
/// beta_A is then fixed so that D_T agrees with D_G on those states.
struct NormalizationConstants {
  double alphaA = 2.0;
  double betaA = 0.0;

  static NormalizationConstants for_dim(int dimA);
};

/// Negative raw values below this are reported rather than silently clamped.
inline constexpr double kNegativeFlagThreshold = -1e-6;

struct MeasureResult {
  double value = 0.0;
  double raw = 0.0;  // before clamping at zero
  ProjectiveMeasurement basis = ProjectiveMeasurement::computational(2);
  int evaluations = 0;

  bool negative_flag() const { return raw < kNegativeFlagThreshold; }
};

// Objectives for a fixed rank-1 projective measurement on A (basis in the
// columns of `u`). Exposed so that optimizers and tests can cross-plug bases.

/// sum_j p_j S(rho_{B|j}) in bits; outcomes with p_j < 1e-12 are skipped.
double conditional_entropy(const DensityMatrix& rho, const ComplexMatrix& u);
/// Tr rho Pi[rho] = sum_j ||M_j||_F^2.
double measured_overlap(const DensityMatrix& rho, const ComplexMatrix& u);
/// Q_HS = ||rho - Pi[rho]||^2 = Tr rho^2 - Tr rho Pi[rho].
double hs_objective(const DensityMatrix& rho, const ComplexMatrix& u);
/// Q_T = d_T(rho, Pi[rho])^2 via the purity form 2 - 2 sqrt(Tr rho Pi[rho] / Tr rho^2).
double rescaled_objective(const DensityMatrix& rho, const ComplexMatrix& u);

MeasureResult entropic_discord(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

/// Entropic discord evaluated at one basis. An upper bound in general; exact
/// when the basis is optimal (e.g. any basis for U⊗U-invariant states).
double entropic_discord_in_basis(const DensityMatrix& rho, const ComplexMatrix& u);

struct BlochDiscord {
  double value = 0.0;
  Eigen::Matrix3d S = Eigen::Matrix3d::Zero();
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();  // optimal measurement axis
};

/// Closed form for a qubit A: D_G = Tr S - lambda_max(S), S = Tr_B(v v^T).
BlochDiscord geometric_discord_2xd(const DensityMatrix& rho);

/// alpha_A min_Pi Q_HS by multistart optimization (d_A <= 4).
MeasureResult geometric_discord_numeric(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

double geometric_discord_in_basis(const DensityMatrix& rho, const ComplexMatrix& u);

/// D_T from D_G and purity (closed relation for projective measurements).
double rescaled_discord(const DensityMatrix& rho, double dG);

/// beta_A min_Pi d_T(rho, Pi[rho])^2, minimized directly on explicitly
/// measured states (d_A <= 4). Independent of the D_G route.
MeasureResult rescaled_discord_direct(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

double adjusted_discord(const DensityMatrix& rho, double dG);

/// A_{(n,q),(m,p)} = Tr_B[rho_nm rho_pq], a d_A^2 x d_A^2 Hermitian matrix
/// with Tr rho Pi[rho] = sum_j vec(P_j)^† A vec(P_j).
ComplexMatrix overlap_form_matrix(const DensityMatrix& rho);

/// max{0, beta_A (2 - 2 sqrt(sum of the d_A largest eigenvalues of A / Tr rho^2))}.
double rescaled_discord_lower_bound(const DensityMatrix& rho);

/// (||rho^{t_A}||_1 - 1)/(d_A - 1), clamped to zero below 1e-12.
double negativity(const DensityMatrix& rho);

struct HierarchyGap {
  double dT = 0.0;
  double n = 0.0;
  double bound = 0.0;
  double gap = 0.0;
};

/// Pure-state boundary [2 - sqrt(4 - 2N^2)]/(2 - sqrt 2).
double hierarchy_bound(double negativity);
HierarchyGap hierarchy_gap(const DensityMatrix& rho);

struct HierarchyViolation {
  DensityMatrix state;
  HierarchyGap gap;       // from the search
  double verified_gap = 0.0;  // re-evaluated with the numeric optimizer and SVD trace norm
};

struct ViolationSearchConfig {
  int descent_steps = 400;
  double perturbation = 0.05;
  double threshold = -1e-6;
  int max_results = 16;
};

/// Random 2 x d_B states refined by greedy Gaussian perturbation of their
/// Ginibre factors, looking for negative hierarchy gaps. `budget` counts
/// gap evaluations; an exhausted budget simply ends the search.
std::vector<HierarchyViolation> violation_search(int dimB, RngSeed seed, long budget,
                                                 const ViolationSearchConfig& vcfg = {});

struct QCReport {
  double entropic = 0.0;
  double geometric = 0.0;
  double adjusted = 0.0;
  double rescaled = 0.0;
  double rescaled_lower_bound = 0.0;
  double negativity = 0.0;
  double purity = 0.0;
  ProjectiveMeasurement optimal_basis = ProjectiveMeasurement::computational(2);
  int optimizer_evals = 0;
  bool negative_flag = false;
  std::string convention;
};

/// Every quantifier for one state. Qubit A uses the closed-form D_G; d_A <= 4
/// uses the numeric optimizer.
QCReport qc_report(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

}  // namespace discordlab
