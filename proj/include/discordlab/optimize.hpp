#pragma once

#include <functional>
#include <vector>

#include "discordlab/core.hpp"
#include "discordlab/state.hpp"

namespace discordlab {

struct OptimizerConfig {
  int multistarts = 24;
  // Simplex size (in chart coordinates, radians for unitaries) at which a
  // refinement stops. Near a minimum the objective error is O(tol^2).
  double tol = 1e-8;
  int max_iters = 2000;
  // Bloch-sphere pre-scan resolution for qubit measurements (res x res).
  int grid_resolution = 64;
  RngSeed seed{0x5eed};

  void validate() const;
};

using Objective = std::function<double(const RealVector&)>;

struct SimplexResult {
  RealVector x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead minimization (GSL nmsimplex2) from x0 with initial step sizes.
SimplexResult minimize_simplex(const Objective& f, const RealVector& x0, const RealVector& step,
                               double xtol, int max_iters);

/// Generalized Gell-Mann matrices of su(d), normalized Tr(G_a G_b) = 2 δ_ab.
/// Order: symmetric off-diagonal, antisymmetric off-diagonal, diagonal.
std::vector<ComplexMatrix> gell_mann_generators(int d);

/// exp(i H) for Hermitian H.
ComplexMatrix exp_i_hermitian(const ComplexMatrix& h);

/// Local chart U(x) = U0 exp(i sum_k x_k G_k) around a base unitary, using
/// only the off-diagonal Gell-Mann generators: diagonal ones only rephase the
/// basis vectors and leave every measurement objective unchanged.
class UnitaryChart {
 public:
  explicit UnitaryChart(ComplexMatrix base);

  int dimension() const { return static_cast<int>(generators_.size()); }
  ComplexMatrix operator()(const RealVector& x) const;
  const ComplexMatrix& base() const { return base_; }

 private:
  ComplexMatrix base_;
  std::vector<ComplexMatrix> generators_;
};

/// Basis {|n>, |-n>} for the qubit axis with polar angles (theta, phi).
ComplexMatrix qubit_axis_basis(double theta, double phi);

/// Objective over rank-1 projective measurements; receives a unitary whose
/// columns are the basis vectors.
using MeasurementObjective = std::function<double(const ComplexMatrix&)>;

struct MeasurementSearch {
  ComplexMatrix basis;
  double value = 0.0;
  int evaluations = 0;
  int converged_starts = 0;
};

/// Multistart simplex minimization over the unitary manifold. For d = 2 the
/// starts are the local minima of a Bloch-axis grid; otherwise the
/// computational basis plus Haar-random bases. Throws OptimizerFailed if no
/// start converges within max_iters.
MeasurementSearch minimize_over_measurements(int d, const MeasurementObjective& f,
                                             const OptimizerConfig& cfg);

}  // namespace discordlab
