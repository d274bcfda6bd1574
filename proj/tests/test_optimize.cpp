#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "discordlab/optimize.hpp"
#include "oracles.hpp"

using namespace discordlab;

TEST(GellMann, CountHermiticityAndNormalization) {
  for (int d : {2, 3, 4}) {
    const auto g = gell_mann_generators(d);
    ASSERT_EQ(static_cast<int>(g.size()), d * d - 1);
    for (std::size_t a = 0; a < g.size(); ++a) {
      EXPECT_LT((g[a] - g[a].adjoint()).cwiseAbs().maxCoeff(), 1e-15);
      EXPECT_NEAR(std::abs(g[a].trace()), 0.0, 1e-14);
      for (std::size_t b = 0; b < g.size(); ++b)
        EXPECT_NEAR(std::abs((g[a] * g[b]).trace() - (a == b ? 2.0 : 0.0)), 0.0, 1e-13);
    }
  }
  EXPECT_THROW(gell_mann_generators(1), InvalidArgument);
}

TEST(ExpIHermitian, MatchesTaylorSeries) {
  Rng rng(RngSeed{1});
  ComplexMatrix g = ginibre(3, 3, rng);
  const ComplexMatrix h = 0.3 * (g + g.adjoint());
  ComplexMatrix series = ComplexMatrix::Identity(3, 3);
  ComplexMatrix term = ComplexMatrix::Identity(3, 3);
  for (int k = 1; k < 40; ++k) {
    term = term * (Complex(0.0, 1.0) * h) / static_cast<double>(k);
    series += term;
  }
  EXPECT_LT((exp_i_hermitian(h) - series).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(UnitaryChart, OriginIsBaseAndImagesAreUnitary) {
  Rng rng(RngSeed{2});
  const ComplexMatrix base = random_unitary(3, rng);
  const UnitaryChart chart(base);
  EXPECT_EQ(chart.dimension(), 6);
  EXPECT_LT((chart(RealVector::Zero(6)) - base).cwiseAbs().maxCoeff(), 1e-14);
  RealVector x(6);
  for (int k = 0; k < 6; ++k) x(k) = rng.normal();
  const ComplexMatrix u = chart(x);
  EXPECT_LT((u * u.adjoint() - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Simplex, MinimizesRosenbrock) {
  Objective f = [](const RealVector& x) {
    return 100.0 * std::pow(x(1) - x(0) * x(0), 2) + std::pow(1.0 - x(0), 2);
  };
  RealVector x0(2), step(2);
  x0 << -1.2, 1.0;
  step << 0.5, 0.5;
  const SimplexResult r = minimize_simplex(f, x0, step, 1e-10, 10000);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x(0), 1.0, 1e-6);
  EXPECT_NEAR(r.x(1), 1.0, 1e-6);
  EXPECT_LT(r.value, 1e-12);
}

TEST(Simplex, ReportsNonConvergence) {
  Objective f = [](const RealVector& x) { return x.squaredNorm(); };
  const SimplexResult r = minimize_simplex(f, RealVector::Constant(3, 5.0), RealVector::Constant(3, 1.0), 1e-12, 3);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 3);
}

TEST(Simplex, ConstantObjectiveStopsByStall) {
  Objective f = [](const RealVector&) { return 0.25; };
  const SimplexResult r = minimize_simplex(f, RealVector::Zero(2), RealVector::Constant(2, 0.2), 1e-12, 5000);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.iterations, 5000);
}

TEST(QubitAxisBasis, FirstVectorHasRequestedBlochVector) {
  const double theta = 1.1, phi = -2.3;
  const ComplexMatrix u = qubit_axis_basis(theta, phi);
  EXPECT_LT((u * u.adjoint() - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
  const ComplexMatrix p = u.col(0) * u.col(0).adjoint();
  EXPECT_NEAR((p * oracle::pauli(1)).trace().real(), std::sin(theta) * std::cos(phi), 1e-15);
  EXPECT_NEAR((p * oracle::pauli(2)).trace().real(), std::sin(theta) * std::sin(phi), 1e-15);
  EXPECT_NEAR((p * oracle::pauli(3)).trace().real(), std::cos(theta), 1e-15);
}

TEST(MeasurementSearch, FindsKnownMinimum) {
  // f(U) = <u_0| H |u_0> is minimized by the ground state of H.
  Rng rng(RngSeed{3});
  for (int d : {2, 3}) {
    const ComplexMatrix g = ginibre(d, d, rng);
    const ComplexMatrix h = g + g.adjoint();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    OptimizerConfig cfg;
    cfg.multistarts = 4;
    cfg.grid_resolution = 16;
    const auto r = minimize_over_measurements(
        d, [&](const ComplexMatrix& u) { return (u.col(0).adjoint() * h * u.col(0))(0, 0).real(); }, cfg);
    EXPECT_NEAR(r.value, es.eigenvalues()(0), 1e-10);
    EXPECT_GT(r.converged_starts, 0);
  }
}

TEST(MeasurementSearch, ThrowsWhenNothingConverges) {
  OptimizerConfig cfg;
  cfg.multistarts = 2;
  cfg.max_iters = 1;
  cfg.grid_resolution = 4;
  auto f = [](const ComplexMatrix& u) { return std::norm(u(0, 0) - 0.3); };
  EXPECT_THROW(minimize_over_measurements(3, f, cfg), OptimizerFailed);
}

TEST(OptimizerConfig, Validation) {
  OptimizerConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.tol = 0.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = {};
  cfg.multistarts = 0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}
