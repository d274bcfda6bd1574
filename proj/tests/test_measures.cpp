#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "discordlab/measures.hpp"
#include "oracles.hpp"

using namespace discordlab;

namespace {

DensityMatrix bell_state() {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = psi(3) = 1.0;
  return pure_state(psi, Dims{2, 2});
}

OptimizerConfig quick() {
  OptimizerConfig cfg;
  cfg.multistarts = 8;
  cfg.grid_resolution = 24;
  return cfg;
}

// Random Bell-diagonal correlations inside the physical tetrahedron.
std::array<double, 3> random_bell_diagonal(Rng& rng) {
  for (;;) {
    const std::array<double, 3> c{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double l[4] = {1 - c[0] - c[1] - c[2], 1 - c[0] + c[1] + c[2], 1 + c[0] - c[1] + c[2],
                         1 + c[0] + c[1] - c[2]};
    if (*std::min_element(l, l + 4) > 0.0) return c;
  }
}

double binary_entropy(double p) {
  double h = 0.0;
  for (double x : {p, 1.0 - p})
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

}  // namespace

TEST(Normalization, QubitConstants) {
  const auto n = NormalizationConstants::for_dim(2);
  EXPECT_DOUBLE_EQ(n.alphaA, 2.0);
  EXPECT_NEAR(n.betaA, 1.0 / (2.0 - std::numbers::sqrt2), 1e-15);
  const auto n3 = NormalizationConstants::for_dim(3);
  EXPECT_NEAR(n3.alphaA, 1.5, 1e-15);
  EXPECT_NEAR(n3.betaA, 1.0 / (2.0 - 2.0 / std::sqrt(3.0)), 1e-15);
  EXPECT_THROW(NormalizationConstants::for_dim(1), InvalidArgument);
}

TEST(BellState, AllMeasuresEqualOne) {
  const DensityMatrix rho = bell_state();
  const double dG = geometric_discord_2xd(rho).value;
  EXPECT_NEAR(dG, 1.0, 1e-12);
  EXPECT_NEAR(rescaled_discord(rho, dG), 1.0, 1e-12);
  EXPECT_NEAR(adjusted_discord(rho, dG), 1.0, 1e-12);
  EXPECT_NEAR(entropic_discord(rho, quick()).value, 1.0, 1e-9);
  EXPECT_NEAR(negativity(rho), 1.0, 1e-12);
  EXPECT_NEAR(rescaled_discord_direct(rho, quick()).value, 1.0, 1e-9);
}

TEST(BellDiagonal, GeometricDiscordMatchesClosedForm) {
  Rng rng(RngSeed{1});
  for (int t = 0; t < 50; ++t) {
    const auto c = random_bell_diagonal(rng);
    const DensityMatrix rho(oracle::bell_diagonal(c[0], c[1], c[2]), Dims{2, 2});
    EXPECT_NEAR(geometric_discord_2xd(rho).value, oracle::bell_diagonal_geometric(c[0], c[1], c[2]), 1e-12);
  }
}

TEST(BellDiagonal, EntropicDiscordMatchesClosedForm) {
  Rng rng(RngSeed{2});
  for (int t = 0; t < 10; ++t) {
    const auto c = random_bell_diagonal(rng);
    const ComplexMatrix m = oracle::bell_diagonal(c[0], c[1], c[2]);
    const double cmax = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
    const double expected = 1.0 - oracle::entropy_bits(m) + binary_entropy(0.5 * (1.0 + cmax));
    EXPECT_NEAR(entropic_discord(DensityMatrix(m, Dims{2, 2}), quick()).value, expected, 1e-8);
  }
}

TEST(FixedBasisObjectives, MatchExplicitMeasurement) {
  Rng rng(RngSeed{3});
  for (const Dims dims : {Dims{2, 3}, Dims{3, 2}}) {
    const DensityMatrix rho = random_state(dims, 4, rng);
    const ComplexMatrix u = random_unitary(dims.dimA, rng);
    const ComplexMatrix pr = oracle::measure(rho.matrix(), dims.dimA, dims.dimB, u);
    const double hs = (rho.matrix() - pr).squaredNorm();
    EXPECT_NEAR(hs_objective(rho, u), hs, 1e-13);
    EXPECT_NEAR(measured_overlap(rho, u), (rho.matrix() * pr).trace().real(), 1e-13);
    const double dT = (rho.matrix() / rho.matrix().norm() - pr / pr.norm()).norm();
    EXPECT_NEAR(rescaled_objective(rho, u), dT * dT, 1e-12);

    // sum_j p_j S(rho_B|j) from explicit conditional states.
    double cond = 0.0;
    for (int j = 0; j < dims.dimA; ++j) {
      const ComplexMatrix p = oracle::kron(u.col(j) * u.col(j).adjoint(), ComplexMatrix::Identity(dims.dimB, dims.dimB));
      const ComplexMatrix rb = oracle::partial_trace(p * rho.matrix() * p, dims.dimA, dims.dimB, false);
      const double pj = rb.trace().real();
      if (pj > 1e-12) cond += pj * oracle::entropy_bits(rb / pj);
    }
    EXPECT_NEAR(conditional_entropy(rho, u), cond, 1e-10);
  }
}

TEST(GeometricDiscord, ClosedFormAgreesWithNumeric) {
  Rng rng(RngSeed{4});
  for (int dB : {2, 3, 4}) {
    for (int t = 0; t < 5; ++t) {
      const DensityMatrix rho = random_state(Dims{2, dB}, rng.uniform_int(1, 2 * dB), rng);
      EXPECT_NEAR(geometric_discord_2xd(rho).value, geometric_discord_numeric(rho, quick()).value, 1e-8);
    }
  }
}

TEST(GeometricDiscord, ClosedFormAxisIsOptimal) {
  const DensityMatrix rho = random_state(2, 3, 6, RngSeed{5});
  const BlochDiscord b = geometric_discord_2xd(rho);
  const ComplexMatrix u = qubit_axis_basis(std::acos(b.axis.z()), std::atan2(b.axis.y(), b.axis.x()));
  EXPECT_NEAR(geometric_discord_in_basis(rho, u), b.value, 1e-12);
  EXPECT_NEAR(b.value, b.S.trace() - b.S.eigenvalues().real().maxCoeff(), 1e-12);
}

TEST(Measures, VanishOnProductStates) {
  const DensityMatrix a = random_state(1, 2, 2, RngSeed{6});
  const DensityMatrix b = random_state(1, 3, 3, RngSeed{7});
  const DensityMatrix ab = tensor_product(a, b);
  const QCReport r = qc_report(ab, quick());
  EXPECT_NEAR(r.entropic, 0.0, 1e-8);
  EXPECT_NEAR(r.geometric, 0.0, 1e-12);
  EXPECT_NEAR(r.rescaled, 0.0, 1e-10);
  EXPECT_NEAR(r.negativity, 0.0, 1e-12);
  EXPECT_FALSE(r.negative_flag);
}

TEST(Measures, InvariantUnderLocalUnitaries) {
  Rng rng(RngSeed{8});
  for (int t = 0; t < 5; ++t) {
    const DensityMatrix rho = random_state(Dims{2, 3}, 3, rng);
    const ComplexMatrix u = oracle::kron(random_unitary(2, rng), random_unitary(3, rng));
    const DensityMatrix rot(u * rho.matrix() * u.adjoint(), rho.dims());
    const QCReport a = qc_report(rho, quick());
    const QCReport b = qc_report(rot, quick());
    EXPECT_NEAR(a.entropic, b.entropic, 1e-8);
    EXPECT_NEAR(a.geometric, b.geometric, 1e-10);
    EXPECT_NEAR(a.rescaled, b.rescaled, 1e-10);
    EXPECT_NEAR(a.negativity, b.negativity, 1e-10);
    EXPECT_NEAR(a.rescaled_lower_bound, b.rescaled_lower_bound, 1e-10);
  }
}

TEST(Measures, HierarchyOfEntropicAndGeometricOrdering) {
  // 0 <= D_G <= alpha_A (1 - 1/d_A) style bounds: all measures lie in [0, 1] for qubit A.
  Rng rng(RngSeed{9});
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_state(Dims{2, 2}, rng.uniform_int(1, 4), rng);
    const double dG = geometric_discord_2xd(rho).value;
    const double dT = rescaled_discord(rho, dG);
    EXPECT_GE(dG, 0.0);
    EXPECT_LE(dG, 1.0 + 1e-12);
    EXPECT_GE(dT, 0.0);
    EXPECT_LE(dT, 1.0 + 1e-12);
    EXPECT_NEAR(adjusted_discord(rho, dG), dG / purity(rho), 1e-15);
  }
}

TEST(RescaledDiscord, DirectMinimizationMatchesPurityRelation) {
  Rng rng(RngSeed{10});
  for (const Dims dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 2}}) {
    const DensityMatrix rho = random_state(dims, dims.total(), rng);
    const double dG = dims.dimA == 2 ? geometric_discord_2xd(rho).value : geometric_discord_numeric(rho, quick()).value;
    EXPECT_NEAR(rescaled_discord_direct(rho, quick()).value, rescaled_discord(rho, dG), 1e-7);
  }
}

TEST(RescaledDiscord, RejectsInconsistentGeometricValue) {
  const DensityMatrix rho = random_state(2, 2, 4, RngSeed{11});
  EXPECT_THROW(rescaled_discord(rho, -0.1), InvalidArgument);
  EXPECT_THROW(rescaled_discord(rho, 2.0 * 2.0 * purity(rho)), InvalidArgument);
}

TEST(MeasureResult, NegativeFlag) {
  MeasureResult r;
  r.raw = -1e-3;
  EXPECT_TRUE(r.negative_flag());
  r.raw = -1e-9;
  EXPECT_FALSE(r.negative_flag());
}

TEST(OverlapForm, ReproducesMeasuredOverlap) {
  Rng rng(RngSeed{12});
  for (int dA : {2, 3}) {
    const DensityMatrix rho = random_state(Dims{dA, 2}, 3, rng);
    const ComplexMatrix a = overlap_form_matrix(rho);
    EXPECT_LT((a - a.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
    const ComplexMatrix u = random_unitary(dA, rng);
    Complex total = 0.0;
    for (int j = 0; j < dA; ++j) {
      const ComplexMatrix p = u.col(j) * u.col(j).adjoint();
      ComplexVector v(dA * dA);
      for (int n = 0; n < dA; ++n)
        for (int q = 0; q < dA; ++q) v(n * dA + q) = p(n, q);
      total += (v.adjoint() * a * v)(0, 0);
    }
    EXPECT_NEAR(total.real(), measured_overlap(rho, u), 1e-13);
    EXPECT_NEAR(total.imag(), 0.0, 1e-13);
  }
}

TEST(LowerBound, NeverExceedsRescaledDiscord) {
  Rng rng(RngSeed{13});
  for (const Dims dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}}) {
    for (int t = 0; t < 4; ++t) {
      const DensityMatrix rho = random_state(dims, rng.uniform_int(1, dims.total()), rng);
      const double dG = dims.dimA == 2 ? geometric_discord_2xd(rho).value : geometric_discord_numeric(rho, quick()).value;
      EXPECT_LE(rescaled_discord_lower_bound(rho), rescaled_discord(rho, dG) + 1e-8);
    }
  }
}

TEST(LowerBound, TightOnBellState) {
  EXPECT_NEAR(rescaled_discord_lower_bound(bell_state()), 1.0, 1e-12);
}

TEST(LowerBound, StrictOnGenericQubitStates) {
  // The relaxation drops the rank-one constraint on the projectors; for
  // generic 2 x d states the bound is strictly below the exact value.
  Rng rng(RngSeed{14});
  double largest_gap = 0.0;
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = random_state(Dims{2, 2}, rng.uniform_int(1, 4), rng);
    largest_gap = std::max(largest_gap, rescaled_discord(rho, geometric_discord_2xd(rho).value) -
                                            rescaled_discord_lower_bound(rho));
  }
  EXPECT_GT(largest_gap, 1e-3);
}

TEST(Negativity, WernerQubitFormula) {
  // Singlet weight lambda: N = max(0, 2 lambda - 1).
  ComplexVector singlet = ComplexVector::Zero(4);
  singlet(1) = 1.0;
  singlet(2) = -1.0;
  const ComplexMatrix ps = pure_state(singlet, Dims{2, 2}).matrix();
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  for (double l : {0.0, 0.3, 0.5, 0.7, 1.0}) {
    const ComplexMatrix w = l * ps + (1.0 - l) * (id - ps) / 3.0;
    EXPECT_NEAR(negativity(DensityMatrix(w, Dims{2, 2})), std::max(0.0, 2.0 * l - 1.0), 1e-12);
  }
}

TEST(Negativity, MatchesSingularValueOracle) {
  const DensityMatrix rho = random_state(2, 3, 2, RngSeed{15});
  Eigen::JacobiSVD<ComplexMatrix> svd(oracle::partial_transpose_a(rho.matrix(), 2, 3));
  EXPECT_NEAR(negativity(rho), std::max(0.0, svd.singularValues().sum() - 1.0), 1e-12);
}

TEST(Hierarchy, BoundEndpointsAndPureStates) {
  EXPECT_NEAR(hierarchy_bound(0.0), 0.0, 1e-15);
  EXPECT_NEAR(hierarchy_bound(1.0), 1.0, 1e-15);
  // Pure two-qubit states sit on the boundary.
  Rng rng(RngSeed{16});
  for (int t = 0; t < 20; ++t) {
    ComplexVector psi(4);
    for (int k = 0; k < 4; ++k) psi(k) = rng.complex_normal();
    const HierarchyGap g = hierarchy_gap(pure_state(psi, Dims{2, 2}));
    EXPECT_NEAR(g.gap, 0.0, 1e-9);
  }
}

TEST(Hierarchy, NoViolationsForQubitPairs) {
  Rng rng(RngSeed{17});
  for (int t = 0; t < 2000; ++t) {
    const DensityMatrix rho = random_state(Dims{2, 2}, rng.uniform_int(1, 4), rng);
    EXPECT_GE(hierarchy_gap(rho).gap, -1e-9);
  }
}

TEST(Hierarchy, ViolationSearchFindsNothingForQubitPairs) {
  ViolationSearchConfig v;
  v.descent_steps = 100;
  EXPECT_TRUE(violation_search(2, RngSeed{18}, 2000, v).empty());
}

TEST(QcReport, RecordsConvention) {
  const QCReport r = qc_report(bell_state(), quick());
  EXPECT_NE(r.convention.find("beta_A"), std::string::npos);
  EXPECT_NEAR(r.purity, 1.0, 1e-14);
  EXPECT_NEAR(geometric_discord_in_basis(bell_state(), r.optimal_basis.unitary()), 1.0, 1e-12);
}
