#include "discordlab/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace discordlab {

NormalizationConstants NormalizationConstants::for_dim(int dimA) {
  if (dimA < 2) throw InvalidArgument("normalization constants need d_A >= 2");
  NormalizationConstants c;
  c.alphaA = static_cast<double>(dimA) / (dimA - 1.0);
  constexpr double dg_max = 1.0;
  c.betaA = dg_max / (2.0 - 2.0 * std::sqrt(1.0 - dg_max / c.alphaA));
  return c;
}

namespace {

void require_bipartite(const DensityMatrix& rho, const char* what) {
  if (rho.dimA() < 2) throw DimensionMismatch(std::string(what) + ": needs d_A >= 2");
}

void require_optimizable(const DensityMatrix& rho, const char* what) {
  require_bipartite(rho, what);
  if (rho.dimA() > 4) throw InvalidArgument(std::string(what) + ": measurement optimization needs d_A <= 4");
}

// The d_A^2 blocks rho_nm = <n|rho|m>, each d_B x d_B.
class Blocks {
 public:
  explicit Blocks(const DensityMatrix& rho) : dA_(rho.dimA()), dB_(rho.dimB()) {
    blocks_.reserve(static_cast<std::size_t>(dA_ * dA_));
    for (int n = 0; n < dA_; ++n)
      for (int m = 0; m < dA_; ++m) blocks_.push_back(rho.block(n, m));
  }

  const ComplexMatrix& operator()(int n, int m) const {
    return blocks_[static_cast<std::size_t>(n * dA_ + m)];
  }

  /// Unnormalized conditional state on B for outcome j.
  ComplexMatrix conditional(const ComplexMatrix& u, int j) const {
    ComplexMatrix mj = ComplexMatrix::Zero(dB_, dB_);
    for (int n = 0; n < dA_; ++n)
      for (int m = 0; m < dA_; ++m) {
        const Complex c = std::conj(u(n, j)) * u(m, j);
        if (std::abs(c) > 0.0) mj.noalias() += c * (*this)(n, m);
      }
    return mj;
  }

  int dimA() const { return dA_; }

 private:
  int dA_;
  int dB_;
  std::vector<ComplexMatrix> blocks_;
};

double trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  return (x.transpose().cwiseProduct(y)).sum().real();
}

double conditional_entropy_blocks(const Blocks& blocks, const ComplexMatrix& u) {
  double total = 0.0;
  for (int j = 0; j < blocks.dimA(); ++j) {
    ComplexMatrix mj = blocks.conditional(u, j);
    const double pj = mj.trace().real();
    if (pj < 1e-12) continue;
    mj /= pj;
    total += pj * von_neumann_entropy(mj);
  }
  return total;
}

double measured_overlap_blocks(const Blocks& blocks, const ComplexMatrix& u) {
  double total = 0.0;
  for (int j = 0; j < blocks.dimA(); ++j) total += blocks.conditional(u, j).squaredNorm();
  return total;
}

double clamp_measure(double raw) { return std::max(0.0, raw); }

}  // namespace

double conditional_entropy(const DensityMatrix& rho, const ComplexMatrix& u) {
  return conditional_entropy_blocks(Blocks(rho), u);
}

double measured_overlap(const DensityMatrix& rho, const ComplexMatrix& u) {
  return measured_overlap_blocks(Blocks(rho), u);
}

double hs_objective(const DensityMatrix& rho, const ComplexMatrix& u) {
  return purity(rho) - measured_overlap(rho, u);
}

double rescaled_objective(const DensityMatrix& rho, const ComplexMatrix& u) {
  const double ratio = measured_overlap(rho, u) / purity(rho);
  return 2.0 - 2.0 * std::sqrt(std::clamp(ratio, 0.0, 1.0));
}

MeasureResult entropic_discord(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_optimizable(rho, "entropic_discord");
  const Blocks blocks(rho);
  const double sA = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  const double sAB = von_neumann_entropy(rho);
  const auto search = minimize_over_measurements(
      rho.dimA(), [&](const ComplexMatrix& u) { return conditional_entropy_blocks(blocks, u); }, cfg);
  MeasureResult r;
  r.raw = sA - sAB + search.value;
  r.value = clamp_measure(r.raw);
  r.basis = ProjectiveMeasurement(search.basis);
  r.evaluations = search.evaluations;
  return r;
}

double entropic_discord_in_basis(const DensityMatrix& rho, const ComplexMatrix& u) {
  require_bipartite(rho, "entropic_discord_in_basis");
  const double sA = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  return clamp_measure(sA - von_neumann_entropy(rho) + conditional_entropy(rho, u));
}

BlochDiscord geometric_discord_2xd(const DensityMatrix& rho) {
  if (rho.dimA() != 2) throw DimensionMismatch("geometric_discord_2xd: needs d_A = 2");
  const Complex i1(0.0, 1.0);
  const ComplexMatrix r00 = rho.block(0, 0);
  const ComplexMatrix r01 = rho.block(0, 1);
  const ComplexMatrix r10 = rho.block(1, 0);
  const ComplexMatrix r11 = rho.block(1, 1);
  // v_i = Tr_A(sigma_i rho).
  const std::array<ComplexMatrix, 3> v = {r01 + r10, i1 * (r01 - r10), r00 - r11};
  BlochDiscord out;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      out.S(a, b) = trace_of_product(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
      out.S(b, a) = out.S(a, b);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(out.S);
  out.value = clamp_measure(out.S.trace() - es.eigenvalues()(2));
  out.axis = es.eigenvectors().col(2);
  return out;
}

MeasureResult geometric_discord_numeric(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_optimizable(rho, "geometric_discord_numeric");
  const Blocks blocks(rho);
  const double p = purity(rho);
  const auto search = minimize_over_measurements(
      rho.dimA(), [&](const ComplexMatrix& u) { return p - measured_overlap_blocks(blocks, u); }, cfg);
  const auto norm = NormalizationConstants::for_dim(rho.dimA());
  MeasureResult r;
  r.raw = norm.alphaA * search.value;
  r.value = clamp_measure(r.raw);
  r.basis = ProjectiveMeasurement(search.basis);
  r.evaluations = search.evaluations;
  return r;
}

double geometric_discord_in_basis(const DensityMatrix& rho, const ComplexMatrix& u) {
  require_bipartite(rho, "geometric_discord_in_basis");
  return clamp_measure(NormalizationConstants::for_dim(rho.dimA()).alphaA * hs_objective(rho, u));
}

double rescaled_discord(const DensityMatrix& rho, double dG) {
  require_bipartite(rho, "rescaled_discord");
  const auto norm = NormalizationConstants::for_dim(rho.dimA());
  const double p = purity(rho);
  const double radicand = 1.0 - dG / (norm.alphaA * p);
  if (dG < -1e-9 || radicand < -1e-9) {
    std::ostringstream os;
    os << "rescaled_discord: D_G = " << dG << " inconsistent with purity " << p;
    throw InvalidArgument(os.str());
  }
  const double r = std::clamp(radicand, 0.0, 1.0);
  return clamp_measure(norm.betaA * (2.0 - 2.0 * std::sqrt(r)));
}

MeasureResult rescaled_discord_direct(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_optimizable(rho, "rescaled_discord_direct");
  const auto search = minimize_over_measurements(
      rho.dimA(),
      [&](const ComplexMatrix& u) {
        const double d = rescaled_distance(rho, apply_measurement(rho, ProjectiveMeasurement(u)));
        return d * d;
      },
      cfg);
  MeasureResult r;
  r.raw = NormalizationConstants::for_dim(rho.dimA()).betaA * search.value;
  r.value = clamp_measure(r.raw);
  r.basis = ProjectiveMeasurement(search.basis);
  r.evaluations = search.evaluations;
  return r;
}

double adjusted_discord(const DensityMatrix& rho, double dG) { return dG / purity(rho); }

ComplexMatrix overlap_form_matrix(const DensityMatrix& rho) {
  require_bipartite(rho, "overlap_form_matrix");
  const int dA = rho.dimA();
  const Blocks blocks(rho);
  ComplexMatrix a(dA * dA, dA * dA);
  for (int n = 0; n < dA; ++n)
    for (int q = 0; q < dA; ++q)
      for (int m = 0; m < dA; ++m)
        for (int p = 0; p < dA; ++p)
          a(n * dA + q, m * dA + p) = (blocks(n, m).transpose().cwiseProduct(blocks(p, q))).sum();
  return a;
}

double rescaled_discord_lower_bound(const DensityMatrix& rho) {
  require_bipartite(rho, "rescaled_discord_lower_bound");
  const int dA = rho.dimA();
  if (dA * dA > 256) throw InvalidArgument("rescaled_discord_lower_bound: d_A^2 must be <= 256");
  const ComplexMatrix a = overlap_form_matrix(rho);
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw Error("rescaled_discord_lower_bound: overlap form is not Hermitian");
  const RealVector ev = hermitian_eigenvalues(0.5 * (a + a.adjoint()));
  double top = 0.0;
  for (int k = 0; k < dA; ++k) top += ev(ev.size() - 1 - k);
  const double beta = NormalizationConstants::for_dim(dA).betaA;
  return std::max(0.0, beta * (2.0 - 2.0 * std::sqrt(std::max(0.0, top / purity(rho)))));
}

double negativity(const DensityMatrix& rho) {
  require_bipartite(rho, "negativity");
  const ComplexMatrix pt = partial_transpose(rho, Subsystem::A);
  const double tn = hermitian_eigenvalues(pt).cwiseAbs().sum();
  const double n = (tn - 1.0) / (rho.dimA() - 1.0);
  return n < 1e-12 ? 0.0 : n;
}

double hierarchy_bound(double n) {
  return (2.0 - std::sqrt(std::max(0.0, 4.0 - 2.0 * n * n))) / (2.0 - std::numbers::sqrt2);
}

HierarchyGap hierarchy_gap(const DensityMatrix& rho) {
  if (rho.dimA() != 2) throw DimensionMismatch("hierarchy_gap: needs d_A = 2");
  HierarchyGap g;
  g.dT = rescaled_discord(rho, geometric_discord_2xd(rho).value);
  g.n = negativity(rho);
  g.bound = hierarchy_bound(g.n);
  g.gap = g.dT - g.bound;
  return g;
}

namespace {

double verified_hierarchy_gap(const DensityMatrix& rho) {
  OptimizerConfig tight;
  tight.tol = 1e-12;
  tight.max_iters = 5000;
  tight.multistarts = 8;
  const double dG = geometric_discord_numeric(rho, tight).value;
  const double dT = rescaled_discord(rho, dG);
  Eigen::BDCSVD<ComplexMatrix> svd(partial_transpose(rho, Subsystem::A));
  const double n = std::max(0.0, svd.singularValues().sum() - 1.0);
  return dT - hierarchy_bound(n);
}

}  // namespace

std::vector<HierarchyViolation> violation_search(int dimB, RngSeed seed, long budget,
                                                 const ViolationSearchConfig& vcfg) {
  if (dimB < 2) throw InvalidArgument("violation_search: d_B must be >= 2");
  const Dims dims{2, dimB};
  Rng rng(seed);
  std::vector<HierarchyViolation> found;
  long used = 0;
  while (used < budget && static_cast<int>(found.size()) < vcfg.max_results) {
    const int rank = rng.uniform_int(1, dims.total());
    ComplexMatrix g = ginibre(dims.total(), rank, rng);
    HierarchyGap best = hierarchy_gap(state_from_factor(g, dims));
    ++used;
    for (int step = 0; step < vcfg.descent_steps && used < budget; ++step) {
      ComplexMatrix trial = g + vcfg.perturbation * ginibre(dims.total(), rank, rng);
      const HierarchyGap h = hierarchy_gap(state_from_factor(trial, dims));
      ++used;
      if (h.gap < best.gap) {
        best = h;
        g = std::move(trial);
      }
    }
    if (best.gap < vcfg.threshold) {
      DensityMatrix state = state_from_factor(g, dims);
      const double verified = verified_hierarchy_gap(state);
      if (verified < vcfg.threshold) found.push_back({std::move(state), best, verified});
    }
  }
  return found;
}

QCReport qc_report(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  require_optimizable(rho, "qc_report");
  QCReport rep;
  const auto norm = NormalizationConstants::for_dim(rho.dimA());
  rep.purity = purity(rho);
  rep.negativity = negativity(rho);

  const MeasureResult ent = entropic_discord(rho, cfg);
  rep.entropic = ent.value;
  rep.optimizer_evals += ent.evaluations;
  rep.negative_flag = ent.negative_flag();

  if (rho.dimA() == 2) {
    const BlochDiscord bloch = geometric_discord_2xd(rho);
    rep.geometric = bloch.value;
    const Eigen::Vector3d& n = bloch.axis;
    rep.optimal_basis = ProjectiveMeasurement(
        qubit_axis_basis(std::acos(std::clamp(n.z(), -1.0, 1.0)), std::atan2(n.y(), n.x())));
  } else {
    const MeasureResult geo = geometric_discord_numeric(rho, cfg);
    rep.geometric = geo.value;
    rep.optimal_basis = geo.basis;
    rep.optimizer_evals += geo.evaluations;
    rep.negative_flag = rep.negative_flag || geo.negative_flag();
  }
  rep.adjusted = adjusted_discord(rho, rep.geometric);
  rep.rescaled = rescaled_discord(rho, rep.geometric);
  rep.rescaled_lower_bound = rescaled_discord_lower_bound(rho);

  std::ostringstream os;
  os << "finite-dimensional: alpha_A=" << norm.alphaA << " beta_A=" << norm.betaA;
  rep.convention = os.str();
  return rep;
}

}  // namespace discordlab
