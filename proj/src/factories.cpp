#include "discordlab/factories.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "discordlab/optimize.hpp"

namespace discordlab {

DensityMatrix classical_quantum_state(std::span<const double> probs,
                                      std::span<const DensityMatrix> states) {
  if (probs.empty() || probs.size() != states.size())
    throw DimensionMismatch("classical_quantum_state: need one state per probability");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw InvalidArgument("classical_quantum_state: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw InvalidArgument("classical_quantum_state: probabilities sum to " + std::to_string(total));
  const int dB = states.front().dim();
  for (const auto& s : states)
    if (s.dim() != dB) throw DimensionMismatch("classical_quantum_state: unequal B dimensions");

  const int k = static_cast<int>(probs.size());
  ComplexMatrix chi = ComplexMatrix::Zero(k * dB, k * dB);
  for (int i = 0; i < k; ++i) chi.block(i * dB, i * dB, dB, dB) = probs[i] * states[i].matrix();
  return DensityMatrix::trusted(std::move(chi), Dims{k, dB});
}

ComplexMatrix laf2_unitary() {
  const double t = 3.0 * std::numbers::pi / 5.0;
  const Complex a = -std::pow(std::polar(1.0, -t), 4);
  const Complex b = std::pow(std::polar(1.0, t), 8);
  ComplexVector diag(8);
  diag << a, a, b, 1.0, a, b, 1.0, 1.0;
  return diag.asDiagonal();
}

ComplexMatrix traceless_unitary(int n, RngSeed seed) {
  if (n < 2 || n > 20) throw InvalidArgument("traceless_unitary: need 2 <= n <= 20");
  const int dim = 1 << n;
  Rng rng(seed);
  const ComplexMatrix v = random_unitary(dim, rng);
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  ComplexVector phases(dim);
  for (int k = 0; k < dim; ++k) phases(k) = std::polar(1.0, 2.0 * std::numbers::pi * k / dim + phi);
  return v * phases.asDiagonal() * v.adjoint();
}

ComplexMatrix dqc1_unitary(const Dqc1Config& cfg) {
  if (cfg.n < 1 || cfg.n > 12) throw InvalidArgument("dqc1: need 1 <= n <= 12");
  const int dim = 1 << cfg.n;
  ComplexMatrix u;
  if (std::holds_alternative<std::monostate>(cfg.unitary)) {
    if (cfg.n != 3) throw InvalidArgument("dqc1: the laf2 unitary acts on n = 3 qubits");
    u = laf2_unitary();
  } else if (const auto* t = std::get_if<TracelessRandom>(&cfg.unitary)) {
    u = traceless_unitary(cfg.n, t->seed);
  } else {
    u = std::get<ComplexMatrix>(cfg.unitary);
  }
  if (u.rows() != dim || u.cols() != dim)
    throw DimensionMismatch("dqc1: unitary must be 2^n x 2^n");
  if ((u * u.adjoint() - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidArgument("dqc1: matrix is not unitary");
  return u;
}

DensityMatrix dqc1_output_state(const Dqc1Config& cfg) {
  if (!(cfg.mu >= 0.0 && cfg.mu <= 1.0)) throw InvalidArgument("dqc1: mu must lie in [0, 1]");
  const ComplexMatrix u = dqc1_unitary(cfg);
  const int dim = static_cast<int>(u.rows());
  ComplexMatrix rho(2 * dim, 2 * dim);
  rho.topLeftCorner(dim, dim).setIdentity();
  rho.bottomRightCorner(dim, dim).setIdentity();
  rho.topRightCorner(dim, dim) = cfg.mu * u.adjoint();
  rho.bottomLeftCorner(dim, dim) = cfg.mu * u;
  rho /= 2.0 * dim;
  return DensityMatrix(std::move(rho), Dims{2, dim});
}

double dqc1_entropic_approx(double mu) {
  if (!(mu > 0.0 && mu <= 1.0)) throw InvalidArgument("dqc1_entropic_approx: mu must lie in (0, 1]");
  auto h = [](double x) { return x > 0.0 ? x * std::log2(x) : 0.0; };
  const double s = 1.0 - std::sqrt(1.0 - mu * mu);
  return 2.0 + h(0.5 * (1.0 - mu)) + h(0.5 * (1.0 + mu)) - std::log2(s) - s * std::numbers::log2e;
}

ComplexMatrix swap_operator(int d) {
  if (d < 1) throw InvalidArgument("swap_operator: d must be >= 1");
  ComplexMatrix f = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) f(j * d + i, i * d + j) = 1.0;
  return f;
}

DensityMatrix werner_state(double lambda, int d) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidArgument("werner_state: lambda must lie in [0, 1]");
  if (d < 2 || d > 16) throw InvalidArgument("werner_state: need 2 <= d <= 16");
  const ComplexMatrix id = ComplexMatrix::Identity(d * d, d * d);
  const ComplexMatrix f = swap_operator(d);
  const double cp = 2.0 * (1.0 - lambda) / (d * (d + 1.0));
  const double cm = 2.0 * lambda / (d * (d - 1.0));
  ComplexMatrix rho = cp * 0.5 * (id + f) + cm * 0.5 * (id - f);
  return DensityMatrix(std::move(rho), Dims{d, d});
}

double werner_purity(double lambda, int d) {
  return 2.0 * (1.0 - lambda) * (1.0 - lambda) / (d * (d + 1.0)) + 2.0 * lambda * lambda / (d * (d - 1.0));
}

int QubitOscConfig::minimum_cutoff() const {
  return static_cast<int>(std::ceil(4.0 * (std::norm(beta) + nbar) + 20.0));
}

ComplexMatrix displacement_operator(Complex beta, int dim) {
  if (dim < 1) throw InvalidArgument("displacement_operator: dim must be >= 1");
  // D = exp(i H) with H = -i (beta a† - beta* a) Hermitian.
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  const Complex mi(0.0, -1.0);
  for (int k = 0; k + 1 < dim; ++k) {
    const double s = std::sqrt(k + 1.0);
    h(k + 1, k) = mi * beta * s;
    h(k, k + 1) = -mi * std::conj(beta) * s;
  }
  return exp_i_hermitian(h);
}

RealVector thermal_populations(double nbar, int dim) {
  if (!(nbar >= 0.0)) throw InvalidArgument("thermal_populations: nbar must be >= 0");
  RealVector pop = RealVector::Zero(dim);
  if (nbar == 0.0) {
    if (dim > 0) pop(0) = 1.0;
    return pop;
  }
  const double q = nbar / (nbar + 1.0);
  double w = 1.0 / (nbar + 1.0);
  for (int k = 0; k < dim; ++k, w *= q) pop(k) = w;
  return pop;
}

namespace {

void validate(const QubitOscConfig& cfg) {
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw InvalidArgument("qubit-oscillator: p must lie in [0, 1]");
  if (std::norm(cfg.r) > cfg.p * (1.0 - cfg.p) + 1e-12)
    throw InvalidArgument("qubit-oscillator: |r|^2 must not exceed p(1-p)");
  if (!(cfg.nbar >= 0.0) || !std::isfinite(std::abs(cfg.beta)))
    throw InvalidArgument("qubit-oscillator: nbar must be >= 0 and beta finite");
  if (cfg.cutoff < 0) throw InvalidArgument("qubit-oscillator: cutoff must be >= 0");
  if (cfg.cutoff > 0 && cfg.cutoff < cfg.minimum_cutoff())
    throw InvalidArgument("qubit-oscillator: cutoff " + std::to_string(cfg.cutoff) +
                          " is below the adequacy heuristic " + std::to_string(cfg.minimum_cutoff()));
}

}  // namespace

QubitOscState qubit_oscillator_state(const QubitOscConfig& cfg) {
  validate(cfg);
  const bool automatic = cfg.cutoff == 0;
  int target = automatic ? cfg.minimum_cutoff() : cfg.cutoff;

  for (;;) {
    // The exponential of the truncated generator is only trusted well below
    // the working dimension, so work in a padded space.
    const int work = target + std::max(64, target / 2);
    const ComplexMatrix disp = displacement_operator(cfg.beta, work);
    const RealVector amp = thermal_populations(cfg.nbar, work).cwiseSqrt();
    const ComplexMatrix xfull = disp * amp.asDiagonal();
    const ComplexMatrix yfull = disp.adjoint() * amp.asDiagonal();

    // Cumulative trace captured by the first c Fock levels.
    const RealVector wx = xfull.rowwise().squaredNorm();
    const RealVector wy = yfull.rowwise().squaredNorm();
    int c = automatic ? cfg.minimum_cutoff() : cfg.cutoff;
    double captured = cfg.p * wx.head(c).sum() + (1.0 - cfg.p) * wy.head(c).sum();
    if (automatic) {
      const int limit = target + (work - target) / 2;
      while (1.0 - captured > kMaxTraceDeficit && c < limit) {
        captured += cfg.p * wx(c) + (1.0 - cfg.p) * wy(c);
        ++c;
      }
      if (1.0 - captured > kMaxTraceDeficit) {
        target = 2 * target;
        if (target > 8192) throw TruncationInadequate("qubit-oscillator: no adequate cutoff below 8192");
        continue;
      }
    }
    const double deficit = 1.0 - captured;
    if (deficit > kMaxTraceDeficit)
      throw TruncationInadequate("qubit-oscillator: trace deficit " + std::to_string(deficit) +
                                 " at cutoff " + std::to_string(c));

    const ComplexMatrix x = xfull.topRows(c);
    const ComplexMatrix y = yfull.topRows(c);
    ComplexMatrix rho(2 * c, 2 * c);
    rho.topLeftCorner(c, c) = cfg.p * x * x.adjoint();
    rho.bottomRightCorner(c, c) = (1.0 - cfg.p) * y * y.adjoint();
    rho.topRightCorner(c, c) = cfg.r * x * y.adjoint();
    rho.bottomLeftCorner(c, c) = rho.topRightCorner(c, c).adjoint();
    rho /= captured;
    return QubitOscState{DensityMatrix(std::move(rho), Dims{2, c}), deficit, c};
  }
}

}  // namespace discordlab
