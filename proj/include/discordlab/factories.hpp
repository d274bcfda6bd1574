#pragma once

#include <span>
#include <variant>

#include "discordlab/state.hpp"

namespace discordlab {

/// sum_i p_i |i><i| ⊗ rho_B^i in the computational basis of A.
DensityMatrix classical_quantum_state(std::span<const double> probs,
                                      std::span<const DensityMatrix> states);

// DQC1 ---------------------------------------------------------------------

/// The three-qubit diagonal unitary diag(a, a, b, 1, a, b, 1, 1) with
/// a = -(e^{-i 3pi/5})^4 and b = (e^{i 3pi/5})^8.
ComplexMatrix laf2_unitary();

struct TracelessRandom {
  RngSeed seed;
};

struct Dqc1Config {
  double mu = 1.0;
  int n = 3;
  std::variant<std::monostate, TracelessRandom, ComplexMatrix> unitary;  // monostate = laf2
};

/// V diag(e^{i(2 pi k / 2^n + phi)}) V† with V Haar-random and phi a random
/// global phase; Tr U = Tr U^2 = 0 for n >= 2.
ComplexMatrix traceless_unitary(int n, RngSeed seed);

ComplexMatrix dqc1_unitary(const Dqc1Config& cfg);

/// (1/2^{n+1}) [[I, mu U†], [mu U, I]] with dims (2, 2^n).
DensityMatrix dqc1_output_state(const Dqc1Config& cfg);

/// Approximate entropic discord of the DQC1 output for traceless unitaries,
/// valid for mu in (0, 1].
double dqc1_entropic_approx(double mu);

// Werner -------------------------------------------------------------------

/// Swap operator F|i>|j> = |j>|i> on C^d ⊗ C^d.
ComplexMatrix swap_operator(int d);

DensityMatrix werner_state(double lambda, int d);

/// Closed-form purity of werner_state(lambda, d).
double werner_purity(double lambda, int d);

// Qubit-oscillator -----------------------------------------------------------

struct QubitOscConfig {
  double p = 0.5;
  Complex r{0.0, 0.0};
  Complex beta{0.0, 0.0};
  double nbar = 0.0;
  int cutoff = 0;  // 0 selects the smallest adequate cutoff automatically

  /// 4(|beta|^2 + nbar) + 20.
  int minimum_cutoff() const;
};

struct QubitOscState {
  DensityMatrix state;
  double trace_deficit = 0.0;  // 1 - trace before renormalization
  int cutoff = 0;
};

inline constexpr double kMaxTraceDeficit = 1e-6;

/// Displacement operator exp(beta a† - beta* a) on a Fock space of `dim`
/// levels, exponentiated exactly within the truncation.
ComplexMatrix displacement_operator(Complex beta, int dim);

/// Thermal state with mean occupation nbar truncated to `dim` levels (not renormalized).
RealVector thermal_populations(double nbar, int dim);

/// p|0><0| ⊗ D rho0 D† + (1-p)|1><1| ⊗ D† rho0 D + r|0><1| ⊗ D rho0 D
///   + r*|1><0| ⊗ D† rho0 D†, with rho0 thermal, in a truncated Fock basis.
QubitOscState qubit_oscillator_state(const QubitOscConfig& cfg);

}  // namespace discordlab
