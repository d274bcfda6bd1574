#pragma once

// Independent reference computations used by the tests. They avoid the
// library's own code paths: explicit index loops instead of block views,
// generic (non-Hermitian) eigensolvers, textbook closed forms.

#include <algorithm>
#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace oracle {

using C = std::complex<double>;
using CMat = Eigen::MatrixXcd;

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Tr_B when trace_b is true, Tr_A otherwise.
inline CMat partial_trace(const CMat& rho, int dA, int dB, bool trace_b) {
  const int keep = trace_b ? dA : dB;
  CMat out = CMat::Zero(keep, keep);
  for (int i = 0; i < keep; ++i)
    for (int j = 0; j < keep; ++j)
      for (int k = 0; k < (trace_b ? dB : dA); ++k)
        out(i, j) += trace_b ? rho(i * dB + k, j * dB + k) : rho(k * dB + i, k * dB + j);
  return out;
}

inline CMat partial_transpose_a(const CMat& rho, int dA, int dB) {
  CMat out(rho.rows(), rho.cols());
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dA; ++j)
      for (int k = 0; k < dB; ++k)
        for (int l = 0; l < dB; ++l) out(j * dB + k, i * dB + l) = rho(i * dB + k, j * dB + l);
  return out;
}

/// sum_j (P_j ⊗ I) rho (P_j ⊗ I) with P_j = |u_j><u_j|, u_j the columns of u.
inline CMat measure(const CMat& rho, int dA, int dB, const CMat& u) {
  CMat out = CMat::Zero(rho.rows(), rho.cols());
  const CMat id = CMat::Identity(dB, dB);
  for (int j = 0; j < dA; ++j) {
    const CMat p = kron(u.col(j) * u.col(j).adjoint(), id);
    out += p * rho * p;
  }
  return out;
}

/// Von Neumann entropy in bits from a general complex eigensolver.
inline double entropy_bits(const CMat& rho) {
  Eigen::ComplexEigenSolver<CMat> es(rho);
  double s = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double p = es.eigenvalues()(k).real();
    if (p > 1e-15) s -= p * std::log2(p);
  }
  return s;
}

inline CMat pauli(int k) {
  CMat s(2, 2);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, C(0, -1), C(0, 1), 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: s << 1, 0, 0, 1;
  }
  return s;
}

/// (I + sum_i c_i sigma_i ⊗ sigma_i)/4.
inline CMat bell_diagonal(double c1, double c2, double c3) {
  CMat rho = kron(pauli(0), pauli(0));
  rho += c1 * kron(pauli(1), pauli(1)) + c2 * kron(pauli(2), pauli(2)) + c3 * kron(pauli(3), pauli(3));
  return rho / 4.0;
}

/// Geometric discord (alpha = 2 normalization) of a Bell-diagonal state:
/// (c1^2 + c2^2 + c3^2 - max c_i^2)/2.
inline double bell_diagonal_geometric(double c1, double c2, double c3) {
  const double m = std::max({c1 * c1, c2 * c2, c3 * c3});
  return 0.5 * (c1 * c1 + c2 * c2 + c3 * c3 - m);
}

/// Coherent state amplitudes e^{-|b|^2/2} b^n / sqrt(n!).
inline Eigen::VectorXcd coherent(C beta, int dim) {
  Eigen::VectorXcd v(dim);
  C term = std::exp(-0.5 * std::norm(beta));
  for (int n = 0; n < dim; ++n) {
    v(n) = term;
    term *= beta / std::sqrt(n + 1.0);
  }
  return v;
}

}  // namespace oracle
