#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "discordlab/core.hpp"

namespace discordlab {

/// Bipartite dimension split. Subsystem A is the slow (leftmost) tensor
/// factor: basis index = a * dimB + b.
struct Dims {
  int dimA = 2;
  int dimB = 1;

  int total() const { return dimA * dimB; }
  friend bool operator==(Dims, Dims) = default;
};

enum class Subsystem { A, B };

inline constexpr double kStateTolerance = 1e-10;

/// Hermitian, positive semidefinite, unit-trace matrix with a declared
/// bipartite split. Instances are immutable once built.
class DensityMatrix {
 public:
  /// Validates every invariant; throws InvalidState on failure.
  DensityMatrix(ComplexMatrix mat, Dims dims);

  /// Skips the eigenvalue check. Only for matrices that are density matrices
  /// by construction (outputs of CPTP maps on valid inputs, GG†/Tr GG†).
  static DensityMatrix trusted(ComplexMatrix mat, Dims dims);

  const ComplexMatrix& matrix() const { return mat_; }
  Dims dims() const { return dims_; }
  int dimA() const { return dims_.dimA; }
  int dimB() const { return dims_.dimB; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  /// Block <n|rho|m> acting on B.
  ComplexMatrix block(int n, int m) const {
    return mat_.block(n * dims_.dimB, m * dims_.dimB, dims_.dimB, dims_.dimB);
  }

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix mat, Dims dims, Unchecked);

  ComplexMatrix mat_;
  Dims dims_;
};

/// Violations of the density-matrix invariants, empty when valid.
std::vector<std::string> check_density_matrix(const ComplexMatrix& mat, Dims dims,
                                              double tol = kStateTolerance);

/// Orthonormal basis of subsystem A, stored as the columns of a unitary.
class ProjectiveMeasurement {
 public:
  explicit ProjectiveMeasurement(ComplexMatrix basis);

  static ProjectiveMeasurement computational(int dim);

  int dim() const { return static_cast<int>(basis_.rows()); }
  const ComplexMatrix& unitary() const { return basis_; }
  ComplexVector vector(int j) const { return basis_.col(j); }
  ComplexMatrix projector(int j) const { return basis_.col(j) * basis_.col(j).adjoint(); }

 private:
  ComplexMatrix basis_;
};

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Appends `ancilla` to the B side: (A)(B) -> (A)(B C).
DensityMatrix append_ancilla(const DensityMatrix& rho, const DensityMatrix& ancilla);

/// Reduced state of the kept subsystem, i.e. `traced` is summed out. The
/// result carries dims {d_kept, 1}.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced);

ComplexMatrix partial_transpose(const ComplexMatrix& mat, Dims dims, Subsystem which);
inline ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem which) {
  return partial_transpose(rho.matrix(), rho.dims(), which);
}

struct MatrixNorms {
  double hs = 0.0;
  double trace = 0.0;
};

/// Hilbert-Schmidt norm and trace norm (sum of singular values).
MatrixNorms matrix_norms(const ComplexMatrix& m);

double purity(const DensityMatrix& rho);

/// Eigenvalues of a Hermitian matrix in ascending order.
RealVector hermitian_eigenvalues(const ComplexMatrix& h);

/// Shannon entropy in bits of a spectrum; entries are clamped to [0, 1].
double entropy_bits(const RealVector& spectrum);
double von_neumann_entropy(const ComplexMatrix& rho);
inline double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.matrix());
}

/// || rho1/||rho1|| - rho2/||rho2|| || in Hilbert-Schmidt norm.
double rescaled_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// sum_j (Pi_j ⊗ I) rho (Pi_j ⊗ I) for a rank-1 projective measurement on A.
DensityMatrix apply_measurement(const DensityMatrix& rho, const ProjectiveMeasurement& pi);

/// Hilbert-Schmidt induced random state GG†/Tr(GG†), G of size (dA dB) x rank.
DensityMatrix random_state(int dimA, int dimB, int rank, RngSeed seed);
DensityMatrix random_state(Dims dims, int rank, Rng& rng);

/// Ginibre factor used by random_state, exposed for perturbative searches.
ComplexMatrix ginibre(int rows, int cols, Rng& rng);
DensityMatrix state_from_factor(const ComplexMatrix& g, Dims dims);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(int dim, Rng& rng);

/// Pure-state projector |psi><psi| / <psi|psi>.
DensityMatrix pure_state(const ComplexVector& psi, Dims dims);

/// JSON debug form {"rows", "cols", "re": [...], "im": [...]}, row-major.
nlohmann::json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace discordlab
