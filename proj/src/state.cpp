#include "discordlab/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace discordlab {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionMismatch(os.str());
  }
}

void require_dims(const ComplexMatrix& m, Dims dims, const char* what) {
  require_square(m, what);
  if (dims.dimA < 1 || dims.dimB < 1 || m.rows() != dims.total()) {
    std::ostringstream os;
    os << what << ": matrix of size " << m.rows() << " does not match dims " << dims.dimA
       << "x" << dims.dimB;
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

std::vector<std::string> check_density_matrix(const ComplexMatrix& mat, Dims dims, double tol) {
  std::vector<std::string> problems;
  if (mat.rows() != mat.cols()) {
    problems.emplace_back("matrix is not square");
    return problems;
  }
  if (dims.dimA < 1 || dims.dimB < 1 || mat.rows() != dims.total()) {
    problems.emplace_back("dimension does not equal dimA*dimB");
    return problems;
  }
  if (!mat.allFinite()) {
    problems.emplace_back("non-finite entries");
    return problems;
  }
  const double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) problems.emplace_back("not Hermitian (deviation " + std::to_string(herm) + ")");
  const double tr = mat.trace().real();
  if (std::abs(tr - 1.0) > tol) problems.emplace_back("trace " + std::to_string(tr) + " != 1");
  if (problems.empty()) {
    const double lmin = hermitian_eigenvalues(mat)(0);
    if (lmin < -tol) problems.emplace_back("negative eigenvalue " + std::to_string(lmin));
  }
  return problems;
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, Dims dims) : mat_(std::move(mat)), dims_(dims) {
  const auto problems = check_density_matrix(mat_, dims_);
  if (!problems.empty()) {
    std::string msg = "invalid density matrix:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw InvalidState(msg);
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, Dims dims, Unchecked)
    : mat_(std::move(mat)), dims_(dims) {
  require_dims(mat_, dims_, "DensityMatrix");
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix mat, Dims dims) {
  // Symmetrize away round-off so downstream eigensolvers see exact Hermitian input.
  ComplexMatrix herm = 0.5 * (mat + mat.adjoint());
  return DensityMatrix(std::move(herm), dims, Unchecked{});
}

ProjectiveMeasurement::ProjectiveMeasurement(ComplexMatrix basis) : basis_(std::move(basis)) {
  require_square(basis_, "ProjectiveMeasurement");
  const ComplexMatrix gram = basis_.adjoint() * basis_;
  const double dev = (gram - ComplexMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
  if (dev > kStateTolerance) {
    throw InvalidArgument("ProjectiveMeasurement: basis not orthonormal (deviation " +
                          std::to_string(dev) + ")");
  }
}

ProjectiveMeasurement ProjectiveMeasurement::computational(int dim) {
  return ProjectiveMeasurement(ComplexMatrix::Identity(dim, dim));
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::trusted(tensor_product(a.matrix(), b.matrix()),
                                Dims{a.dim(), b.dim()});
}

DensityMatrix append_ancilla(const DensityMatrix& rho, const DensityMatrix& ancilla) {
  return DensityMatrix::trusted(tensor_product(rho.matrix(), ancilla.matrix()),
                                Dims{rho.dimA(), rho.dimB() * ancilla.dim()});
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem traced) {
  const int dA = rho.dimA();
  const int dB = rho.dimB();
  const ComplexMatrix& m = rho.matrix();
  if (traced == Subsystem::B) {
    ComplexMatrix out(dA, dA);
    for (int n = 0; n < dA; ++n)
      for (int k = 0; k < dA; ++k) out(n, k) = m.block(n * dB, k * dB, dB, dB).trace();
    return DensityMatrix::trusted(std::move(out), Dims{dA, 1});
  }
  ComplexMatrix out = ComplexMatrix::Zero(dB, dB);
  for (int n = 0; n < dA; ++n) out += m.block(n * dB, n * dB, dB, dB);
  return DensityMatrix::trusted(std::move(out), Dims{dB, 1});
}

ComplexMatrix partial_transpose(const ComplexMatrix& mat, Dims dims, Subsystem which) {
  require_dims(mat, dims, "partial_transpose");
  const int dA = dims.dimA;
  const int dB = dims.dimB;
  ComplexMatrix out(mat.rows(), mat.cols());
  for (int a = 0; a < dA; ++a)
    for (int c = 0; c < dA; ++c) {
      const auto blk = mat.block(a * dB, c * dB, dB, dB);
      if (which == Subsystem::A)
        out.block(c * dB, a * dB, dB, dB) = blk;
      else
        out.block(a * dB, c * dB, dB, dB) = blk.transpose();
    }
  return out;
}

MatrixNorms matrix_norms(const ComplexMatrix& m) {
  require_square(m, "matrix_norms");
  MatrixNorms n;
  n.hs = m.norm();
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-14 * (1.0 + n.hs)) {
    n.trace = hermitian_eigenvalues(0.5 * (m + m.adjoint())).cwiseAbs().sum();
  } else {
    Eigen::BDCSVD<ComplexMatrix> svd(m);
    n.trace = svd.singularValues().sum();
  }
  return n;
}

double purity(const DensityMatrix& rho) {
  // Tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

RealVector hermitian_eigenvalues(const ComplexMatrix& h) {
  require_square(h, "hermitian_eigenvalues");
  if (h.rows() == 1) return RealVector::Constant(1, h(0, 0).real());
  if (h.rows() == 2) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double off = std::abs(h(0, 1));
    const double mean = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), off);
    RealVector ev(2);
    ev << mean - rad, mean + rad;
    return ev;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double entropy_bits(const RealVector& spectrum) {
  double s = 0.0;
  for (double l : spectrum) {
    const double x = std::clamp(l, 0.0, 1.0);
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

double von_neumann_entropy(const ComplexMatrix& rho) { return entropy_bits(hermitian_eigenvalues(rho)); }

double rescaled_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim()) throw DimensionMismatch("rescaled_distance: dimension mismatch");
  const ComplexMatrix diff =
      rho1.matrix() / rho1.matrix().norm() - rho2.matrix() / rho2.matrix().norm();
  return diff.norm();
}

DensityMatrix apply_measurement(const DensityMatrix& rho, const ProjectiveMeasurement& pi) {
  const int dA = rho.dimA();
  const int dB = rho.dimB();
  if (pi.dim() != dA) throw DimensionMismatch("apply_measurement: basis length != dimA");
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  const ComplexMatrix& basis = pi.unitary();
  for (int j = 0; j < dA; ++j) {
    // Conditional block M_j = sum_{n,m} conj(phi_n) phi_m rho_{nm}.
    ComplexMatrix mj = ComplexMatrix::Zero(dB, dB);
    for (int n = 0; n < dA; ++n)
      for (int m = 0; m < dA; ++m) {
        const Complex c = std::conj(basis(n, j)) * basis(m, j);
        if (c != Complex(0.0)) mj += c * rho.matrix().block(n * dB, m * dB, dB, dB);
      }
    const ComplexMatrix pj = pi.projector(j);
    for (int a = 0; a < dA; ++a)
      for (int c = 0; c < dA; ++c)
        if (pj(a, c) != Complex(0.0)) out.block(a * dB, c * dB, dB, dB) += pj(a, c) * mj;
  }
  return DensityMatrix::trusted(std::move(out), rho.dims());
}

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  // Fill row-major so the stream order is independent of Eigen's storage.
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

DensityMatrix state_from_factor(const ComplexMatrix& g, Dims dims) {
  if (g.rows() != dims.total()) throw DimensionMismatch("state_from_factor: factor rows != dim");
  ComplexMatrix r = g * g.adjoint();
  r /= r.trace().real();
  return DensityMatrix::trusted(std::move(r), dims);
}

DensityMatrix random_state(Dims dims, int rank, Rng& rng) {
  if (dims.dimA < 1 || dims.dimB < 1) throw InvalidArgument("random_state: invalid dims");
  if (rank < 1 || rank > dims.total())
    throw InvalidArgument("random_state: rank must lie in [1, dimA*dimB]");
  return state_from_factor(ginibre(dims.total(), rank, rng), dims);
}

DensityMatrix random_state(int dimA, int dimB, int rank, RngSeed seed) {
  Rng rng(seed);
  return random_state(Dims{dimA, dimB}, rank, rng);
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  const ComplexMatrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double ad = std::abs(d);
    if (ad > 0.0) q.col(j) *= d / ad;
  }
  return q;
}

DensityMatrix pure_state(const ComplexVector& psi, Dims dims) {
  const double nrm = psi.norm();
  if (nrm == 0.0) throw InvalidArgument("pure_state: zero vector");
  const ComplexVector v = psi / nrm;
  return DensityMatrix::trusted(v * v.adjoint(), dims);
}

nlohmann::json to_json(const ComplexMatrix& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> re, im;
  re.reserve(m.size());
  im.reserve(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  j["re"] = re;
  j["im"] = im;
  return j;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (rows < 1 || cols < 1 || re.size() != static_cast<std::size_t>(rows * cols) ||
      im.size() != re.size())
    throw InvalidArgument("matrix_from_json: entry count does not match rows*cols");
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto k = static_cast<std::size_t>(r * cols + c);
      m(r, c) = Complex(re[k], im[k]);
    }
  if (!m.allFinite()) throw InvalidArgument("matrix_from_json: non-finite entries");
  return m;
}

}  // namespace discordlab
