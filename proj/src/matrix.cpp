#include "iocl/matrix.hpp"

#include <cmath>

namespace iocl {

void check_finite(const Matrix& m, const std::string& name) {
  if (!m.allFinite()) {
    throw std::invalid_argument(name + ": contains NaN or Inf entries");
  }
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

namespace {

Matrix validate_symmetric(const Matrix& m, const std::string& name) {
  check_finite(m, name);
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(name + ": expected square matrix, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    throw std::invalid_argument(name + ": not symmetric (asymmetry " + std::to_string(asym) + ")");
  }
  return symmetrize(m);
}

}  // namespace

SpdMatrix SpdMatrix::positive_definite(const Matrix& m, const std::string& name) {
  Matrix s = validate_symmetric(m, name);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument(name + ": not positive definite (min eigenvalue " +
                                std::to_string(eig.eigenvalues().minCoeff()) + ")");
  }
  return SpdMatrix(std::move(s));
}

SpdMatrix SpdMatrix::positive_semidefinite(const Matrix& m, const std::string& name) {
  Matrix s = validate_symmetric(m, name);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  if (eig.eigenvalues().minCoeff() < -1e-10 * scale) {
    throw std::invalid_argument(name + ": not positive semi-definite (min eigenvalue " +
                                std::to_string(eig.eigenvalues().minCoeff()) + ")");
  }
  return SpdMatrix(std::move(s));
}

}  // namespace iocl
