#ifndef IOCL_MATRIX_HPP
#define IOCL_MATRIX_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "iocl/errors.hpp"

namespace iocl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Throws std::invalid_argument if any entry is NaN or Inf.
void check_finite(const Matrix& m, const std::string& name);

/// Largest singular value. Returns 0 for empty matrices.
double spectral_norm(const Matrix& m);

inline Matrix symmetrize(const Matrix& m) { return 0.5 * (m + m.transpose()); }

/// Symmetric matrix validated as positive (semi-)definite on construction.
/// Inputs are symmetrized; asymmetry beyond 1e-10 relative is rejected.
class SpdMatrix {
 public:
  /// All eigenvalues strictly positive.
  static SpdMatrix positive_definite(const Matrix& m, const std::string& name = "matrix");
  /// Eigenvalues >= -1e-10 (relative to the largest magnitude).
  static SpdMatrix positive_semidefinite(const Matrix& m, const std::string& name = "matrix");

  static SpdMatrix identity(Eigen::Index n) { return positive_definite(Matrix::Identity(n, n)); }

  const Matrix& mat() const { return m_; }
  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }

 private:
  explicit SpdMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

}  // namespace iocl

#endif  // IOCL_MATRIX_HPP
