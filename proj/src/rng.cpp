#include "iocl/rng.hpp"

namespace iocl {

GaussianSampler::GaussianSampler(const Matrix& covariance, bool allow_singular) {
  Eigen::LLT<Matrix> llt(symmetrize(covariance));
  if (llt.info() == Eigen::Success) {
    chol_ = llt.matrixL();
    return;
  }
  if (!allow_singular) {
    throw std::invalid_argument(
        "GaussianSampler: covariance is not positive definite "
        "(pass allow_singular to jitter a PSD-but-singular covariance)");
  }
  const Matrix jittered =
      symmetrize(covariance) + 1e-10 * Matrix::Identity(covariance.rows(), covariance.cols());
  Eigen::LLT<Matrix> llt2(jittered);
  if (llt2.info() != Eigen::Success) {
    throw std::invalid_argument("GaussianSampler: covariance not PSD even after jitter");
  }
  chol_ = llt2.matrixL();
}

}  // namespace iocl
