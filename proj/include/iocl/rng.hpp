#ifndef IOCL_RNG_HPP
#define IOCL_RNG_HPP

#include <cstdint>
#include <random>

#include "iocl/matrix.hpp"

namespace iocl {

/// Mixes (seed, stream) into an engine seed so that per-trajectory RNG
/// streams are independent and reproducible regardless of execution order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Draws x ~ N(0, Sigma) via the Cholesky factor of Sigma. A covariance that
/// is PSD but numerically singular is accepted only when allow_singular is
/// set, in which case 1e-10 * I jitter is added before factorization.
class GaussianSampler {
 public:
  GaussianSampler(const Matrix& covariance, bool allow_singular = false);

  template <typename Engine>
  Vector draw(Engine& engine, std::normal_distribution<double>& gauss) const {
    Vector z(chol_.rows());
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = gauss(engine);
    return chol_ * z;
  }

  const Matrix& cholesky_factor() const { return chol_; }

 private:
  Matrix chol_;  // lower triangular
};

}  // namespace iocl

#endif  // IOCL_RNG_HPP
