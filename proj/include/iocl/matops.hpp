#ifndef IOCL_MATOPS_HPP
#define IOCL_MATOPS_HPP

#include <functional>

#include "iocl/matrix.hpp"

namespace iocl::matops {

/// Solves the discrete (Stein-type) Sylvester equation
///
///     P - Atrans^T P F = Q
///
/// by vectorizing to (I - F^T (x) Atrans^T) vec(P) = vec(Q). Unique
/// solvability requires conj(lambda_i(Atrans)) * mu_j(F) != 1 for every
/// eigenvalue pair; near-collisions surface as ill-conditioning of the
/// vectorized operator and are reported as SingularOperator. Note the
/// condition is sometimes stated as "F^{-1} and -A^T share no eigenvalue";
/// the lambda*mu != 1 form is the one checked here, derived directly from
/// the vectorized operator.
///
/// O(n^6) via the Kronecker form; intended for n <= 30. A Bartels-Stewart
/// style reduction is the upgrade path beyond that.
Matrix solve_discrete_sylvester(const Matrix& a_trans, const Matrix& f, const Matrix& q);

struct DareOptions {
  double step_tol = 1e-12;
  long max_iter = 100000;
};

/// Stabilizing solution of the discrete algebraic Riccati equation
///
///     P = Q + A^T P A - A^T P B (B^T P B + R)^{-1} B^T P A
///
/// via fixed-point iteration of the finite-horizon Riccati recursion from
/// P = Q. Adequate at small scale; doubling or Schur methods are the
/// upgrade path. Throws NotStabilizable / NoConvergence.
SpdMatrix solve_dare(const Matrix& a, const Matrix& b, const SpdMatrix& q, const SpdMatrix& r,
                     const DareOptions& opts = {});

using MatrixResidualFn = std::function<Matrix(const Matrix&)>;
using VectorResidualFn = std::function<Vector(const Vector&)>;

/// Vectorized form of newton_matrix_root for non-square unknowns (same
/// finite-difference Jacobian, damping, and error contract).
Vector newton_vector_root(const VectorResidualFn& residual_fn, const Vector& x0, double tol,
                          int max_iter);

/// Damped Newton iteration for a root of residual_fn (square matrix in and
/// out, same shape as x0). The Jacobian of the vectorized residual is formed
/// by forward finite differences with per-entry step 1e-7*(1+|x|); steps are
/// halved (up to 30 times) until the residual norm decreases. Returns X with
/// ||residual_fn(X)||_F <= tol. Throws NoConvergence / SingularJacobian.
Matrix newton_matrix_root(const MatrixResidualFn& residual_fn, const Matrix& x0, double tol,
                          int max_iter);

/// PBH test: true iff every eigenvalue of A with |lambda| >= 1 satisfies
/// rank[A - lambda I, B] = n (rank tolerance 1e-10 * largest singular value).
bool stabilizability_check(const Matrix& a, const Matrix& b);

/// Largest eigenvalue magnitude.
double spectral_radius(const Matrix& m);

}  // namespace iocl::matops

#endif  // IOCL_MATOPS_HPP
