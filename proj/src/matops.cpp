#include "iocl/matops.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

namespace iocl::matops {

namespace {

void require_square(const Matrix& m, const char* name) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(name) + ": expected square matrix");
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

Matrix solve_discrete_sylvester(const Matrix& a_trans, const Matrix& f, const Matrix& q) {
  require_square(a_trans, "a_trans");
  require_square(f, "f");
  require_square(q, "q");
  const Eigen::Index n = q.rows();
  if (a_trans.rows() != n || f.rows() != n) {
    throw std::invalid_argument("solve_discrete_sylvester: dimension mismatch");
  }
  if (n > 30) {
    throw std::invalid_argument(
        "solve_discrete_sylvester: Kronecker path limited to n <= 30; "
        "use a Bartels-Stewart reduction beyond that");
  }
  check_finite(a_trans, "a_trans");
  check_finite(f, "f");
  check_finite(q, "q");

  const Matrix op =
      Matrix::Identity(n * n, n * n) - kron(f.transpose(), a_trans.transpose());
  Eigen::JacobiSVD<Matrix> svd(op, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12) {
    throw SingularOperator(
        "solve_discrete_sylvester: operator condition number exceeds 1e12 "
        "(eigenvalue product near 1)");
  }
  const Vector vec_q = Eigen::Map<const Vector>(q.data(), n * n);
  const Vector vec_p = svd.solve(vec_q);
  return Eigen::Map<const Matrix>(vec_p.data(), n, n);
}

SpdMatrix solve_dare(const Matrix& a, const Matrix& b, const SpdMatrix& q, const SpdMatrix& r,
                     const DareOptions& opts) {
  require_square(a, "a");
  const Eigen::Index n = a.rows();
  const Eigen::Index m = b.cols();
  if (b.rows() != n || q.rows() != n || r.rows() != m) {
    throw std::invalid_argument("solve_dare: dimension mismatch");
  }
  if (!stabilizability_check(a, b)) {
    throw NotStabilizable("solve_dare: (A, B) is not stabilizable");
  }

  Matrix p = q.mat();
  bool converged = false;
  for (long it = 0; it < opts.max_iter; ++it) {
    const Matrix btp = b.transpose() * p;
    const Matrix gram = btp * b + r.mat();
    Eigen::LLT<Matrix> llt(symmetrize(gram));
    if (llt.info() != Eigen::Success) {
      throw NumericalError("solve_dare: B^T P B + R lost positive definiteness");
    }
    const Matrix k = llt.solve(btp * a);
    Matrix p_next = q.mat() + a.transpose() * p * a - (btp * a).transpose() * k;
    p_next = symmetrize(p_next);
    const double step = spectral_norm(p_next - p);
    p = std::move(p_next);
    if (step <= opts.step_tol) {
      converged = true;
      break;
    }
  }

  const Matrix btp = b.transpose() * p;
  const Matrix residual =
      p - q.mat() - a.transpose() * p * a +
      (btp * a).transpose() * (btp * b + r.mat()).ldlt().solve(btp * a).eval();
  const double tol = 1e-9 * (1.0 + spectral_norm(p));
  if (spectral_norm(residual) > tol) {
    throw NoConvergence("solve_dare: residual above tolerance" +
                        std::string(converged ? "" : " (iteration cap reached)"));
  }
  return SpdMatrix::positive_semidefinite(p, "solve_dare result");
}

Vector newton_vector_root(const VectorResidualFn& residual_fn, const Vector& x0, double tol,
                          int max_iter) {
  check_finite(x0, "x0");
  const Eigen::Index sz = x0.size();

  Vector x = x0;
  Vector res = residual_fn(x);
  const Eigen::Index rsz = res.size();
  double res_norm = res.norm();

  for (int it = 0; it < max_iter; ++it) {
    if (res_norm <= tol) return x;

    Matrix jac(rsz, sz);
    for (Eigen::Index k = 0; k < sz; ++k) {
      Vector xh = x;
      const double h = 1e-7 * (1.0 + std::abs(x(k)));
      xh(k) += h;
      jac.col(k) = (residual_fn(xh) - res) / h;
    }

    Eigen::JacobiSVD<Matrix> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12) {
      throw SingularJacobian("newton root: Jacobian condition number exceeds 1e12");
    }
    const Vector step = svd.solve(-res);

    double alpha = 1.0;
    bool accepted = false;
    for (int halving = 0; halving <= 30; ++halving) {
      Vector x_trial = x + alpha * step;
      Vector res_trial = residual_fn(x_trial);
      const double trial_norm = res_trial.norm();
      if (trial_norm < res_norm) {
        x = std::move(x_trial);
        res = std::move(res_trial);
        res_norm = trial_norm;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      throw NoConvergence("newton root: line search stalled (30 halvings)");
    }
  }
  if (res_norm <= tol) return x;
  throw NoConvergence("newton root: max_iter reached with residual " +
                      std::to_string(res_norm));
}

Matrix newton_matrix_root(const MatrixResidualFn& residual_fn, const Matrix& x0, double tol,
                          int max_iter) {
  require_square(x0, "x0");
  const Eigen::Index n = x0.rows();

  auto vec_fn = [&](const Vector& v) -> Vector {
    const Matrix res = residual_fn(Eigen::Map<const Matrix>(v.data(), n, n));
    if (res.rows() != n || res.cols() != n) {
      throw std::invalid_argument("newton_matrix_root: residual shape mismatch");
    }
    return Eigen::Map<const Vector>(res.data(), n * n);
  };
  const Vector root =
      newton_vector_root(vec_fn, Eigen::Map<const Vector>(x0.data(), n * n), tol, max_iter);
  return Eigen::Map<const Matrix>(root.data(), n, n);
}

bool stabilizability_check(const Matrix& a, const Matrix& b) {
  require_square(a, "a");
  const Eigen::Index n = a.rows();
  if (b.rows() != n) {
    throw std::invalid_argument("stabilizability_check: B row count mismatch");
  }
  const Eigen::Index m = b.cols();

  Eigen::EigenSolver<Matrix> eig(a);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> lambda = eig.eigenvalues()(i);
    if (std::abs(lambda) < 1.0) continue;
    Eigen::MatrixXcd pbh(n, n + m);
    pbh.leftCols(n) = a.cast<std::complex<double>>() -
                      lambda * Eigen::MatrixXcd::Identity(n, n);
    pbh.rightCols(m) = b.cast<std::complex<double>>();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pbh);
    const auto& sv = svd.singularValues();
    const double rank_tol = 1e-10 * sv(0);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
      if (sv(k) > rank_tol) ++rank;
    }
    if (rank < n) return false;
  }
  return true;
}

double spectral_radius(const Matrix& m) {
  require_square(m, "m");
  if (m.size() == 0) return 0.0;
  return Eigen::EigenSolver<Matrix>(m, false).eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace iocl::matops
