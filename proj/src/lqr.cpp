#include "iocl/lqr.hpp"

#include <utility>

namespace iocl::lqr {

SystemParams::SystemParams(Matrix a_in, Matrix b_in, SpdMatrix q_in, SpdMatrix r_in,
                           std::optional<SpdMatrix> q_t_in)
    : a(std::move(a_in)),
      b(std::move(b_in)),
      q(std::move(q_in)),
      r(std::move(r_in)),
      q_t(q_t_in.has_value() ? std::move(*q_t_in) : q) {
  check_finite(a, "A");
  check_finite(b, "B");
  const Eigen::Index nn = a.rows();
  const Eigen::Index mm = b.cols();
  if (a.cols() != nn || b.rows() != nn || q.rows() != nn || r.rows() != mm ||
      q_t.rows() != nn) {
    throw std::invalid_argument("SystemParams: dimension mismatch among {A, B, Q, R, Q_T}");
  }
  if (!matops::stabilizability_check(a, b)) {
    throw NotStabilizable("SystemParams: (A, B) is not stabilizable");
  }
}

namespace {

// K = (B'PB + R)^{-1} B'PA, with the Gram matrix factorized as symmetric PD.
Matrix gain_from_p(const Matrix& a, const Matrix& b, const Matrix& r, const Matrix& p) {
  const Matrix btp = b.transpose() * p;
  Eigen::LLT<Matrix> llt(symmetrize(btp * b + r));
  if (llt.info() != Eigen::Success) {
    throw NumericalError("lqr: B^T P B + R is not positive definite");
  }
  return llt.solve(btp * a);
}

}  // namespace

InfiniteClosedLoop infinite_horizon_solution(const SystemParams& sys) {
  SpdMatrix p_ss = matops::solve_dare(sys.a, sys.b, sys.q, sys.r);
  Matrix k_ss = gain_from_p(sys.a, sys.b, sys.r.mat(), p_ss.mat());
  Matrix f_ss = sys.a - sys.b * k_ss;
  if (matops::spectral_radius(f_ss) >= 1.0) {
    throw NumericalError("infinite_horizon_solution: closed loop is not stable");
  }
  return InfiniteClosedLoop{std::move(f_ss), std::move(k_ss), std::move(p_ss)};
}

FiniteClosedLoop finite_horizon_solution(const SystemParams& sys, long T) {
  if (T < 1) {
    throw std::invalid_argument("finite_horizon_solution: horizon T must be >= 1");
  }
  FiniteClosedLoop loop;
  loop.p.assign(static_cast<size_t>(T) + 1, Matrix());
  loop.k.assign(static_cast<size_t>(T), Matrix());
  loop.f.assign(static_cast<size_t>(T), Matrix());

  loop.p[static_cast<size_t>(T)] = sys.q_t.mat();
  for (long t = T - 1; t >= 0; --t) {
    const Matrix& p_next = loop.p[static_cast<size_t>(t) + 1];
    Matrix k = gain_from_p(sys.a, sys.b, sys.r.mat(), p_next);
    Matrix p = sys.q.mat() + sys.a.transpose() * p_next * sys.a -
               (sys.b.transpose() * p_next * sys.a).transpose() * k;
    loop.p[static_cast<size_t>(t)] = symmetrize(p);
    loop.f[static_cast<size_t>(t)] = sys.a - sys.b * k;
    loop.k[static_cast<size_t>(t)] = std::move(k);
  }
  return loop;
}

ClosedLoop closed_loop_map(const SystemParams& sys, const Horizon& horizon) {
  if (horizon.is_infinite()) return infinite_horizon_solution(sys);
  return finite_horizon_solution(sys, horizon.T);
}

}  // namespace iocl::lqr
