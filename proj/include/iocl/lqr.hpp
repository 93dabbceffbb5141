#ifndef IOCL_LQR_HPP
#define IOCL_LQR_HPP

#include <optional>
#include <variant>
#include <vector>

#include "iocl/matops.hpp"
#include "iocl/matrix.hpp"

namespace iocl::lqr {

/// Generative tuple {A, B, Q, R, Q_T} of the discrete-time stochastic LQR
/// problem. Q_T defaults to Q when not supplied.
struct SystemParams {
  Matrix a;       // n x n
  Matrix b;       // n x m
  SpdMatrix q;    // n x n, psd
  SpdMatrix r;    // m x m, pd
  SpdMatrix q_t;  // n x n, psd

  SystemParams(Matrix a_in, Matrix b_in, SpdMatrix q_in, SpdMatrix r_in,
               std::optional<SpdMatrix> q_t_in = std::nullopt);

  Eigen::Index n() const { return a.rows(); }
  Eigen::Index m() const { return b.cols(); }
};

struct InfiniteClosedLoop {
  Matrix f_ss;      // n x n, spectral radius < 1
  Matrix k_ss;      // m x n
  SpdMatrix p_ss;   // n x n
};

struct FiniteClosedLoop {
  std::vector<Matrix> f;  // F_0 .. F_{T-1}
  std::vector<Matrix> k;  // K_0 .. K_{T-1}
  std::vector<Matrix> p;  // P_0 .. P_T, P_T = Q_T
};

using ClosedLoop = std::variant<InfiniteClosedLoop, FiniteClosedLoop>;

/// Requested horizon for closed_loop_map. horizon_T < 0 means infinite.
struct Horizon {
  long T = -1;
  static Horizon infinite() { return Horizon{-1}; }
  static Horizon finite(long t) { return Horizon{t}; }
  bool is_infinite() const { return T < 0; }
};

/// Static gain solution: P_ss from the DARE, K_ss = (B'P B + R)^{-1} B'P A,
/// F_ss = A - B K_ss.
InfiniteClosedLoop infinite_horizon_solution(const SystemParams& sys);

/// Backward Riccati recursion from P_T = Q_T over T steps.
FiniteClosedLoop finite_horizon_solution(const SystemParams& sys, long T);

/// The map from system parameters to closed-loop dynamics, dispatching on
/// the horizon.
ClosedLoop closed_loop_map(const SystemParams& sys, const Horizon& horizon);

}  // namespace iocl::lqr

#endif  // IOCL_LQR_HPP
