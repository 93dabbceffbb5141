#ifndef IOCL_EM_HPP
#define IOCL_EM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "iocl/matrix.hpp"
#include "iocl/sim.hpp"

namespace iocl::em {

using sim::ObsModel;
using sim::Trajectory;
using sim::TrajectoryDataset;

/// Parameters of the closed-loop linear Gaussian state-space model.
///
/// Model (a): y_t = C x_t + noise(V), t = 0..T.
/// Model (b): y_t stacks [C_x x_t; -K_ss x_t] with block noise
/// diag(V_x, V_u) for t = 0..T-1 and carries only the state block at t = T,
/// matching the control sequence u_{0:T-1}. B_known is the known input
/// matrix used to tie K_ss back to A.
struct LgssmParams {
  ObsModel model = ObsModel::a;
  Matrix f;   // n x n closed-loop dynamics
  Matrix c;   // C (model a) or C_x (model b)
  Matrix w0;  // n x n
  Matrix w;   // n x n
  Matrix v;   // V (model a) or V_x (model b)
  // Model (b) only:
  Matrix k_ss;     // m x n
  Matrix v_u;      // m x m
  Matrix b_known;  // n x m

  Eigen::Index n() const { return f.rows(); }
  void validate() const;
};

/// Posterior moments of one trajectory: means m_t, covariances Sigma_t, and
/// lag-one cross-covariances cross[t] = Cov(x_t, x_{t+1} | y_{0:T}).
struct SmoothedMoments {
  std::vector<Vector> mean;     // length T+1
  std::vector<Matrix> cov;      // length T+1
  std::vector<Matrix> cross;    // length T
  double loglik = 0.0;          // marginal log-likelihood of this trajectory
};

/// Pooled second moments feeding the M-step. M_00/M_0T/M_0Tm1/M_1T are the
/// smoothed-state Gram sums over the indicated time ranges (correction
/// covariances included); m_delta sums E[x_{t-1} x_t'].
struct SufficientStats {
  Matrix m_00;     // sum_t in {0}
  Matrix m_0t;     // t = 0..T
  Matrix m_0tm1;   // t = 0..T-1
  Matrix m_1t;     // t = 1..T
  Matrix m_delta;  // sum_{t=1..T} E[x_{t-1} x_t']
  // Model (a): full observation sums over t = 0..T.
  Matrix y_gram;   // sum y_t y_t'
  Matrix y_cross;  // sum m_t y_t'
  // Model (b) partitions. State blocks run t = 0..T; control blocks run
  // t = 0..T-1, the steps where control measurements exist.
  Matrix y_xx, y_xu, y_uu;
  Matrix yt_xx, yt_xu;
  long N = 0;
  long T = 0;
  double loglik = 0.0;  // marginal log-likelihood at the parameters used
};

/// Exact Gaussian posterior over the latent states of one trajectory:
/// Joseph-stabilized Kalman filter in covariance form plus an RTS backward
/// pass. Throws NumericalBreakdown if an innovation covariance loses
/// positive definiteness (min eigenvalue < 1e-12).
SmoothedMoments kalman_smoother(const LgssmParams& params, const Trajectory& traj);

/// Sum of prediction-error-decomposition log densities over the dataset.
double marginal_log_likelihood(const LgssmParams& params, const TrajectoryDataset& data,
                               bool parallel = true);
double marginal_log_likelihood_serial(const LgssmParams& params, const TrajectoryDataset& data);

/// Smooths every trajectory (in parallel) and pools the sufficient
/// statistics by summation in trajectory order, so the result is identical
/// regardless of thread count. Also accumulates the marginal log-likelihood
/// of the parameters used.
SufficientStats e_step(const LgssmParams& params, const TrajectoryDataset& data,
                       bool parallel = true);
SufficientStats e_step_serial(const LgssmParams& params, const TrajectoryDataset& data);

/// Closed-form M-step for observation model (a). Covariance updates are
/// symmetrized and eigenvalue-floored at 1e-12. Throws SingularStats when a
/// required Gram matrix has condition number above 1e12.
LgssmParams m_step_model_a(const SufficientStats& stats);

/// M-step for observation model (b) with B known. The shared updates follow
/// the model (a) formulas with the partitioned statistics; V_u and K_ss are
/// solved jointly by fixed-point alternation (Newton fallback on the stacked
/// residual), with K_ss initialized from -yt_xu' * m_0tm1^{-1}.
LgssmParams m_step_model_b(const SufficientStats& stats, const Matrix& b_known);

struct FitOptions {
  long max_iter = 500;
  double tol = 1e-9;  // relative log-likelihood increase
  bool parallel = true;
  /// Called after every M-step with (iteration index, params, loglik of the
  /// previous params). Used by the experiment runner to trace estimates.
  std::function<void(long, const LgssmParams&, double)> observer;
};

struct FitResult {
  LgssmParams params;
  std::vector<double> loglik_trace;  // length iterations + 1
  long iterations = 0;
  bool converged = false;
};

/// Alternates e_step / m_step until the relative log-likelihood increase
/// drops below tol or max_iter is reached. The trace is checked to be
/// non-decreasing with slack 1e-9 * max(1, |value|); a decrease beyond the
/// slack throws MonotonicityViolation.
FitResult fit_em(const TrajectoryDataset& data, const LgssmParams& init, ObsModel model,
                 const FitOptions& opts = {});

/// Deterministic default initialization: F = 0.5 I, C from PCA of the
/// stacked observations (top-n right singular vectors), unit covariances.
/// Model (b): K_ss = 0, V_u = I.
LgssmParams default_init(const TrajectoryDataset& data, long n, ObsModel model,
                         const Matrix& b_known = Matrix());

}  // namespace iocl::em

#endif  // IOCL_EM_HPP
