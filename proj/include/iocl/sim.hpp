#ifndef IOCL_SIM_HPP
#define IOCL_SIM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iocl/lqr.hpp"
#include "iocl/matrix.hpp"

namespace iocl::sim {

enum class ObsModel { a, b };

inline std::string to_string(ObsModel m) { return m == ObsModel::a ? "a" : "b"; }

/// Noise covariances of the closed-loop process. Model (a) uses V; model (b)
/// uses the diagonal blocks {V_x, V_u}.
struct NoiseParams {
  SpdMatrix w0;  // n x n initial-state covariance
  SpdMatrix w;   // n x n process covariance
  std::optional<SpdMatrix> v;    // d x d, model (a)
  std::optional<SpdMatrix> v_x;  // d_x x d_x, model (b)
  std::optional<SpdMatrix> v_u;  // m x m, model (b)
  bool allow_singular_w = false;

  static NoiseParams model_a(SpdMatrix w0, SpdMatrix w, SpdMatrix v);
  static NoiseParams model_b(SpdMatrix w0, SpdMatrix w, SpdMatrix v_x, SpdMatrix v_u);
};

/// Observation map. Model (a): y_t = C x_t + noise. Model (b): the state
/// rows come from C_x and the control rows from -K_ss (supplied by the
/// closed loop, not a free parameter here). Control rows exist for
/// t = 0..T-1, matching the control sequence u_{0:T-1}; the final
/// observation carries only the state block.
struct ObservationParams {
  ObsModel model;
  Matrix c;  // C (model a, d x n) or C_x (model b, d_x x n)

  static ObservationParams model_a(Matrix c) { return {ObsModel::a, std::move(c)}; }
  static ObservationParams model_b(Matrix c_x) { return {ObsModel::b, std::move(c_x)}; }
};

struct Trajectory {
  std::vector<Vector> y;                 // length T+1
  std::optional<std::vector<Vector>> x;  // latent states, length T+1
  std::optional<std::vector<Vector>> u;  // controls, length T
};

struct DatasetMeta {
  std::string schema_version = "iocl-v1";
  ObsModel model = ObsModel::a;
  long T = 0;
  long N = 0;
  long n = 0;    // latent dimension
  long m = 0;    // control dimension
  long d = 0;    // observation dim: d (model a) or d_x (model b, state block)
  std::uint64_t seed = 0;
  bool has_latents = false;
  bool finite_horizon = false;
};

struct TrajectoryDataset {
  DatasetMeta meta;
  std::vector<Trajectory> trajectories;
};

struct SimulateOptions {
  bool store_latents = false;
  bool parallel = true;
};

/// Samples N independent closed-loop trajectories of length T+1 under the
/// given observation model. x_0 ~ N(0, W0); x_{t+1} = F_t x_t + w_t; the
/// recorded u_t = -K_t x_t is the exact feedback (the controller sees the
/// noiseless state). Fully reproducible from the seed; trajectory i uses an
/// independent RNG stream derived from (seed, i), so results do not depend
/// on scheduling.
TrajectoryDataset simulate(const lqr::SystemParams& sys, const NoiseParams& noise,
                           const ObservationParams& obs, const lqr::Horizon& horizon, long T,
                           long N, std::uint64_t seed, const SimulateOptions& opts = {});

/// Serial reference implementation; bit-identical to simulate().
TrajectoryDataset simulate_serial(const lqr::SystemParams& sys, const NoiseParams& noise,
                                  const ObservationParams& obs, const lqr::Horizon& horizon,
                                  long T, long N, std::uint64_t seed,
                                  const SimulateOptions& opts = {});

/// Fixed point Sigma of Sigma = F Sigma F' + W, solved through the Kronecker
/// path. Requires spectral_radius(F) < 1; throws UnstableDynamics otherwise.
SpdMatrix stationary_state_covariance(const Matrix& f, const SpdMatrix& w);

}  // namespace iocl::sim

#endif  // IOCL_SIM_HPP
