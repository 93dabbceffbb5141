#include "iocl/sim.hpp"

#include <random>

#include "iocl/parallel.hpp"
#include "iocl/rng.hpp"

namespace iocl::sim {

NoiseParams NoiseParams::model_a(SpdMatrix w0, SpdMatrix w, SpdMatrix v) {
  return NoiseParams{std::move(w0), std::move(w), std::move(v), std::nullopt, std::nullopt};
}

NoiseParams NoiseParams::model_b(SpdMatrix w0, SpdMatrix w, SpdMatrix v_x, SpdMatrix v_u) {
  return NoiseParams{std::move(w0), std::move(w), std::nullopt, std::move(v_x),
                     std::move(v_u)};
}

namespace {

struct SimContext {
  const lqr::SystemParams& sys;
  const ObservationParams& obs;
  bool infinite;
  // Closed-loop pieces; for the infinite horizon f[0]/k[0] hold F_ss/K_ss.
  std::vector<Matrix> f;
  std::vector<Matrix> k;
  GaussianSampler w0_sampler;
  GaussianSampler w_sampler;
  std::optional<GaussianSampler> v_sampler;    // model a
  std::optional<GaussianSampler> vx_sampler;   // model b
  std::optional<GaussianSampler> vu_sampler;   // model b
  long T;
  bool store_latents;
};

void validate_noise(const lqr::SystemParams& sys, const NoiseParams& noise,
                    const ObservationParams& obs) {
  const Eigen::Index n = sys.n();
  if (noise.w0.rows() != n || noise.w.rows() != n) {
    throw std::invalid_argument("NoiseParams: W0/W must be n x n");
  }
  if (obs.c.cols() != n) {
    throw std::invalid_argument("ObservationParams: C must have n columns");
  }
  if (obs.model == ObsModel::a) {
    if (!noise.v.has_value() || noise.v->rows() != obs.c.rows()) {
      throw std::invalid_argument("NoiseParams: model (a) needs V of the observation dimension");
    }
  } else {
    if (!noise.v_x.has_value() || noise.v_x->rows() != obs.c.rows()) {
      throw std::invalid_argument("NoiseParams: model (b) needs V_x of the C_x row dimension");
    }
    if (!noise.v_u.has_value() || noise.v_u->rows() != sys.m()) {
      throw std::invalid_argument("NoiseParams: model (b) needs V_u of the control dimension");
    }
  }
}

Trajectory make_trajectory(const SimContext& ctx, std::uint64_t seed, long index) {
  std::mt19937_64 engine(mix_seed(seed, static_cast<std::uint64_t>(index)));
  std::normal_distribution<double> gauss(0.0, 1.0);

  const long T = ctx.T;
  Trajectory traj;
  traj.y.reserve(static_cast<size_t>(T) + 1);
  std::vector<Vector> x(static_cast<size_t>(T) + 1);
  std::vector<Vector> u(static_cast<size_t>(T));

  x[0] = ctx.w0_sampler.draw(engine, gauss);
  for (long t = 0; t < T; ++t) {
    const Matrix& f_t = ctx.infinite ? ctx.f[0] : ctx.f[static_cast<size_t>(t)];
    const Matrix& k_t = ctx.infinite ? ctx.k[0] : ctx.k[static_cast<size_t>(t)];
    u[static_cast<size_t>(t)] = -k_t * x[static_cast<size_t>(t)];
    x[static_cast<size_t>(t) + 1] =
        f_t * x[static_cast<size_t>(t)] + ctx.w_sampler.draw(engine, gauss);
  }

  for (long t = 0; t <= T; ++t) {
    const Vector& xt = x[static_cast<size_t>(t)];
    if (ctx.obs.model == ObsModel::a) {
      traj.y.push_back(ctx.obs.c * xt + ctx.v_sampler->draw(engine, gauss));
    } else {
      // Model (b) is infinite-horizon only, so ctx.k[0] holds K_ss.
      const Vector yx = ctx.obs.c * xt + ctx.vx_sampler->draw(engine, gauss);
      if (t < T) {
        const Vector yu = -(ctx.k[0] * xt) + ctx.vu_sampler->draw(engine, gauss);
        Vector stacked(yx.size() + yu.size());
        stacked << yx, yu;
        traj.y.push_back(std::move(stacked));
      } else {
        traj.y.push_back(yx);
      }
    }
  }

  if (ctx.store_latents) {
    traj.x = std::move(x);
    traj.u = std::move(u);
  }
  return traj;
}

TrajectoryDataset simulate_impl(const lqr::SystemParams& sys, const NoiseParams& noise,
                                const ObservationParams& obs, const lqr::Horizon& horizon,
                                long T, long N, std::uint64_t seed,
                                const SimulateOptions& opts, bool parallel) {
  if (T < 1 || N < 1) {
    throw std::invalid_argument("simulate: T and N must be >= 1");
  }
  validate_noise(sys, noise, obs);
  if (obs.model == ObsModel::b && !horizon.is_infinite()) {
    throw std::invalid_argument("simulate: model (b) applies to the infinite horizon");
  }

  SimContext ctx{
      sys,
      obs,
      horizon.is_infinite(),
      {},
      {},
      GaussianSampler(noise.w0.mat()),
      GaussianSampler(noise.w.mat(), noise.allow_singular_w),
      noise.v.has_value() ? std::optional<GaussianSampler>(GaussianSampler(noise.v->mat()))
                          : std::nullopt,
      noise.v_x.has_value() ? std::optional<GaussianSampler>(GaussianSampler(noise.v_x->mat()))
                            : std::nullopt,
      noise.v_u.has_value() ? std::optional<GaussianSampler>(GaussianSampler(noise.v_u->mat()))
                            : std::nullopt,
      T,
      opts.store_latents};

  if (ctx.infinite) {
    auto loop = lqr::infinite_horizon_solution(sys);
    ctx.f.push_back(loop.f_ss);
    ctx.k.push_back(loop.k_ss);
  } else {
    auto loop = lqr::finite_horizon_solution(sys, T);
    ctx.f = std::move(loop.f);
    ctx.k = std::move(loop.k);
  }

  TrajectoryDataset ds;
  ds.meta.model = obs.model;
  ds.meta.T = T;
  ds.meta.N = N;
  ds.meta.n = sys.n();
  ds.meta.m = sys.m();
  ds.meta.d = obs.c.rows();
  ds.meta.seed = seed;
  ds.meta.has_latents = opts.store_latents;
  ds.meta.finite_horizon = !ctx.infinite;
  ds.trajectories.assign(static_cast<size_t>(N), Trajectory{});

  auto body = [&](long i) {
    ds.trajectories[static_cast<size_t>(i)] = make_trajectory(ctx, seed, i);
  };
  if (parallel) {
    parallel_for_index(N, body);
  } else {
    serial_for_index(N, body);
  }
  return ds;
}

}  // namespace

TrajectoryDataset simulate(const lqr::SystemParams& sys, const NoiseParams& noise,
                           const ObservationParams& obs, const lqr::Horizon& horizon, long T,
                           long N, std::uint64_t seed, const SimulateOptions& opts) {
  return simulate_impl(sys, noise, obs, horizon, T, N, seed, opts, opts.parallel);
}

TrajectoryDataset simulate_serial(const lqr::SystemParams& sys, const NoiseParams& noise,
                                  const ObservationParams& obs, const lqr::Horizon& horizon,
                                  long T, long N, std::uint64_t seed,
                                  const SimulateOptions& opts) {
  return simulate_impl(sys, noise, obs, horizon, T, N, seed, opts, false);
}

SpdMatrix stationary_state_covariance(const Matrix& f, const SpdMatrix& w) {
  if (matops::spectral_radius(f) >= 1.0) {
    throw UnstableDynamics("stationary_state_covariance: spectral radius of F must be < 1");
  }
  // Sigma - F Sigma F' = W is the Stein equation with Atrans = F'.
  Matrix sigma = matops::solve_discrete_sylvester(f.transpose(), f.transpose(), w.mat());
  return SpdMatrix::positive_semidefinite(symmetrize(sigma), "stationary covariance");
}

}  // namespace iocl::sim
