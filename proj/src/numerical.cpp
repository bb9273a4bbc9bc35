#include "tadgame/numerical.hpp"

#include <cmath>

#include "tadgame/errors.hpp"
#include "tadgame/tolerances.hpp"

namespace tad {

void Rk4Settings::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw ConfigError("RK4 step must be positive");
  }
}

void NumericalOptions::validate() const {
  if (riccati_substeps < 1) {
    throw ConfigError("Riccati substeps must be at least 1");
  }
}

Mat12 PGrid::mid(int k, MidStage mode) const {
  const int i = intervals() - k;  // node at f0 + (k + 1) h_f is i - 1
  if (mode == MidStage::kStoredHalfStep) return midpoints[i - 1];
  return 0.5 * (nodes[i] + nodes[i - 1]);
}

namespace {

template <class M>
void check_finite(const M& m, double f) {
  const double magnitude = m.cwiseAbs().maxCoeff();
  if (!(magnitude <= kTolerances.blowup_magnitude)) {
    throw NumericalBlowup(f, magnitude);
  }
}

}  // namespace

PGrid integrate_riccati_backward(const GameConfig& config,
                                 const NumericalOptions& options) {
  config.validate_structure();
  options.validate();
  const int n = config.steps();
  const int m = options.riccati_substeps;
  const Rk4Settings settings{config.h_f / (2.0 * m), Direction::kBackward};
  settings.validate();
  const double h = settings.signed_step();

  auto field = [&](double f, const Mat12& p) {
    return riccati_rhs(config.orbit, config.weights, f, p);
  };

  PGrid grid;
  grid.anomalies.reserve(n + 1);
  grid.nodes.reserve(n + 1);
  grid.midpoints.reserve(n);

  Mat12 p = config.weights.terminal();
  grid.anomalies.push_back(config.ff);
  grid.nodes.push_back(p);
  for (int i = 0; i < n; ++i) {
    const double start = config.anomaly(n - i);
    const double end = config.anomaly(n - i - 1);
    const double middle = 0.5 * (start + end);
    for (int j = 0; j < m; ++j) {
      p = rk4_step(field, p, start + j * h, h);
    }
    check_finite(p, middle);
    grid.midpoints.push_back(p);
    for (int j = 0; j < m; ++j) {
      p = rk4_step(field, p, middle + j * h, h);
    }
    check_finite(p, end);
    grid.anomalies.push_back(end);
    grid.nodes.push_back(p);
  }
  return grid;
}

namespace {

Trajectory simulate_closed_loop(const GameConfig& config, const PGrid& pgrid,
                                const Deviation* deviation,
                                const NumericalOptions& options) {
  config.validate_structure();
  const int n = config.steps();
  if (pgrid.intervals() != n) {
    throw ConfigError("P grid does not match the scenario grid");
  }

  auto controls = [&](double f, const Mat12& p, const Vec12& y) {
    RiccatiSolution sol;
    sol.p = Block12(p);
    ControlPair u = nash_controls(config, sol, JointState::from_stacked(y), f);
    if (deviation) {
      const Vec3 du = deviation->scale * deviation->profile(f);
      (deviation->player == Player::kAttacker ? u.u_a : u.u_d) += du;
    }
    return u;
  };

  Trajectory traj;
  traj.grid.reserve(n + 1);
  traj.states.reserve(n + 1);
  traj.costates.reserve(n + 1);
  traj.controls.reserve(n + 1);
  traj.distances.reserve(n + 1);

  auto record = [&](int k, const Vec12& y) {
    const double f = config.anomaly(k);
    const JointState x = JointState::from_stacked(y);
    traj.grid.push_back(f);
    traj.states.push_back(x);
    traj.costates.push_back(Costate::from_stacked(pgrid.at(k) * y));
    traj.controls.push_back(controls(f, pgrid.at(k), y));
    traj.distances.push_back(distances_of(x));
  };

  Vec12 y = config.initial_state().stacked();
  record(0, y);
  for (int k = 0; k < n; ++k) {
    const double f = config.anomaly(k);
    const double h = config.anomaly(k + 1) - f;
    const Mat12& p_start = pgrid.at(k);
    const Mat12 p_mid = pgrid.mid(k, options.mid_stage);
    const Mat12& p_end = pgrid.at(k + 1);
    // Only the three stage anomalies of this interval are ever requested.
    auto field = [&](double g, const Vec12& state) -> Vec12 {
      const Mat12& p = g == f ? p_start : (g == f + h ? p_end : p_mid);
      const WBlocks w = w_blocks(config.orbit, config.weights, g);
      if (!deviation) return w.w11 * state + w.w12 * (p * state);
      const ControlPair u = controls(g, p, state);
      const double gain = system_matrices(config.orbit, g).b_gain;
      Vec12 out = w.w11 * state;
      out.segment<3>(3) += gain * u.u_a;
      out.segment<3>(9) += gain * (u.u_d - u.u_a);
      return out;
    };
    y = rk4_step(field, y, f, h);
    check_finite(y, config.anomaly(k + 1));
    record(k + 1, y);
  }
  traj.cost = cost(config, traj);
  return traj;
}

}  // namespace

Trajectory simulate_numerical(const GameConfig& config, const PGrid& pgrid,
                              const NumericalOptions& options) {
  return simulate_closed_loop(config, pgrid, nullptr, options);
}

Trajectory simulate_deviation(const GameConfig& config, const PGrid& pgrid,
                              const Deviation& deviation,
                              const NumericalOptions& options) {
  if (!deviation.profile) throw ConfigError("deviation profile is empty");
  return simulate_closed_loop(config, pgrid, &deviation, options);
}

Trajectory simulate_numerical(const GameConfig& config,
                              const NumericalOptions& options) {
  return simulate_numerical(config, integrate_riccati_backward(config, options),
                            options);
}

}  // namespace tad
