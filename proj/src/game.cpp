#include "tadgame/game.hpp"

#include <cmath>
#include <numbers>

#include "tadgame/errors.hpp"

namespace tad {

Vec12 JointState::stacked() const {
  Vec12 y;
  y << x_a, x_da;
  return y;
}

JointState JointState::from_stacked(const Vec12& y) {
  return {y.head<6>(), y.tail<6>()};
}

Vec12 Costate::stacked() const {
  Vec12 v;
  v << lambda, nu;
  return v;
}

Costate Costate::from_stacked(const Vec12& v) {
  return {v.head<6>(), v.tail<6>()};
}

int GameConfig::steps() const {
  const double ratio = (ff - f0) / h_f;
  return static_cast<int>(std::llround(ratio));
}

double GameConfig::anomaly(int k) const {
  return k == steps() ? ff : f0 + k * h_f;
}

void GameConfig::validate_structure() const {
  weights.validate();
  if (!std::isfinite(f0) || !std::isfinite(ff) || !(f0 < ff)) {
    throw ConfigError("anomaly window requires finite f0 < ff");
  }
  if (!(h_f > 0.0) || !std::isfinite(h_f)) {
    throw ConfigError("grid step h_f must be positive");
  }
  const double ratio = (ff - f0) / h_f;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || rounded > 1e8 ||
      std::abs(ratio - rounded) > 1e-9 * rounded) {
    throw ConfigError("(ff - f0) / h_f must be a positive integer");
  }
  if (!(r1 > 0.0) || !(r2 > 0.0)) {
    throw ConfigError("safety radii R1 and R2 must be positive");
  }
  if (!x_a0.allFinite() || !x_da0.allFinite()) {
    throw ConfigError("initial states must be finite");
  }
}

void GameConfig::validate() const {
  validate_structure();
  if (x_a0.head<3>().norm() <= r1) {
    throw InitialStateError("attacker starts inside the capture set (|Ra0| <= R1)");
  }
  if (x_da0.head<3>().norm() <= r2) {
    throw InitialStateError(
        "defender starts inside the interception set (|rda0| <= R2)");
  }
}

bool GameConfig::hovering() const {
  return x_a0.tail<3>().isZero(0.0) && x_da0.tail<3>().isZero(0.0);
}

GameConfig GameConfig::with_defender_position(const Vec3& rd0) const {
  GameConfig out = *this;
  out.x_da0.head<3>() = rd0 - x_a0.head<3>();
  return out;
}

GameConfig GameConfig::with_eccentricity(double e) const {
  GameConfig out = *this;
  out.orbit = ReferenceOrbit(orbit.mu(), orbit.p(), e);
  return out;
}

GameConfig GameConfig::with_step(double step) const {
  GameConfig out = *this;
  out.h_f = step;
  return out;
}

GameConfig reference_config() {
  constexpr double pi = std::numbers::pi;
  GameConfig config{ReferenceOrbit(398603.0, 10000.0, 0.1)};
  config.weights = {5e9, 3e9, 1.0, 1.0, 1e-3, 1e-3};
  config.f0 = 0.0;
  config.ff = 2.0 * pi;
  config.h_f = pi / 500.0;
  config.r1 = 0.01;
  config.r2 = 0.01;
  config.x_a0 << 0.0, 20.0, 0.0, 0.0, 0.0, 0.0;
  config.x_da0 << -2.0, -20.0, 0.0, 0.0, 0.0, 0.0;
  return config;
}

Eigen::Matrix<double, 6, 3> SystemMatrices::b() const {
  Eigen::Matrix<double, 6, 3> out = Eigen::Matrix<double, 6, 3>::Zero();
  out.bottomRows<3>() = b_gain * Mat3::Identity();
  return out;
}

SystemMatrices system_matrices(const ReferenceOrbit& orbit, double f) {
  const double r = rho(orbit, f);
  Mat6 a = Mat6::Zero();
  a.topRightCorner<3, 3>() = Mat3::Identity();
  a(3, 0) = 3.0 / r;
  a(3, 4) = 2.0;
  a(4, 3) = -2.0;
  a(5, 2) = -1.0;
  return {a, orbit.beta() / (r * r * r)};
}

WBlocks w_blocks(const ReferenceOrbit& orbit, const WeightSet& weights,
                 double f) {
  const SystemMatrices sys = system_matrices(orbit, f);
  const double g2 = sys.b_gain * sys.b_gain;
  Mat6 bra = Mat6::Zero();
  bra.bottomRightCorner<3, 3>() = g2 / weights.r_a * Mat3::Identity();
  Mat6 bdiff = Mat6::Zero();
  bdiff.bottomRightCorner<3, 3>() =
      g2 * (1.0 / weights.r_d - 1.0 / weights.r_a) * Mat3::Identity();

  WBlocks w;
  w.w11 = block_diag(sys.a, sys.a);
  w.w12 = Block12::assemble(-bra, bra, bra, bdiff).value;
  w.w21 = Mat12::Zero();
  w.w22 = block_diag(-sys.a.transpose(), -sys.a.transpose());
  return w;
}

Mat12 riccati_rhs(const ReferenceOrbit& orbit, const WeightSet& weights,
                  double f, const Mat12& p) {
  const WBlocks w = w_blocks(orbit, weights, f);
  return w.w22 * p - p * w.w11 - p * w.w12 * p + w.w21;
}

Distances distances_of(const JointState& state) {
  return {state.attacker_position().norm(), state.relative_position().norm()};
}

Mat3 DMatrix::sub(int row_player, int col_player, StatePart row,
                  StatePart col) const {
  const int r = 6 * (row_player - 1) + static_cast<int>(row);
  const int c = 6 * (col_player - 1) + static_cast<int>(col);
  return d.value.block<3, 3>(r, c);
}

AnalyticalGame::AnalyticalGame(const GameConfig& config)
    : config_(config), p0_(riccati_p(config.orbit, config.weights, config.f0,
                                     config.ff)) {
  const ReferenceOrbit& orbit = config_.orbit;
  const double n2 = orbit.n() * orbit.n();
  k1_ = 1.0 / (n2 * n2 * config_.weights.r_a);
  k2_ = (1.0 / config_.weights.r_d - 1.0 / config_.weights.r_a) / (n2 * n2);

  lambda0_ = Costate::from_stacked(p0_.p.value * config_.initial_state().stacked());

  const FundamentalPair at0 = fundamental_pair(orbit, config_.f0);
  c_hat0_ = c_hat(orbit, at0.point.E);
  phi_inv0_ = at0.phi_inv;
  phi0_t_ = at0.phi.transpose();

  free_a_ = phi_inv0_ * config_.x_a0;
  free_da_ = phi_inv0_ * config_.x_da0;
  lambda_t_ = phi0_t_ * lambda0_.lambda;
  nu_t_ = phi0_t_ * lambda0_.nu;
  forced_a_ = k1_ * (nu_t_ - lambda_t_);
  forced_da_ = k1_ * lambda_t_ + k2_ * nu_t_;
}

AnalyticalGame::Node AnalyticalGame::node(double f) const {
  Node out{fundamental_pair(config_.orbit, f), Mat6::Zero()};
  if (f != config_.f0) {
    out.delta_c = c_hat(config_.orbit, out.pair.point.E) - c_hat0_;
  }
  return out;
}

JointState AnalyticalGame::state(double f) const {
  const Node n = node(f);
  return {n.pair.phi * (free_a_ + n.delta_c * forced_a_),
          n.pair.phi * (free_da_ + n.delta_c * forced_da_)};
}

Costate AnalyticalGame::costate(double f) const {
  const Mat6 back = fundamental_pair(config_.orbit, f).phi_inv.transpose();
  return {back * lambda_t_, back * nu_t_};
}

DMatrix AnalyticalGame::d_matrix(double f) const {
  const UBlocks u = u_blocks(config_.orbit, config_.weights, f, config_.f0);
  return {Block12(u.u11.value + u.u12.value * p0_.p.value)};
}

Costate initial_costate(const GameConfig& config) {
  const RiccatiSolution p0 =
      riccati_p(config.orbit, config.weights, config.f0, config.ff);
  return Costate::from_stacked(p0.p.value * config.initial_state().stacked());
}

DMatrix d_matrix(const GameConfig& config, double f) {
  const RiccatiSolution p0 =
      riccati_p(config.orbit, config.weights, config.f0, config.ff);
  const UBlocks u = u_blocks(config.orbit, config.weights, f, config.f0);
  return {Block12(u.u11.value + u.u12.value * p0.p.value)};
}

ControlPair nash_controls(const GameConfig& config,
                          const RiccatiSolution& p_at_f,
                          const JointState& state, double f) {
  const double gain = system_matrices(config.orbit, f).b_gain;
  const Block12& p = p_at_f.p;
  const Vec6 lambda_minus_nu =
      (p.b11() - p.b21()) * state.x_a + (p.b12() - p.b22()) * state.x_da;
  const Vec6 nu = p.b21() * state.x_a + p.b22() * state.x_da;
  return {-gain / config.weights.r_a * lambda_minus_nu.tail<3>(),
          gain / config.weights.r_d * nu.tail<3>()};
}

ControlPair costate_controls(const GameConfig& config, const Costate& costate,
                             double f) {
  const double gain = system_matrices(config.orbit, f).b_gain;
  return {-gain / config.weights.r_a * (costate.lambda - costate.nu).tail<3>(),
          gain / config.weights.r_d * costate.nu.tail<3>()};
}

Trajectory propagate_analytical(const GameConfig& config,
                                const AnalyticalOptions& options) {
  config.validate_structure();
  const AnalyticalGame game(config);
  const int n = config.steps();

  Trajectory traj;
  traj.grid.reserve(n + 1);
  traj.states.reserve(n + 1);
  traj.costates.reserve(n + 1);
  traj.controls.reserve(n + 1);
  traj.distances.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double f = config.anomaly(k);
    const JointState x = game.state(f);
    const Costate lam = game.costate(f);
    traj.grid.push_back(f);
    traj.states.push_back(x);
    traj.costates.push_back(lam);
    if (options.feedback_from_riccati) {
      traj.controls.push_back(nash_controls(
          config, riccati_p(config.orbit, config.weights, f, config.ff), x, f));
    } else {
      traj.controls.push_back(costate_controls(config, lam, f));
    }
    traj.distances.push_back(distances_of(x));
  }
  traj.cost = cost(config, traj);
  return traj;
}

double cost(const GameConfig& config, const Trajectory& trajectory) {
  if (trajectory.size() == 0) return 0.0;
  const WeightSet& w = config.weights;
  const JointState& xf = trajectory.terminal_state();
  const double terminal = 0.5 * xf.x_a.dot(w.s_a() * xf.x_a) -
                          0.5 * xf.x_da.dot(w.s_da() * xf.x_da);

  auto running = [&](std::size_t k) {
    const ControlPair& u = trajectory.controls[k];
    return 0.5 * (w.r_a * u.u_a.squaredNorm() - w.r_d * u.u_d.squaredNorm());
  };
  double integral = 0.0;
  for (std::size_t k = 1; k < trajectory.size(); ++k) {
    const double h = trajectory.grid[k] - trajectory.grid[k - 1];
    integral += 0.5 * h * (running(k - 1) + running(k));
  }
  return terminal + integral;
}

}  // namespace tad
