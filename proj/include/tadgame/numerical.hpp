#pragma once

#include <functional>
#include <vector>

#include "tadgame/game.hpp"
#include "tadgame/types.hpp"

namespace tad {

// Classical 4-stage Runge-Kutta step; h < 0 integrates backward.
template <class State, class Field>
State rk4_step(Field&& field, const State& y, double f, double h) {
  const double half = 0.5 * h;
  const State k1 = field(f, y);
  const State k2 = field(f + half, State(y + half * k1));
  const State k3 = field(f + half, State(y + half * k2));
  const State k4 = field(f + h, State(y + h * k3));
  return State(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

enum class Direction { kForward, kBackward };

struct Rk4Settings {
  double step = 0.0;  // rad, > 0
  Direction direction = Direction::kForward;

  // Throws ConfigError unless step > 0.
  void validate() const;
  double signed_step() const {
    return direction == Direction::kForward ? step : -step;
  }
};

// How the forward simulation obtains P at the RK4 mid-stage anomaly f + h/2.
enum class MidStage {
  kStoredHalfStep,  // P recorded at the half-step node during the backward pass
  kLinear,          // entrywise linear interpolation of the bracketing nodes
};

struct NumericalOptions {
  // Backward RK4 substeps per half grid interval. The Riccati ODE is stiff at
  // the grid step itself, so the default internal step is h_f / 20.
  int riccati_substeps = 10;
  MidStage mid_stage = MidStage::kStoredHalfStep;

  void validate() const;
};

struct PGrid {
  // Descending from ff to f0 in steps of h_f; nodes[i] is P at anomalies[i].
  std::vector<double> anomalies;
  std::vector<Mat12> nodes;
  // midpoints[i] is P at anomalies[i] - h_f / 2.
  std::vector<Mat12> midpoints;

  int intervals() const { return static_cast<int>(nodes.size()) - 1; }
  // P at ascending grid index k (anomaly f0 + k h_f).
  const Mat12& at(int k) const { return nodes[intervals() - k]; }
  // P at f0 + (k + 1/2) h_f.
  Mat12 mid(int k, MidStage mode) const;
};

// Backward RK4 of P' = W22 P - P W11 - P W12 P from P(ff) = diag(Sa, -Sda).
// Throws NumericalBlowup when an entry exceeds 1e15 or becomes non-finite.
PGrid integrate_riccati_backward(const GameConfig& config,
                                 const NumericalOptions& options = {});

// Forward RK4 of the closed-loop joint dynamics on the h_f grid with
// feedback from the stored P. Throws NumericalBlowup.
Trajectory simulate_numerical(const GameConfig& config, const PGrid& pgrid,
                              const NumericalOptions& options = {});

enum class Player { kAttacker, kDefender };

// Open-loop perturbation of one player's control: u -> u + scale * profile(f),
// while the other player keeps the feedback law.
struct Deviation {
  Player player = Player::kAttacker;
  std::function<Vec3(double)> profile;
  double scale = 0.0;
};

// simulate_numerical with one player deviating; controls and cost include the
// deviation.
Trajectory simulate_deviation(const GameConfig& config, const PGrid& pgrid,
                              const Deviation& deviation,
                              const NumericalOptions& options = {});

// integrate_riccati_backward followed by simulate_numerical.
Trajectory simulate_numerical(const GameConfig& config,
                              const NumericalOptions& options = {});

}  // namespace tad
