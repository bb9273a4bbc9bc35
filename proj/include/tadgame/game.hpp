#pragma once

#include <cstddef>
#include <vector>

#include "tadgame/orbit.hpp"
#include "tadgame/riccati.hpp"
#include "tadgame/types.hpp"

namespace tad {

// Joint state y = [Xa; xda] in tilde coordinates (km, km/rad). The target
// sits at the origin, so Xa is also the attacker-target relative state.
struct JointState {
  Vec6 x_a = Vec6::Zero();
  Vec6 x_da = Vec6::Zero();

  Vec12 stacked() const;
  static JointState from_stacked(const Vec12& y);

  Vec3 attacker_position() const { return x_a.head<3>(); }
  Vec3 attacker_velocity() const { return x_a.tail<3>(); }
  Vec3 relative_position() const { return x_da.head<3>(); }
  Vec3 relative_velocity() const { return x_da.tail<3>(); }
};

struct Costate {
  Vec6 lambda = Vec6::Zero();
  Vec6 nu = Vec6::Zero();

  Vec12 stacked() const;
  static Costate from_stacked(const Vec12& v);
};

// Raw control vectors entering B u in the true-anomaly dynamics.
struct ControlPair {
  Vec3 u_a = Vec3::Zero();
  Vec3 u_d = Vec3::Zero();
};

struct GameConfig {
  explicit GameConfig(const ReferenceOrbit& reference) : orbit(reference) {}

  ReferenceOrbit orbit;
  WeightSet weights;
  double f0 = 0.0;
  double ff = 0.0;
  double h_f = 0.0;
  double r1 = 0.0;  // capture radius around the target, km
  double r2 = 0.0;  // interception radius around the attacker, km
  Vec6 x_a0 = Vec6::Zero();
  Vec6 x_da0 = Vec6::Zero();

  // Throws ConfigError on invalid weights, an invalid window, a grid that does
  // not close on ff, non-positive radii or non-finite states.
  void validate_structure() const;
  // validate_structure() plus InitialStateError when the initial state already
  // lies inside a terminal set.
  void validate() const;

  // Number of grid intervals (ff - f0) / h_f.
  int steps() const;
  // Grid node k; node steps() is exactly ff.
  double anomaly(int k) const;

  JointState initial_state() const { return {x_a0, x_da0}; }
  bool hovering() const;
  Vec3 defender_position0() const {
    return x_a0.head<3>() + x_da0.head<3>();
  }

  GameConfig with_defender_position(const Vec3& rd0) const;
  GameConfig with_eccentricity(double e) const;
  GameConfig with_step(double h_f) const;
};

// The reference engagement used throughout the tests and docs: p = 10000 km,
// e = 0.1, one revolution at h_f = pi/500, attacker hovering at (0, 20, 0) km
// and defender at (-2, 0, 0) km.
GameConfig reference_config();

struct SystemMatrices {
  Mat6 a;
  double b_gain;  // beta / rho^3

  // (beta / rho^3) [0; I3]
  Eigen::Matrix<double, 6, 3> b() const;
};

SystemMatrices system_matrices(const ReferenceOrbit& orbit, double f);

struct WBlocks {
  Mat12 w11;
  Mat12 w12;
  Mat12 w21;
  Mat12 w22;
};

// Blocks of the coupled state/costate system at f.
WBlocks w_blocks(const ReferenceOrbit& orbit, const WeightSet& weights,
                 double f);

// Right-hand side of P' = W22 P - P W11 - P W12 P.
Mat12 riccati_rhs(const ReferenceOrbit& orbit, const WeightSet& weights,
                  double f, const Mat12& p);

struct Distances {
  double attacker_target = 0.0;    // |Ra|
  double defender_attacker = 0.0;  // |rda|
};

Distances distances_of(const JointState& state);

struct Trajectory {
  std::vector<double> grid;
  std::vector<JointState> states;
  std::vector<Costate> costates;
  std::vector<ControlPair> controls;
  std::vector<Distances> distances;
  double cost = 0.0;

  std::size_t size() const { return grid.size(); }
  const JointState& terminal_state() const { return states.back(); }
};

enum class StatePart { kPosition = 0, kVelocity = 3 };

// D(f, ff, f0) = U11(f, f0) + U12(f, f0) P(f0), so y(f) = D y(f0).
struct DMatrix {
  Block12 d;

  // 3x3 sub-block: `row_player` / `col_player` are 1 (attacker) or 2
  // (relative defender-attacker).
  Mat3 sub(int row_player, int col_player, StatePart row, StatePart col) const;

  Mat3 d11rr() const { return sub(1, 1, StatePart::kPosition, StatePart::kPosition); }
  Mat3 d11rv() const { return sub(1, 1, StatePart::kPosition, StatePart::kVelocity); }
  Mat3 d12rr() const { return sub(1, 2, StatePart::kPosition, StatePart::kPosition); }
  Mat3 d12rv() const { return sub(1, 2, StatePart::kPosition, StatePart::kVelocity); }
  Mat3 d21rr() const { return sub(2, 1, StatePart::kPosition, StatePart::kPosition); }
  Mat3 d21rv() const { return sub(2, 1, StatePart::kPosition, StatePart::kVelocity); }
  Mat3 d22rr() const { return sub(2, 2, StatePart::kPosition, StatePart::kPosition); }
  Mat3 d22rv() const { return sub(2, 2, StatePart::kPosition, StatePart::kVelocity); }
};

// Closed-form solution of one game: P(f0) and Lambda(f0) are computed once,
// after which state, costate and D at any anomaly are direct evaluations.
class AnalyticalGame {
 public:
  explicit AnalyticalGame(const GameConfig& config);

  const GameConfig& config() const { return config_; }
  const RiccatiSolution& initial_riccati() const { return p0_; }
  const Costate& initial_costate() const { return lambda0_; }

  JointState state(double f) const;
  Costate costate(double f) const;
  DMatrix d_matrix(double f) const;

 private:
  struct Node {
    FundamentalPair pair;
    Mat6 delta_c;  // c_hat(E) - c_hat(E0)
  };
  Node node(double f) const;

  GameConfig config_;
  RiccatiSolution p0_;
  Costate lambda0_;
  double k1_;  // 1 / (n^4 r_a)
  double k2_;  // (1/r_d - 1/r_a) / n^4
  Mat6 c_hat0_;
  Mat6 phi_inv0_;
  Mat6 phi0_t_;
  Vec6 free_a_, free_da_;      // phi^-1(f0) x(f0)
  Vec6 forced_a_, forced_da_;  // costate forcing mapped through phi(f0)^T
  Vec6 lambda_t_, nu_t_;       // phi(f0)^T lambda(f0), phi(f0)^T nu(f0)
};

// Lambda(f0) = P(f0) y(f0). Propagates SingularFactor.
Costate initial_costate(const GameConfig& config);

DMatrix d_matrix(const GameConfig& config, double f);

// Feedback form of the equilibrium strategies from P(f).
ControlPair nash_controls(const GameConfig& config, const RiccatiSolution& p_at_f,
                          const JointState& state, double f);

// Costate form: u_a = -Ra^-1 B^T (lambda - nu), u_d = Rd^-1 B^T nu.
ControlPair costate_controls(const GameConfig& config, const Costate& costate,
                             double f);

struct AnalyticalOptions {
  // Recompute P(f) at every node and use the feedback form for the controls.
  // Off by default: the costate form gives the same controls without a 12x12
  // factorization per node.
  bool feedback_from_riccati = false;
};

Trajectory propagate_analytical(const GameConfig& config,
                                const AnalyticalOptions& options = {});

// Terminal cost plus trapezoid rule of the running cost on the trajectory grid.
double cost(const GameConfig& config, const Trajectory& trajectory);

}  // namespace tad
