#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tadgame/game.hpp"
#include "tadgame/types.hpp"

namespace tad {

struct TerminalSets {
  double r1 = 0.0;  // capture radius around the target, km
  double r2 = 0.0;  // interception radius around the attacker, km

  // Throws ConfigError unless both radii are positive.
  void validate() const;
  bool captured(const Distances& d) const { return d.attacker_target <= r1; }
  bool intercepted(const Distances& d) const {
    return d.defender_attacker <= r2;
  }
};

TerminalSets terminal_sets(const GameConfig& config);

enum class OutcomeTag {
  kAttackerWins,
  kDefenderWins,
  kSimultaneousCapture,
  kNobodyWins,
};

std::string to_string(OutcomeTag tag);

struct Outcome {
  OutcomeTag tag = OutcomeTag::kNobodyWins;
  std::optional<double> f_capture;
  std::optional<double> f_intercept;
};

// First grid sample after f0 that enters a terminal set decides the game.
Outcome classify_outcome(const Trajectory& trajectory, const TerminalSets& sets);

enum class WhichSet { kS1, kS2 };

// {R : (R - c)^T G (R - c) <= radius^2} in defender initial position space.
struct Ellipsoid {
  Mat3 g = Mat3::Zero();
  Vec3 center_offset = Vec3::Zero();
  double radius = 0.0;

  // R^T G R - 2 c^T G R + c^T G c - radius^2
  double q(const Vec3& r) const;
  bool contains(const Vec3& r) const { return q(r) <= 0.0; }
};

struct WinVerdict {
  bool attacker_wins = false;
  std::optional<double> f_a;  // first grid anomaly with g1 <= 0
  std::optional<int> index;   // grid index of f_a
};

// Winning conditions for hovering initial states. D(f) depends only on the
// orbit, weights and window, so the per-node blocks are built once and any
// number of defender initial positions can then be tested.
class WinningAnalysis {
 public:
  // Throws InitialStateError unless the initial velocities are zero.
  explicit WinningAnalysis(const GameConfig& config);

  const GameConfig& config() const { return config_; }
  int steps() const { return config_.steps(); }

  // Evaluated at grid node k. Throw SingularBlock when the generating block
  // at that node is not invertible.
  double g1(int k, const Vec3& rd0) const;
  double g2(int k, const Vec3& rd0) const;
  Ellipsoid ellipsoid(int k, WhichSet which) const;

  WinVerdict attacker_wins(const Vec3& rd0) const;

 private:
  struct Generator {
    Mat3 m;          // D12rr or D22rr
    Vec3 center;     // r1 or r2 offset
    double condition;
  };
  const Generator& generator(int k, WhichSet which) const;

  GameConfig config_;
  std::vector<Generator> s1_;
  std::vector<Generator> s2_;
};

// Single-anomaly variants evaluated from D(f).
double g1(const GameConfig& config, double f, const Vec3& rd0);
double g2(const GameConfig& config, double f, const Vec3& rd0);
Ellipsoid ellipsoid_at(const GameConfig& config, double f, WhichSet which);

// Uses the scenario's own defender initial position.
WinVerdict attacker_wins(const GameConfig& config);

// Membership of rd0 in the attacker winning set. Throws InitialStateError if
// rd0 violates the no-initial-capture precondition.
bool winning_set_membership(const GameConfig& config, const Vec3& rd0);

}  // namespace tad
