#include "tadgame/winning.hpp"

#include <cmath>

#include "tadgame/errors.hpp"
#include "tadgame/riccati.hpp"
#include "tadgame/tolerances.hpp"

namespace tad {

void TerminalSets::validate() const {
  if (!(r1 > 0.0) || !(r2 > 0.0)) {
    throw ConfigError("safety radii R1 and R2 must be positive");
  }
}

TerminalSets terminal_sets(const GameConfig& config) {
  return {config.r1, config.r2};
}

std::string to_string(OutcomeTag tag) {
  switch (tag) {
    case OutcomeTag::kAttackerWins:
      return "attacker_wins";
    case OutcomeTag::kDefenderWins:
      return "defender_wins";
    case OutcomeTag::kSimultaneousCapture:
      return "simultaneous_capture";
    case OutcomeTag::kNobodyWins:
      return "nobody_wins";
  }
  return "unknown";
}

Outcome classify_outcome(const Trajectory& trajectory, const TerminalSets& sets) {
  for (std::size_t k = 1; k < trajectory.size(); ++k) {
    const Distances& d = trajectory.distances[k];
    const bool capture = sets.captured(d);
    const bool intercept = sets.intercepted(d);
    if (!capture && !intercept) continue;
    Outcome out;
    const double f = trajectory.grid[k];
    if (capture) out.f_capture = f;
    if (intercept) out.f_intercept = f;
    out.tag = capture && intercept ? OutcomeTag::kSimultaneousCapture
              : capture            ? OutcomeTag::kAttackerWins
                                   : OutcomeTag::kDefenderWins;
    return out;
  }
  return {};
}

double Ellipsoid::q(const Vec3& r) const {
  return r.dot(g * r) - 2.0 * center_offset.dot(g * r) +
         center_offset.dot(g * center_offset) - radius * radius;
}

namespace {

void require_hovering(const GameConfig& config) {
  if (!config.hovering()) {
    throw InitialStateError(
        "winning conditions require hovering initial states (zero velocities)");
  }
}

// Generating block M and center offset c with ||M (Rd0 - c)|| the distance
// governed by the set.
struct RawGenerator {
  Mat3 m;
  Vec3 center;
  double condition;
};

RawGenerator make_generator(const DMatrix& d, const Vec3& ra0, WhichSet which) {
  const Mat3 m = which == WhichSet::kS1 ? d.d12rr() : d.d22rr();
  const Mat3 k = which == WhichSet::kS1 ? d.d11rr() : d.d21rr();
  const Eigen::PartialPivLU<Mat3> lu(m);
  const double rcond = lu.rcond();
  const double condition = rcond > 0.0 ? 1.0 / rcond : INFINITY;
  if (!(condition <= kTolerances.singular_condition)) {
    return {m, Vec3::Constant(NAN), condition};
  }
  return {m, ra0 - lu.solve(k * ra0), condition};
}

const char* block_name(WhichSet which) {
  return which == WhichSet::kS1 ? "D12rr" : "D22rr";
}

void require_regular(const RawGenerator& gen, WhichSet which, double f) {
  if (!(gen.condition <= kTolerances.singular_condition)) {
    throw SingularBlock(block_name(which), f, gen.condition);
  }
}

double quadratic(const Mat3& m, const Vec3& center, double radius,
                 const Vec3& rd0) {
  return (m * (rd0 - center)).squaredNorm() - radius * radius;
}

Ellipsoid to_ellipsoid(const Mat3& m, const Vec3& center, double radius) {
  return {m.transpose() * m, center, radius};
}

}  // namespace

WinningAnalysis::WinningAnalysis(const GameConfig& config) : config_(config) {
  config_.validate_structure();
  require_hovering(config_);
  const AnalyticalGame game(config_);
  const Vec3 ra0 = config_.x_a0.head<3>();
  const int n = config_.steps();
  s1_.reserve(n + 1);
  s2_.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const DMatrix d = game.d_matrix(config_.anomaly(k));
    const RawGenerator a = make_generator(d, ra0, WhichSet::kS1);
    const RawGenerator b = make_generator(d, ra0, WhichSet::kS2);
    s1_.push_back({a.m, a.center, a.condition});
    s2_.push_back({b.m, b.center, b.condition});
  }
}

const WinningAnalysis::Generator& WinningAnalysis::generator(
    int k, WhichSet which) const {
  const Generator& gen = which == WhichSet::kS1 ? s1_.at(k) : s2_.at(k);
  if (!(gen.condition <= kTolerances.singular_condition)) {
    throw SingularBlock(block_name(which), config_.anomaly(k), gen.condition);
  }
  return gen;
}

double WinningAnalysis::g1(int k, const Vec3& rd0) const {
  const Generator& gen = generator(k, WhichSet::kS1);
  return quadratic(gen.m, gen.center, config_.r1, rd0);
}

double WinningAnalysis::g2(int k, const Vec3& rd0) const {
  const Generator& gen = generator(k, WhichSet::kS2);
  return quadratic(gen.m, gen.center, config_.r2, rd0);
}

Ellipsoid WinningAnalysis::ellipsoid(int k, WhichSet which) const {
  const Generator& gen = generator(k, which);
  return to_ellipsoid(gen.m, gen.center,
                      which == WhichSet::kS1 ? config_.r1 : config_.r2);
}

WinVerdict WinningAnalysis::attacker_wins(const Vec3& rd0) const {
  for (int k = 1; k <= steps(); ++k) {
    if (g2(k, rd0) <= 0.0) return {};
    if (g1(k, rd0) <= 0.0) return {true, config_.anomaly(k), k};
  }
  return {};
}

double g1(const GameConfig& config, double f, const Vec3& rd0) {
  require_hovering(config);
  const RawGenerator gen =
      make_generator(d_matrix(config, f), config.x_a0.head<3>(), WhichSet::kS1);
  require_regular(gen, WhichSet::kS1, f);
  return quadratic(gen.m, gen.center, config.r1, rd0);
}

double g2(const GameConfig& config, double f, const Vec3& rd0) {
  require_hovering(config);
  const RawGenerator gen =
      make_generator(d_matrix(config, f), config.x_a0.head<3>(), WhichSet::kS2);
  require_regular(gen, WhichSet::kS2, f);
  return quadratic(gen.m, gen.center, config.r2, rd0);
}

Ellipsoid ellipsoid_at(const GameConfig& config, double f, WhichSet which) {
  require_hovering(config);
  const RawGenerator gen =
      make_generator(d_matrix(config, f), config.x_a0.head<3>(), which);
  require_regular(gen, which, f);
  return to_ellipsoid(gen.m, gen.center,
                      which == WhichSet::kS1 ? config.r1 : config.r2);
}

WinVerdict attacker_wins(const GameConfig& config) {
  config.validate();
  return WinningAnalysis(config).attacker_wins(config.defender_position0());
}

bool winning_set_membership(const GameConfig& config, const Vec3& rd0) {
  const GameConfig probe = config.with_defender_position(rd0);
  probe.validate();
  return WinningAnalysis(probe).attacker_wins(rd0).attacker_wins;
}

}  // namespace tad
