#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tadgame/errors.hpp"
#include "tadgame/winning.hpp"

namespace {

using oracle::kPi;
using tad::GameConfig;
using tad::Vec3;

tad::Trajectory synthetic(const std::vector<std::pair<double, double>>& dists) {
  tad::Trajectory t;
  for (std::size_t k = 0; k < dists.size(); ++k) {
    t.grid.push_back(0.1 * k);
    t.states.emplace_back();
    t.controls.emplace_back();
    t.distances.push_back({dists[k].first, dists[k].second});
  }
  return t;
}

TEST(TerminalSets, Validation) {
  EXPECT_NO_THROW((tad::TerminalSets{0.1, 0.1}.validate()));
  EXPECT_THROW((tad::TerminalSets{0.0, 0.1}.validate()), tad::ConfigError);
  EXPECT_THROW((tad::TerminalSets{0.1, -1.0}.validate()), tad::ConfigError);
}

TEST(ClassifyOutcome, SyntheticCases) {
  const tad::TerminalSets sets{1.0, 1.0};
  EXPECT_EQ(tad::classify_outcome(synthetic({{5, 5}, {4, 4}, {3, 3}}), sets).tag,
            tad::OutcomeTag::kNobodyWins);
  const tad::Outcome sim = tad::classify_outcome(synthetic({{5, 5}, {0.5, 0.9}, {0.1, 0.1}}), sets);
  EXPECT_EQ(sim.tag, tad::OutcomeTag::kSimultaneousCapture);
  EXPECT_DOUBLE_EQ(*sim.f_capture, 0.1);
  EXPECT_DOUBLE_EQ(*sim.f_intercept, 0.1);
  const tad::Outcome def = tad::classify_outcome(synthetic({{5, 5}, {3, 1.0}, {0.1, 3}}), sets);
  EXPECT_EQ(def.tag, tad::OutcomeTag::kDefenderWins);
  EXPECT_FALSE(def.f_capture.has_value());
  EXPECT_DOUBLE_EQ(*def.f_intercept, 0.1);
  const tad::Outcome att = tad::classify_outcome(synthetic({{5, 5}, {3, 3}, {1.0, 3}, {3, 0.1}}), sets);
  EXPECT_EQ(att.tag, tad::OutcomeTag::kAttackerWins);
  EXPECT_DOUBLE_EQ(*att.f_capture, 0.2);
  EXPECT_FALSE(att.f_intercept.has_value());
}

TEST(ClassifyOutcome, InitialSampleIsIgnored) {
  EXPECT_EQ(tad::classify_outcome(synthetic({{0.1, 0.1}, {5, 5}}), {1.0, 1.0}).tag,
            tad::OutcomeTag::kNobodyWins);
}

TEST(ClassifyOutcome, TagNames) {
  EXPECT_EQ(tad::to_string(tad::OutcomeTag::kAttackerWins), "attacker_wins");
  EXPECT_EQ(tad::to_string(tad::OutcomeTag::kDefenderWins), "defender_wins");
  EXPECT_EQ(tad::to_string(tad::OutcomeTag::kSimultaneousCapture), "simultaneous_capture");
  EXPECT_EQ(tad::to_string(tad::OutcomeTag::kNobodyWins), "nobody_wins");
}

class WinningTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    config_ = new GameConfig(tad::reference_config());
    analysis_ = new tad::WinningAnalysis(*config_);
  }
  static void TearDownTestSuite() {
    delete analysis_;
    delete config_;
  }
  static Vec3 rd0() { return config_->defender_position0(); }
  static GameConfig* config_;
  static tad::WinningAnalysis* analysis_;
};

GameConfig* WinningTest::config_ = nullptr;
tad::WinningAnalysis* WinningTest::analysis_ = nullptr;

TEST_F(WinningTest, ReferenceTrajectoryOutcome) {
  const tad::Outcome out =
      tad::classify_outcome(tad::propagate_analytical(*config_), tad::terminal_sets(*config_));
  EXPECT_EQ(out.tag, tad::OutcomeTag::kAttackerWins);
  EXPECT_EQ(*out.f_capture, config_->anomaly(984));
}

TEST_F(WinningTest, G1CrossesZeroBetween983And984) {
  for (int k = 1; k <= 983; ++k) ASSERT_GT(analysis_->g1(k, rd0()), 0.0) << "k=" << k;
  EXPECT_LE(analysis_->g1(984, rd0()), 0.0);
  EXPECT_GT(tad::g1(*config_, config_->anomaly(983), rd0()), 0.0);
  EXPECT_LE(tad::g1(*config_, config_->anomaly(984), rd0()), 0.0);
}

TEST_F(WinningTest, G2PositiveOverTheGrid) {
  for (int k = 1; k <= 1000; ++k) ASSERT_GT(analysis_->g2(k, rd0()), 0.0) << "k=" << k;
}

TEST_F(WinningTest, FreeFunctionsMatchPrecomputedAnalysis) {
  for (int k : {1, 200, 984, 1000}) {
    const double f = config_->anomaly(k);
    EXPECT_LE(oracle::rel(tad::g1(*config_, f, rd0()), analysis_->g1(k, rd0())), 1e-10);
    EXPECT_LE(oracle::rel(tad::g2(*config_, f, rd0()), analysis_->g2(k, rd0())), 1e-10);
  }
}

TEST_F(WinningTest, LargeCaptureRadiusMakesG1Negative) {
  GameConfig c = *config_;
  c.r1 = 1e6;
  for (const Vec3& p : {Vec3(-2, 0, 0), Vec3(50, -30, 10), Vec3(0, 0, 100)}) {
    EXPECT_LT(tad::g1(c, 3.0, p), 0.0);
  }
}

TEST_F(WinningTest, TinyInterceptionRadiusKeepsG2PositiveAwayFromCenter) {
  GameConfig c = *config_;
  c.r2 = 1e-12;
  const tad::Ellipsoid el = tad::ellipsoid_at(c, 3.0, tad::WhichSet::kS2);
  EXPECT_GT(tad::g2(c, 3.0, el.center_offset + Vec3(1, 1, 1)), 0.0);
}

TEST_F(WinningTest, ReferenceVerdict) {
  const tad::WinVerdict v = tad::attacker_wins(*config_);
  EXPECT_TRUE(v.attacker_wins);
  EXPECT_EQ(*v.index, 984);
  EXPECT_EQ(*v.f_a, config_->anomaly(984));
  EXPECT_TRUE(tad::winning_set_membership(*config_, rd0()));
}

TEST_F(WinningTest, MembershipRejectsInitialCapture) {
  EXPECT_THROW(tad::winning_set_membership(*config_, Vec3(0.0, 20.005, 0.0)), tad::InitialStateError);
}

TEST_F(WinningTest, NonHoveringInputRejected) {
  GameConfig c = *config_;
  c.x_a0[4] = 0.1;
  EXPECT_THROW(tad::WinningAnalysis{c}, tad::InitialStateError);
  EXPECT_THROW(tad::attacker_wins(c), tad::InitialStateError);
  EXPECT_THROW(tad::g1(c, 1.0, rd0()), tad::InitialStateError);
}

TEST_F(WinningTest, SingularBlockAtInitialAnomaly) {
  try {
    tad::g1(*config_, config_->f0, rd0());
    FAIL() << "expected SingularBlock";
  } catch (const tad::SingularBlock& e) {
    EXPECT_EQ(e.module(), "winning");
    EXPECT_EQ(e.anomaly(), config_->f0);
  }
  EXPECT_THROW(analysis_->g1(0, rd0()), tad::SingularBlock);
  // D22rr is the identity at f0, so S2 stays well defined there.
  EXPECT_NO_THROW(analysis_->g2(0, rd0()));
  EXPECT_THROW(tad::ellipsoid_at(*config_, config_->f0, tad::WhichSet::kS1), tad::SingularBlock);
}

// Brute-force set equivalence: sign of g against the directly propagated
// distance on a 20^3 grid of defender initial positions. The grid is laid out
// in the eigenbasis of G around `anchor`, with half-widths of 1.5 semi-axes
// capped at `cap` km.
void expect_set_equivalence(const GameConfig& config, const tad::WinningAnalysis& analysis,
                            int k, tad::WhichSet which, const Vec3& anchor, double cap) {
  const tad::Ellipsoid el = analysis.ellipsoid(k, which);
  const Eigen::SelfAdjointEigenSolver<tad::Mat3> eig(el.g);
  Vec3 half;
  for (int i = 0; i < 3; ++i) {
    half[i] = std::min(cap, 1.5 * el.radius / std::sqrt(eig.eigenvalues()[i]));
  }
  const double f = config.anomaly(k);
  const bool s1 = which == tad::WhichSet::kS1;
  int inside = 0;
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      for (int l = 0; l < 20; ++l) {
        const Vec3 t = Vec3(i, j, l) / 9.5 - Vec3::Ones();
        const Vec3 rd = anchor + eig.eigenvectors() * half.cwiseProduct(t);
        const GameConfig probe = config.with_defender_position(rd);
        if (probe.x_da0.head<3>().norm() <= config.r2) continue;
        const tad::JointState x = tad::AnalyticalGame(probe).state(f);
        const double dist = s1 ? x.attacker_position().norm() : x.relative_position().norm();
        const double radius = s1 ? config.r1 : config.r2;
        const double g = s1 ? analysis.g1(k, rd) : analysis.g2(k, rd);
        ++checked;
        if (std::abs(dist - radius) < 1e-12) continue;
        inside += dist <= radius;
        ASSERT_EQ(g <= 0.0, dist <= radius) << "rd0=" << rd.transpose() << " k=" << k;
      }
    }
  }
  EXPECT_GT(inside, 0);
  EXPECT_LT(inside, checked);
}

TEST_F(WinningTest, G1SignMatchesDirectPropagation) {
  expect_set_equivalence(*config_, *analysis_, 984, tad::WhichSet::kS1, rd0(), 1e9);
  expect_set_equivalence(*config_, *analysis_, 1000, tad::WhichSet::kS1, rd0(), 1e9);
}

TEST_F(WinningTest, G2SignMatchesDirectPropagation) {
  for (int k : {300, 984}) {
    const Vec3 center = analysis_->ellipsoid(k, tad::WhichSet::kS2).center_offset;
    expect_set_equivalence(*config_, *analysis_, k, tad::WhichSet::kS2, center, 10.0);
  }
}

TEST_F(WinningTest, HoveringReduction) {
  const tad::DMatrix d = tad::d_matrix(*config_, 4.0);
  const tad::Vec12 y = d.d.value * config_->initial_state().stacked();
  const Vec3 ra0 = config_->x_a0.head<3>();
  const Vec3 rda0 = config_->x_da0.head<3>();
  EXPECT_LE(oracle::rel_diff(y.head<3>(), d.d11rr() * ra0 + d.d12rr() * rda0), 1e-14);
  EXPECT_LE(oracle::rel_diff(y.segment<3>(6), d.d21rr() * ra0 + d.d22rr() * rda0), 1e-14);
}

TEST_F(WinningTest, AttackerLosesWhenDefenderSitsOnTheApproachPath) {
  // Slide the defender along the attacker-target segment until interception
  // happens before capture.
  std::optional<Vec3> blocker;
  for (int i = 1; i < 200 && !blocker; ++i) {
    const Vec3 rd(0.0, 20.0 - 0.1 * i, 0.0);
    if (!analysis_->attacker_wins(rd).attacker_wins) blocker = rd;
  }
  ASSERT_TRUE(blocker.has_value());
  EXPECT_FALSE(tad::winning_set_membership(*config_, *blocker));
  const GameConfig probe = config_->with_defender_position(*blocker);
  const tad::Outcome out =
      tad::classify_outcome(tad::propagate_analytical(probe), tad::terminal_sets(probe));
  EXPECT_NE(out.tag, tad::OutcomeTag::kAttackerWins);
}

TEST_F(WinningTest, VerdictAgreesWithTrajectoryClassification) {
  int wins = 0;
  int losses = 0;
  for (int i = 0; i < 100; ++i) {
    Vec3 rd;
    do {
      rd = rd0() + Vec3(oracle::uniform(-2.5, 2.5), oracle::uniform(-2.5, 2.5),
                        oracle::uniform(-2.5, 2.5));
    } while ((rd - config_->x_a0.head<3>()).norm() <= config_->r2);
    const GameConfig probe = config_->with_defender_position(rd);
    const tad::WinVerdict v = analysis_->attacker_wins(rd);
    const tad::Outcome out =
        tad::classify_outcome(tad::propagate_analytical(probe), tad::terminal_sets(probe));
    ASSERT_EQ(v.attacker_wins, out.tag == tad::OutcomeTag::kAttackerWins) << rd.transpose();
    if (v.attacker_wins) {
      ASSERT_EQ(*v.f_a, *out.f_capture);
      ++wins;
    } else {
      ++losses;
    }
  }
  EXPECT_GT(wins, 0);
}

TEST_F(WinningTest, MembershipStableUnderGridRefinement) {
  const tad::WinningAnalysis fine(config_->with_step(config_->h_f / 2));
  int flips = 0;
  int members = 0;
  for (int i = 0; i < 30; ++i) {
    for (int j = 0; j < 30; ++j) {
      const Vec3 rd = rd0() + Vec3(-3.0 + 6.0 * i / 29, -3.0 + 6.0 * j / 29, 0.0);
      if ((rd - config_->x_a0.head<3>()).norm() <= config_->r2) continue;
      const bool coarse = analysis_->attacker_wins(rd).attacker_wins;
      members += coarse;
      flips += coarse != fine.attacker_wins(rd).attacker_wins;
    }
  }
  EXPECT_GT(members, 0);
  EXPECT_LT(flips, 0.05 * 900);
}

TEST_F(WinningTest, EllipsoidCenterAndMembership) {
  const tad::Ellipsoid s1_984 = tad::ellipsoid_at(*config_, config_->anomaly(984), tad::WhichSet::kS1);
  const tad::Ellipsoid s1_983 = tad::ellipsoid_at(*config_, config_->anomaly(983), tad::WhichSet::kS1);
  EXPECT_TRUE(s1_984.contains(rd0()));
  EXPECT_FALSE(s1_983.contains(rd0()));
  for (const tad::Ellipsoid& el : {s1_984, s1_983}) {
    EXPECT_NEAR(el.q(el.center_offset), -el.radius * el.radius, 1e-12 * el.radius * el.radius);
  }
}

TEST_F(WinningTest, EllipsoidQuadraticMatchesG) {
  for (int k : {100, 500, 984}) {
    for (tad::WhichSet which : {tad::WhichSet::kS1, tad::WhichSet::kS2}) {
      const tad::Ellipsoid el = analysis_->ellipsoid(k, which);
      const Eigen::SelfAdjointEigenSolver<tad::Mat3> eig(el.g);
      EXPECT_GE(eig.eigenvalues().minCoeff(), 0.0);
      for (int i = 0; i < 334; ++i) {
        const Vec3 p = el.center_offset + Vec3(oracle::uniform(-3, 3), oracle::uniform(-3, 3),
                                               oracle::uniform(-3, 3));
        const double g = which == tad::WhichSet::kS1 ? analysis_->g1(k, p) : analysis_->g2(k, p);
        const double q = el.q(p);
        // The expanded form cancels terms of size c^T G c.
        const double terms = p.dot(el.g * p) + el.center_offset.dot(el.g * el.center_offset);
        ASSERT_LE(std::abs(q - g), 1e-10 * std::max(1.0, terms));
        if (std::abs(g) > 1e-9) ASSERT_EQ(q <= 0.0, g <= 0.0);
      }
    }
  }
}

}  // namespace
