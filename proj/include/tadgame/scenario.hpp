#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tadgame/game.hpp"

namespace tad {

// Plain-text scenario: one `key = value` per line, `#` starts a comment.
// Keys: mu, p, e, f0, ff, h_f, r_a, r_d, s_ar, s_av, s_dar, s_dav, xa0, xda0,
// R1, R2. Vectors are 6 comma-separated numbers. Scalars accept products and
// quotients of numbers and `pi`, e.g. `2*pi` or `pi/500`.
// Throws ConfigError carrying the offending line number.
GameConfig parse_scenario(const std::string& text);
GameConfig load_scenario(const std::string& path);

// One scalar value: products and quotients of numbers and `pi`.
double parse_scalar(const std::string& text, int line = 0);

// Serializes every key at 17 significant digits; parse_scenario round-trips.
std::string format_scenario(const GameConfig& config);

// Header `f,xa1..xa6,xda1..xda6,ua1..ua3,ud1..ud3,dist_at,dist_da`, one row per
// grid node, 15 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);
void save_trajectory_csv(const std::string& path, const Trajectory& trajectory);

// Inverse of write_trajectory_csv. Costates are not part of the file and
// come back empty; cost is left at zero.
Trajectory read_trajectory_csv(std::istream& in);

struct SummaryRecord {
  std::string method;  // analytical | numerical
  double terminal_dist_at = 0.0;
  double terminal_dist_da = 0.0;
  double J = 0.0;
  double wall_seconds = 0.0;
  std::string outcome;
  std::optional<double> f_capture;
  std::optional<double> f_intercept;

  // Single-line JSON object; absent anomalies serialize as null.
  std::string to_json() const;
};

SummaryRecord summarize(const std::string& method, const GameConfig& config,
                        const Trajectory& trajectory, double wall_seconds);

}  // namespace tad
