#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tadgame/types.hpp"

namespace tad {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,       // unexpected error or I/O failure
  kExitConfig = 2,        // scenario or argument error
  kExitNumerical = 3,     // SingularFactor, NumericalBlowup, SingularBlock
  kExitInitialState = 4,  // non-hovering wincheck input or initial capture
};

struct SimulateArgs {
  std::string scenario;
  std::string method = "analytical";
  std::string out_traj;     // empty: skip
  std::string out_summary;  // empty: stdout
};

struct CompareArgs {
  std::string scenario;
  std::string out;  // empty: stdout
};

struct WincheckArgs {
  std::string scenario;
  std::string out;      // f,g1,g2 CSV; empty: skip
  std::string verdict;  // JSON; empty: stdout
  std::optional<Vec3> rd0;
};

struct SweepArgs {
  std::string scenario;
  std::vector<double> e_list;
  std::string out;  // empty: stdout
};

struct EllipsoidArgs {
  std::string scenario;
  std::vector<double> f_list;
  std::vector<int> k_list;  // grid indices, appended after f_list
  std::string out;          // empty: stdout
};

struct BenchArgs {
  std::string scenario;
  int reps = 5;
  std::string out;  // empty: stdout
};

// Each command writes results to files or `out`, diagnostics to `err`, and
// returns an ExitCode. Library errors never escape.
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);
int cmd_wincheck(const WincheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep_e(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_ellipsoids(const EllipsoidArgs& args, std::ostream& out,
                   std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

// Comma-separated list of scalars (numbers, `pi` products/quotients).
// Empty input gives an empty list. Throws ConfigError.
std::vector<double> parse_list(const std::string& text);

}  // namespace tad
