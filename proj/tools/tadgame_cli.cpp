#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tadgame/commands.hpp"
#include "tadgame/errors.hpp"

namespace {

constexpr const char* kUnits =
    "Units: lengths in km, anomalies in rad, tilde velocities in km/rad,\n"
    "mu in km^3/s^2. Scenario keys: mu, p, e, f0, ff, h_f, r_a, r_d, s_ar,\n"
    "s_av, s_dar, s_dav, xa0 (6 values), xda0 (6 values), R1, R2.\n"
    "Controls are the raw tilde-domain inputs u entering B(f) u.\n"
    "Exit codes: 0 ok, 1 failure, 2 config error, 3 singular factor/block or\n"
    "numerical blow-up, 4 non-hovering input or initial capture.";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytical LQ target-attacker-defender game on elliptic orbits"};
  app.footer(kUnits);
  app.require_subcommand(1);

  tad::SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run one method on a scenario");
  simulate->add_option("scenario", sim.scenario, "Scenario file")->required();
  simulate->add_option("--method", sim.method, "analytical | numerical")
      ->check(CLI::IsMember({"analytical", "numerical"}))
      ->capture_default_str();
  simulate->add_option("--out-traj", sim.out_traj,
                       "Trajectory CSV (f, states in km and km/rad, controls, distances in km)");
  simulate->add_option("--out-summary", sim.out_summary,
                       "Summary JSON (default: stdout)");

  tad::CompareArgs cmp;
  auto* compare = app.add_subcommand(
      "compare", "Run both methods; report relative errors and time ratio");
  compare->add_option("scenario", cmp.scenario, "Scenario file")->required();
  compare->add_option("--out", cmp.out, "JSON output (default: stdout)");

  tad::WincheckArgs win;
  std::string rd0_text;
  auto* wincheck = app.add_subcommand(
      "wincheck", "Evaluate g1/g2 over the grid for hovering initial states");
  wincheck->add_option("scenario", win.scenario, "Scenario file")->required();
  wincheck->add_option("--out", win.out, "CSV f,g1,g2 (g in km^2)");
  wincheck->add_option("--verdict", win.verdict, "Verdict JSON (default: stdout)");
  wincheck->add_option("--rd0", rd0_text,
                       "Override defender initial position x,y,z in km");

  tad::SweepArgs sweep;
  std::string e_list = "0,0.1,0.2,0.3,0.4,0.5";
  auto* sweep_e = app.add_subcommand(
      "sweep-e", "Winning-condition summary per reference-orbit eccentricity");
  sweep_e->add_option("scenario", sweep.scenario, "Scenario file")->required();
  sweep_e->add_option("--e-list", e_list, "Comma-separated eccentricities")
      ->capture_default_str();
  sweep_e->add_option("--out", sweep.out, "CSV output (default: stdout)");

  tad::EllipsoidArgs ell;
  std::string f_list;
  std::string k_list;
  auto* ellipsoids = app.add_subcommand(
      "ellipsoids", "Export S1/S2 ellipsoids (G, center in km, radius in km)");
  ellipsoids->add_option("scenario", ell.scenario, "Scenario file")->required();
  ellipsoids->add_option("--f-list", f_list, "Comma-separated anomalies in rad");
  ellipsoids->add_option("--k-list", k_list, "Comma-separated grid indices");
  ellipsoids->add_option("--out", ell.out, "CSV output (default: stdout)");

  tad::BenchArgs bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Median/min wall time of both methods (file I/O excluded)");
  bench_cmd->add_option("scenario", bench.scenario, "Scenario file")->required();
  bench_cmd->add_option("--reps", bench.reps, "Repetitions, at least 3")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "JSON output (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tad::kExitConfig;
  }

  try {
    if (*simulate) return tad::cmd_simulate(sim, std::cout, std::cerr);
    if (*compare) return tad::cmd_compare(cmp, std::cout, std::cerr);
    if (*wincheck) {
      if (!rd0_text.empty()) {
        const auto v = tad::parse_list(rd0_text);
        if (v.size() != 3) throw tad::ConfigError("--rd0 needs 3 values");
        win.rd0 = tad::Vec3(v[0], v[1], v[2]);
      }
      return tad::cmd_wincheck(win, std::cout, std::cerr);
    }
    if (*sweep_e) {
      sweep.e_list = tad::parse_list(e_list);
      return tad::cmd_sweep_e(sweep, std::cout, std::cerr);
    }
    if (*ellipsoids) {
      ell.f_list = tad::parse_list(f_list);
      for (double k : tad::parse_list(k_list)) ell.k_list.push_back(static_cast<int>(k));
      return tad::cmd_ellipsoids(ell, std::cout, std::cerr);
    }
    if (*bench_cmd) return tad::cmd_bench(bench, std::cout, std::cerr);
  } catch (const tad::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tad::kExitConfig;
  }
  return tad::kExitFailure;
}
