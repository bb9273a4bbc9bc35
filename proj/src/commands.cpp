#include "tadgame/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "tadgame/errors.hpp"
#include "tadgame/game.hpp"
#include "tadgame/numerical.hpp"
#include "tadgame/scenario.hpp"
#include "tadgame/winning.hpp"

namespace tad {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InitialStateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInitialState;
  } catch (const AnomalyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

// Writes `text` to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

struct Timed {
  Trajectory trajectory;
  double seconds;
};

Timed run_method(const std::string& method, const GameConfig& config) {
  const auto start = Clock::now();
  Trajectory traj;
  if (method == "analytical") {
    traj = propagate_analytical(config);
  } else if (method == "numerical") {
    traj = simulate_numerical(config);
  } else {
    throw ConfigError("unknown method '" + method +
                      "' (expected analytical or numerical)");
  }
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return {std::move(traj), seconds};
}

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

json summary_json(const SummaryRecord& rec) { return json::parse(rec.to_json()); }

GameConfig load_valid(const std::string& path) {
  GameConfig config = load_scenario(path);
  config.validate();
  return config;
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::string trimmed = text;
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                trimmed.end());
  if (trimmed.empty()) return out;
  std::stringstream ss(trimmed);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GameConfig config = load_valid(args.scenario);
    const Timed run = run_method(args.method, config);
    if (!args.out_traj.empty()) save_trajectory_csv(args.out_traj, run.trajectory);
    const SummaryRecord rec =
        summarize(args.method, config, run.trajectory, run.seconds);
    emit(args.out_summary, rec.to_json() + "\n", out);
    return kExitOk;
  });
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GameConfig config = load_valid(args.scenario);
    const Timed ana = run_method("analytical", config);
    const Timed num = run_method("numerical", config);
    const SummaryRecord a = summarize("analytical", config, ana.trajectory, ana.seconds);
    const SummaryRecord n = summarize("numerical", config, num.trajectory, num.seconds);
    json j;
    j["analytical"] = summary_json(a);
    j["numerical"] = summary_json(n);
    j["relative_errors"] = {
        {"terminal_dist_at", relative_error(n.terminal_dist_at, a.terminal_dist_at)},
        {"terminal_dist_da", relative_error(n.terminal_dist_da, a.terminal_dist_da)},
        {"J", relative_error(n.J, a.J)}};
    j["time_ratio"] = n.wall_seconds / a.wall_seconds;
    emit(args.out, j.dump(2) + "\n", out);
    return kExitOk;
  });
}

int cmd_wincheck(const WincheckArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    GameConfig config = load_scenario(args.scenario);
    if (!config.hovering()) {
      throw InitialStateError(
          "wincheck requires hovering initial states (zero velocity entries)");
    }
    if (args.rd0) config = config.with_defender_position(*args.rd0);
    config.validate();
    const Vec3 rd0 = config.defender_position0();
    const WinningAnalysis analysis(config);

    std::string csv = "f,g1,g2\n";
    for (int k = 1; k <= analysis.steps(); ++k) {
      csv += fmt(config.anomaly(k)) + "," + fmt(analysis.g1(k, rd0)) + "," +
             fmt(analysis.g2(k, rd0)) + "\n";
    }
    const WinVerdict v = analysis.attacker_wins(rd0);
    json j;
    j["attacker_wins"] = v.attacker_wins;
    j["f_a"] = optional_number(v.f_a);
    j["f_an"] = v.f_a ? json(*v.f_a - config.h_f) : json(nullptr);
    j["f_a_index"] = v.index ? json(*v.index) : json(nullptr);
    j["rd0"] = {rd0.x(), rd0.y(), rd0.z()};
    if (!args.out.empty()) emit(args.out, csv, out);
    emit(args.verdict, j.dump() + "\n", out);
    return kExitOk;
  });
}

int cmd_sweep_e(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GameConfig base = load_scenario(args.scenario);
    std::string csv = "e,min_g1,min_g2,attacker_wins,f_a,f_a_index,error\n";
    for (double e : args.e_list) {
      std::string row = fmt(e) + ",";
      try {
        const GameConfig config = base.with_eccentricity(e);
        config.validate();
        const WinningAnalysis analysis(config);
        const Vec3 rd0 = config.defender_position0();
        double min_g1 = INFINITY;
        double min_g2 = INFINITY;
        for (int k = 1; k <= analysis.steps(); ++k) {
          min_g1 = std::min(min_g1, analysis.g1(k, rd0));
          min_g2 = std::min(min_g2, analysis.g2(k, rd0));
        }
        const WinVerdict v = analysis.attacker_wins(rd0);
        row += fmt(min_g1) + "," + fmt(min_g2) + "," +
               (v.attacker_wins ? "true" : "false") + "," +
               (v.f_a ? fmt(*v.f_a) : "") + "," +
               (v.index ? std::to_string(*v.index) : "") + ",";
      } catch (const Error& ex) {
        row += ",,,,," + ex.name();
        err << "warning: e = " << fmt(e) << ": " << ex.what() << '\n';
      }
      csv += row + "\n";
    }
    emit(args.out, csv, out);
    return kExitOk;
  });
}

int cmd_ellipsoids(const EllipsoidArgs& args, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    const GameConfig config = load_valid(args.scenario);
    if (!config.hovering()) {
      throw InitialStateError("ellipsoids require hovering initial states");
    }
    std::vector<double> anomalies = args.f_list;
    for (int k : args.k_list) {
      if (k < 0 || k > config.steps()) {
        throw ConfigError("grid index " + std::to_string(k) + " outside [0, " +
                          std::to_string(config.steps()) + "]");
      }
      anomalies.push_back(config.anomaly(k));
    }
    std::string csv =
        "f,set,g11,g12,g13,g22,g23,g33,c1,c2,c3,radius,error\n";
    for (double f : anomalies) {
      for (WhichSet which : {WhichSet::kS1, WhichSet::kS2}) {
        std::string row =
            fmt(f) + "," + (which == WhichSet::kS1 ? "S1" : "S2") + ",";
        try {
          const Ellipsoid el = ellipsoid_at(config, f, which);
          row += fmt(el.g(0, 0)) + "," + fmt(el.g(0, 1)) + "," +
                 fmt(el.g(0, 2)) + "," + fmt(el.g(1, 1)) + "," +
                 fmt(el.g(1, 2)) + "," + fmt(el.g(2, 2)) + "," +
                 fmt(el.center_offset.x()) + "," + fmt(el.center_offset.y()) +
                 "," + fmt(el.center_offset.z()) + "," + fmt(el.radius) + ",";
        } catch (const AnomalyError& ex) {
          row += ",,,,,,,,,," + ex.name();
          err << "warning: " << ex.what() << '\n';
        }
        csv += row + "\n";
      }
    }
    emit(args.out, csv, out);
    return kExitOk;
  });
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.reps < 3) throw ConfigError("--reps must be at least 3");
    const GameConfig config = load_valid(args.scenario);
    auto measure = [&](const std::string& method) {
      std::vector<double> times;
      for (int i = 0; i < args.reps; ++i) {
        times.push_back(run_method(method, config).seconds);
      }
      std::sort(times.begin(), times.end());
      return std::pair{times[times.size() / 2], times.front()};
    };
    const auto [ana_median, ana_min] = measure("analytical");
    const auto [num_median, num_min] = measure("numerical");
    json j;
    j["reps"] = args.reps;
    j["analytical"] = {{"median_seconds", ana_median}, {"min_seconds", ana_min}};
    j["numerical"] = {{"median_seconds", num_median}, {"min_seconds", num_min}};
    j["ratio_median"] = num_median / ana_median;
    j["ratio_min"] = num_min / ana_min;
    emit(args.out, j.dump(2) + "\n", out);
    return kExitOk;
  });
}

}  // namespace tad
