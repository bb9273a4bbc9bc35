#include "tadgame/scenario.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tadgame/errors.hpp"
#include "tadgame/winning.hpp"

namespace tad {

namespace {

constexpr std::array<const char*, 16> kKeys = {
    "mu",  "p",     "e",     "f0",  "ff",   "h_f", "r_a", "r_d",
    "s_ar", "s_av", "s_dar", "s_dav", "xa0", "xda0", "R1",  "R2"};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& token, int line) {
  const std::string t = trim(token);
  if (t == "pi") return std::numbers::pi;
  double value = 0.0;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (!t.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (t.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError("cannot parse number '" + t + "'", line);
  }
  return value;
}

}  // namespace

double parse_scalar(const std::string& text, int line) {
  double value = 1.0;
  char op = '*';
  std::string token;
  auto apply = [&]() {
    const double x = parse_number(token, line);
    value = op == '*' ? value * x : value / x;
    token.clear();
  };
  for (char ch : text) {
    if (ch == '*' || ch == '/') {
      apply();
      op = ch;
    } else {
      token += ch;
    }
  }
  apply();
  if (!std::isfinite(value)) {
    throw ConfigError("value '" + trim(text) + "' is not finite", line);
  }
  return value;
}

namespace {

Vec6 parse_vector(const std::string& text, int line) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_scalar(item, line));
  if (parts.size() != 6) {
    throw ConfigError("expected 6 comma-separated values, got " +
                          std::to_string(parts.size()),
                      line);
  }
  return Vec6(parts.data());
}

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string format_vec(const Vec6& v) {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    if (i) out += ", ";
    out += format_double(v[i], 17);
  }
  return out;
}

}  // namespace

GameConfig parse_scenario(const std::string& text) {
  std::map<std::string, std::pair<std::string, int>> values;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string content = trim(raw.substr(0, raw.find('#')));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected 'key = value'", line);
    }
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw ConfigError("unknown key '" + key + "'", line);
    if (values.count(key)) {
      throw ConfigError("duplicate key '" + key + "' (first on line " +
                            std::to_string(values[key].second) + ")",
                        line);
    }
    if (value.empty()) throw ConfigError("missing value for '" + key + "'", line);
    values[key] = {value, line};
  }

  std::string missing;
  for (const char* k : kKeys) {
    if (!values.count(k)) missing += missing.empty() ? k : std::string(", ") + k;
  }
  if (!missing.empty()) throw ConfigError("missing keys: " + missing);

  auto scalar = [&](const char* key) {
    return parse_scalar(values[key].first, values[key].second);
  };
  auto vector = [&](const char* key) {
    return parse_vector(values[key].first, values[key].second);
  };
  auto at_line = [&](const char* key, auto&& build) {
    try {
      return build();
    } catch (const ConfigError& err) {
      if (err.line() > 0) throw;
      throw ConfigError(err.what(), values[key].second);
    }
  };

  const double mu = scalar("mu");
  const double p = scalar("p");
  const double e = scalar("e");
  GameConfig config{at_line("e", [&] { return ReferenceOrbit(mu, p, e); })};
  config.weights = {scalar("r_a"),  scalar("r_d"),   scalar("s_ar"),
                    scalar("s_av"), scalar("s_dar"), scalar("s_dav")};
  config.f0 = scalar("f0");
  config.ff = scalar("ff");
  config.h_f = scalar("h_f");
  config.r1 = scalar("R1");
  config.r2 = scalar("R2");
  config.x_a0 = vector("xa0");
  config.x_da0 = vector("xda0");
  at_line("r_a", [&] { config.weights.validate(); return 0; });
  at_line("h_f", [&] { config.validate_structure(); return 0; });
  return config;
}

GameConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string format_scenario(const GameConfig& c) {
  std::ostringstream out;
  auto line = [&](const char* key, double v) {
    out << key << " = " << format_double(v, 17) << "\n";
  };
  line("mu", c.orbit.mu());
  line("p", c.orbit.p());
  line("e", c.orbit.e());
  line("f0", c.f0);
  line("ff", c.ff);
  line("h_f", c.h_f);
  line("r_a", c.weights.r_a);
  line("r_d", c.weights.r_d);
  line("s_ar", c.weights.s_ar);
  line("s_av", c.weights.s_av);
  line("s_dar", c.weights.s_dar);
  line("s_dav", c.weights.s_dav);
  out << "xa0 = " << format_vec(c.x_a0) << "\n";
  out << "xda0 = " << format_vec(c.x_da0) << "\n";
  line("R1", c.r1);
  line("R2", c.r2);
  return out.str();
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "f";
  for (int i = 1; i <= 6; ++i) out << ",xa" << i;
  for (int i = 1; i <= 6; ++i) out << ",xda" << i;
  for (int i = 1; i <= 3; ++i) out << ",ua" << i;
  for (int i = 1; i <= 3; ++i) out << ",ud" << i;
  out << ",dist_at,dist_da\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    std::string row = format_double(traj.grid[k], 15);
    auto put = [&](double v) {
      row += ',';
      row += format_double(v, 15);
    };
    for (int i = 0; i < 6; ++i) put(traj.states[k].x_a[i]);
    for (int i = 0; i < 6; ++i) put(traj.states[k].x_da[i]);
    for (int i = 0; i < 3; ++i) put(traj.controls[k].u_a[i]);
    for (int i = 0; i < 3; ++i) put(traj.controls[k].u_d[i]);
    put(traj.distances[k].attacker_target);
    put(traj.distances[k].defender_attacker);
    out << row << '\n';
  }
}

void save_trajectory_csv(const std::string& path, const Trajectory& traj) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  write_trajectory_csv(out, traj);
}

Trajectory read_trajectory_csv(std::istream& in) {
  constexpr int kColumns = 1 + 6 + 6 + 3 + 3 + 2;
  std::string raw;
  int line = 1;
  if (!std::getline(in, raw) || trim(raw).rfind("f,xa1", 0) != 0) {
    throw ConfigError("missing trajectory header", line);
  }
  Trajectory traj;
  while (std::getline(in, raw)) {
    ++line;
    if (trim(raw).empty()) continue;
    std::vector<double> v;
    std::stringstream ss(raw);
    std::string cell;
    while (std::getline(ss, cell, ',')) v.push_back(parse_number(cell, line));
    if (static_cast<int>(v.size()) != kColumns) {
      throw ConfigError("expected " + std::to_string(kColumns) + " columns",
                        line);
    }
    traj.grid.push_back(v[0]);
    JointState x;
    ControlPair u;
    for (int i = 0; i < 6; ++i) x.x_a[i] = v[1 + i];
    for (int i = 0; i < 6; ++i) x.x_da[i] = v[7 + i];
    for (int i = 0; i < 3; ++i) u.u_a[i] = v[13 + i];
    for (int i = 0; i < 3; ++i) u.u_d[i] = v[16 + i];
    traj.states.push_back(x);
    traj.controls.push_back(u);
    traj.distances.push_back({v[19], v[20]});
  }
  return traj;
}

std::string SummaryRecord::to_json() const {
  nlohmann::ordered_json j;
  j["method"] = method;
  j["terminal_dist_at"] = terminal_dist_at;
  j["terminal_dist_da"] = terminal_dist_da;
  j["J"] = J;
  j["wall_seconds"] = wall_seconds;
  j["outcome"] = outcome;
  j["f_capture"] = f_capture ? nlohmann::ordered_json(*f_capture) : nullptr;
  j["f_intercept"] = f_intercept ? nlohmann::ordered_json(*f_intercept) : nullptr;
  return j.dump();
}

SummaryRecord summarize(const std::string& method, const GameConfig& config,
                        const Trajectory& trajectory, double wall_seconds) {
  const Outcome outcome = classify_outcome(trajectory, terminal_sets(config));
  const Distances& end = trajectory.distances.back();
  SummaryRecord rec;
  rec.method = method;
  rec.terminal_dist_at = end.attacker_target;
  rec.terminal_dist_da = end.defender_attacker;
  rec.J = trajectory.cost;
  rec.wall_seconds = wall_seconds;
  rec.outcome = to_string(outcome.tag);
  rec.f_capture = outcome.f_capture;
  rec.f_intercept = outcome.f_intercept;
  return rec;
}

}  // namespace tad
