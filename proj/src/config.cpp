#include "wqc/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wqc {

using nlohmann::json;

std::vector<double> SweepGrid::values() const {
  if (points < 1) throw ConfigError("sweep.points must be >= 1");
  if (!(t_min_s > 0.0) || !(t_max_s >= t_min_s))
    throw ConfigError("sweep grid requires 0 < t_min_s <= t_max_s");
  std::vector<double> ts(points);
  if (points == 1) {
    ts[0] = t_min_s;
    return ts;
  }
  const double la = std::log10(t_min_s);
  const double lb = std::log10(t_max_s);
  for (int i = 0; i < points; ++i)
    ts[i] = std::pow(10.0, la + (lb - la) * double(i) / double(points - 1));
  ts.front() = t_min_s;
  ts.back() = t_max_s;
  return ts;
}

RunConfig default_run_config() {
  RunConfig config;
  config.system = SystemSpec::defaults(1);
  return config;
}

namespace {

SystemSpec spec_from_json(const json& j) {
  SystemSpec spec;
  try {
    spec.k = j.at("nuclei_per_node").get<int>();
    if (spec.k < 1) throw ConfigError("system.nuclei_per_node must be >= 1");
    const auto& hf = j.at("hyperfine_hz");
    if (!hf.is_array() || static_cast<int>(hf.size()) != spec.k)
      throw ConfigError("system.hyperfine_hz must list one [Ax, Ay, Az] triple per nucleus");
    for (const auto& row : hf) {
      if (!row.is_array() || row.size() != 3)
        throw ConfigError("system.hyperfine_hz entries must be [Ax, Ay, Az] triples");
      spec.hyperfine.emplace_back(kTwoPi * row[0].get<double>(), kTwoPi * row[1].get<double>(),
                                  kTwoPi * row[2].get<double>());
    }
    for (const auto& wz : j.at("nuclear_zeeman_hz"))
      spec.nuclear_zeeman.push_back(kTwoPi * wz.get<double>());
    if (static_cast<int>(spec.nuclear_zeeman.size()) != spec.k)
      throw ConfigError("system.nuclear_zeeman_hz must list one value per nucleus");
    spec.dipolar = kTwoPi * j.at("dipolar_hz").get<double>();
    spec.rabi = kTwoPi * j.at("rabi_hz").get<double>();
  } catch (const json::exception& err) {
    throw ConfigError(std::string("system section: ") + err.what());
  }
  return spec;
}

json spec_to_json(const SystemSpec& spec) {
  json j;
  j["nuclei_per_node"] = spec.k;
  json hf = json::array();
  for (const auto& a : spec.hyperfine)
    hf.push_back({a.x() / kTwoPi, a.y() / kTwoPi, a.z() / kTwoPi});
  j["hyperfine_hz"] = hf;
  json wz = json::array();
  for (double w : spec.nuclear_zeeman) wz.push_back(w / kTwoPi);
  j["nuclear_zeeman_hz"] = wz;
  j["dipolar_hz"] = spec.dipolar / kTwoPi;
  j["rabi_hz"] = spec.rabi / kTwoPi;
  return j;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("config parse failure: ") + err.what());
  }

  RunConfig config = default_run_config();
  try {
    if (j.contains("system")) config.system = spec_from_json(j.at("system"));
    if (j.contains("sweep")) {
      const auto& s = j.at("sweep");
      if (s.contains("t_min_s")) config.sweep.t_min_s = s.at("t_min_s").get<double>();
      if (s.contains("t_max_s")) config.sweep.t_max_s = s.at("t_max_s").get<double>();
      if (s.contains("points")) config.sweep.points = s.at("points").get<int>();
      if (!(config.sweep.t_min_s > 0.0) || config.sweep.t_max_s < config.sweep.t_min_s)
        throw ConfigError("sweep: requires 0 < t_min_s <= t_max_s");
      if (config.sweep.points < 1) throw ConfigError("sweep.points must be >= 1");
    }
    if (j.contains("outputs")) {
      const auto& o = j.at("outputs");
      if (o.contains("dir")) config.out_dir = o.at("dir").get<std::string>();
    }
    if (j.contains("verify")) {
      for (const auto& name : j.at("verify")) config.verify.push_back(name.get<std::string>());
    }
  } catch (const json::exception& err) {
    throw ConfigError(std::string("config field error: ") + err.what());
  }
  config.system.validate();
  return config;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

std::string run_config_to_json(const RunConfig& config) {
  json j;
  j["system"] = spec_to_json(config.system);
  j["sweep"] = {{"t_min_s", config.sweep.t_min_s},
                {"t_max_s", config.sweep.t_max_s},
                {"points", config.sweep.points}};
  j["outputs"] = {{"dir", config.out_dir}};
  if (!config.verify.empty()) j["verify"] = config.verify;
  return j.dump(2) + "\n";
}

}  // namespace wqc
