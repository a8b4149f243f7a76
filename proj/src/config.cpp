#include "liouspec/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "liouspec/errors.hpp"

namespace liouspec {

using nlohmann::json;

namespace {

std::vector<double> expand_grid(const json& grid) {
  if (!grid.is_object() || !grid.contains("from") || !grid.contains("to") ||
      !grid.contains("step"))
    throw ParameterError("xi_grid must be an object with from/to/step");
  const double from = grid.at("from").get<double>();
  const double to = grid.at("to").get<double>();
  const double step = grid.at("step").get<double>();
  if (!(step > 0.0) || to < from)
    throw ParameterError("xi_grid requires step > 0 and to >= from");
  const int count = static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> values(count);
  for (int i = 0; i < count; ++i) values[i] = from + i * step;
  return values;
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ParameterError("config must be a JSON object");
  RunConfig config;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "model") config.model = value.get<std::string>();
      else if (key == "gamma") config.gamma = value.get<double>();
      else if (key == "xi") config.xi = value.get<double>();
      else if (key == "eta") config.eta = value.get<double>();
      else if (key == "beta") config.beta = value.get<double>();
      else if (key == "omega_c") config.omega_c = value.get<double>();
      else if (key == "N") config.N = value.get<int>();
      else if (key == "xi_list") {
        config.xi_list = value.get<std::vector<double>>();
        if (config.xi_list.empty()) throw ParameterError("xi_list must not be empty");
      } else if (key == "xi_grid") {
        config.xi_list = expand_grid(value);
      } else if (key == "N_list") {
        config.N_list = value.get<std::vector<int>>();
        if (config.N_list.empty()) throw ParameterError("N_list must not be empty");
      }
      else if (key == "n_max") config.n_max = value.get<int>();
      else if (key == "safety") config.safety = value.get<double>();
      else if (key == "floor") config.floor = value.get<int>();
      else if (key == "k_cap") config.k_cap = value.get<int>();
      else if (key == "m") config.m = value.get<int>();
      else if (key == "frame") config.frame = value.get<std::string>();
      else if (key == "tau_max") config.tau_max = value.get<double>();
      else if (key == "tau_points") config.tau_points = value.get<int>();
      else if (key == "kinds") config.kinds = value.get<std::vector<std::string>>();
      else if (key == "alpha0_re") config.alpha0_re = value.get<double>();
      else if (key == "alpha0_im") config.alpha0_im = value.get<double>();
      else if (key == "out") config.out = value.get<std::string>();
      else if (key == "format") config.format = value.get<std::string>();
      else if (key == "workers") config.workers = value.get<int>();
      else if (key == "tail_tol") config.tail_tol = value.get<double>();
      else if (key == "verify_n_max") config.verify_n_max = value.get<int>();
      else throw ParameterError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& err) {
    throw ParameterError(std::string("malformed config value: ") + err.what());
  }

  if (config.model != "btc" && config.model != "scully-lamb")
    throw ParameterError("model must be 'btc' or 'scully-lamb'");
  if (!config.frame.empty() && config.frame != "lab" && config.frame != "rotating")
    throw ParameterError("frame must be 'lab' or 'rotating'");
  if (config.format != "csv" && config.format != "json")
    throw ParameterError("format must be 'csv' or 'json'");
  for (const auto& kind : config.kinds)
    if (kind != "c1" && kind != "c2")
      throw ParameterError("correlation kind must be 'c1' or 'c2'");
  if (config.tau_points < 1) throw ParameterError("tau_points must be >= 1");
  if (config.workers < 0) throw ParameterError("workers must be >= 0");
  return config;
}

RunConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& err) {
    throw ParameterError(std::string("config is not valid JSON: ") + err.what());
  }
  return parse_config(doc);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

json config_to_json(const RunConfig& config) {
  json doc{{"model", config.model},
           {"gamma", config.gamma},
           {"xi", config.xi},
           {"eta", config.eta},
           {"beta", config.beta},
           {"omega_c", config.omega_c},
           {"N", config.N},
           {"n_max", config.n_max},
           {"safety", config.safety},
           {"floor", config.floor},
           {"k_cap", config.k_cap},
           {"m", config.m},
           {"frame", config.frame},
           {"tau_max", config.tau_max},
           {"tau_points", config.tau_points},
           {"kinds", config.kinds},
           {"alpha0_re", config.alpha0_re},
           {"alpha0_im", config.alpha0_im},
           {"out", config.out},
           {"format", config.format},
           {"workers", config.workers},
           {"tail_tol", config.tail_tol},
           {"verify_n_max", config.verify_n_max}};
  if (!config.xi_list.empty()) doc["xi_list"] = config.xi_list;
  if (!config.N_list.empty()) doc["N_list"] = config.N_list;
  return doc;
}

namespace {

// Figure recipes. The same text is committed under configs/ for direct use;
// test_config checks the two stay in sync.
const std::map<std::string, std::string>& preset_table() {
  static const std::map<std::string, std::string> table = {
      {"fig1", R"({
  "model": "btc",
  "gamma": 1.0,
  "eta": 1.0,
  "omega_c": 1.0,
  "frame": "rotating",
  "xi_grid": {"from": 0.5, "to": 1.5, "step": 0.05},
  "N_list": [5, 10, 20, 40],
  "k_cap": 5
}
)"},
      {"fig2", R"({
  "model": "btc",
  "gamma": 1.0,
  "eta": 0.1,
  "omega_c": 1.0,
  "frame": "lab",
  "xi_list": [0.25, 0.75, 1.25, 1.75],
  "N_list": [10, 20, 40],
  "m": 20,
  "k_cap": 5
}
)"},
      {"fig3", R"({
  "model": "btc",
  "gamma": 1.0,
  "xi": 1.25,
  "eta": 0.1,
  "omega_c": 1.0,
  "N": 30,
  "frame": "lab",
  "tau_max": 50.0,
  "tau_points": 2001,
  "kinds": ["c1", "c2"]
}
)"},
      {"fig3pre", R"({
  "model": "btc",
  "gamma": 1.0,
  "xi": 0.75,
  "eta": 0.1,
  "omega_c": 1.0,
  "N": 30,
  "frame": "lab",
  "tau_max": 50.0,
  "tau_points": 2001,
  "kinds": ["c1", "c2"]
}
)"},
      {"fig4", R"({
  "model": "scully-lamb",
  "gamma": 1.0,
  "eta": 0.1,
  "beta": 0.005,
  "omega_c": 1.0,
  "frame": "rotating",
  "xi_grid": {"from": 0.5, "to": 1.5, "step": 0.05},
  "N_list": [5, 10, 20, 40],
  "k_cap": 5
}
)"},
      {"fig5", R"({
  "model": "scully-lamb",
  "gamma": 1.0,
  "eta": 0.1,
  "beta": 0.005,
  "omega_c": 1.0,
  "frame": "lab",
  "xi_list": [0.25, 0.75, 1.0, 1.5],
  "N_list": [10, 20, 40],
  "m": 20,
  "k_cap": 5
}
)"}};
  return table;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : preset_table()) names.push_back(name);
  return names;
}

const std::string& preset_text(const std::string& name) {
  const auto& table = preset_table();
  const auto it = table.find(name);
  if (it == table.end()) throw ParameterError("unknown preset '" + name + "'");
  return it->second;
}

RunConfig preset_config(const std::string& name) {
  return parse_config_text(preset_text(name));
}

}  // namespace liouspec
