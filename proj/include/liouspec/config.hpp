#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace liouspec {

/// Parsed run configuration. Defaults are the driven two-photon-loss model at
/// omega_c/gamma = 1, eta/gamma = 0.1, xi/gamma = 1.25, N = 20.
///
/// All computation is deterministic; there is no seed.
struct RunConfig {
  std::string model = "btc";  ///< "btc" | "scully-lamb"
  double gamma = 1.0;
  double xi = 1.25;
  double eta = 0.1;
  double beta = 0.005;
  double omega_c = 1.0;
  int N = 20;

  std::vector<double> xi_list;  ///< empty = single point at xi
  std::vector<int> N_list;      ///< empty = single value N

  int n_max = 0;  ///< explicit cutoff; 0 = choose via the cutoff heuristic
  double safety = 4.0;
  int floor = 20;
  int k_cap = 5;
  int m = 20;
  std::string frame;  ///< "lab" | "rotating" | "" = per-command default

  double tau_max = 50.0;
  int tau_points = 2001;
  std::vector<std::string> kinds = {"c1", "c2"};
  double alpha0_re = 2.0;
  double alpha0_im = 0.0;

  std::string out;  ///< output path; empty = stdout
  std::string format = "csv";
  int workers = 0;  ///< 0 = hardware concurrency
  double tail_tol = 1e-6;
  int verify_n_max = 6;

  bool operator==(const RunConfig&) const = default;
};

/// Strict parse: unknown keys and malformed values raise ParameterError.
/// "xi_grid": {"from", "to", "step"} expands into xi_list.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// Serialization; parse_config(config_to_json(c)) == c.
nlohmann::json config_to_json(const RunConfig& config);

/// Figure recipes committed under configs/ and embedded here by name
/// (fig1 .. fig5, fig3pre).
std::vector<std::string> preset_names();
const std::string& preset_text(const std::string& name);
RunConfig preset_config(const std::string& name);

}  // namespace liouspec
