#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "liouspec/cli.hpp"
#include "liouspec/config.hpp"
#include "liouspec/errors.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string preset;
  std::string out;
  std::string format;
  int workers = -1;
  int k_cap = -1;
  int m = -1;
  int n_max = -1;
  std::string frame;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON config file");
  cmd->add_option("--preset", flags.preset,
                  "named figure recipe (fig1..fig5, fig3pre)")
      ->excludes(cmd->get_option("--config"));
  cmd->add_option("--out", flags.out, "output path (default: stdout)");
  cmd->add_option("--format", flags.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--workers", flags.workers, "worker budget (0 = hardware)");
  cmd->add_option("--kcap", flags.k_cap, "largest |k| sector to include");
  cmd->add_option("--m", flags.m, "snapshot size");
  cmd->add_option("--nmax", flags.n_max, "Fock cutoff override");
  cmd->add_option("--frame", flags.frame, "lab|rotating")
      ->check(CLI::IsMember({"lab", "rotating"}));
}

liouspec::RunConfig resolve(const CommonFlags& flags) {
  liouspec::RunConfig config;
  if (!flags.preset.empty()) config = liouspec::preset_config(flags.preset);
  if (!flags.config_path.empty()) config = liouspec::load_config_file(flags.config_path);
  // Flags win over the config file.
  if (!flags.out.empty()) config.out = flags.out;
  if (!flags.format.empty()) config.format = flags.format;
  if (flags.workers >= 0) config.workers = flags.workers;
  if (flags.k_cap >= 0) config.k_cap = flags.k_cap;
  if (flags.m >= 0) config.m = flags.m;
  if (flags.n_max >= 0) config.n_max = flags.n_max;
  if (!flags.frame.empty()) config.frame = flags.frame;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sector-resolved Liouvillian spectra, steady states and "
               "correlations for U(1)-symmetric bosonic models"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const liouspec::RunConfig&);
  };
  const Sub subs[] = {
      {"spectrum", "slowest eigenvalues with sector tags", nullptr},
      {"sweep", "order parameter and gap over a (xi, N) grid",
       [](const liouspec::RunConfig& c) { return liouspec::cmd_sweep(c); }},
      {"correlate", "steady-state two-time correlations C1/C2",
       [](const liouspec::RunConfig& c) { return liouspec::cmd_correlate(c); }},
      {"verify", "run the bundled invariant checks",
       [](const liouspec::RunConfig& c) { return liouspec::cmd_verify(c); }},
      {"steady", "steady-state occupation distribution",
       [](const liouspec::RunConfig& c) { return liouspec::cmd_steady(c); }},
      {"gap", "slowest nonzero decay mode",
       [](const liouspec::RunConfig& c) { return liouspec::cmd_gap(c); }},
      {"fieldtrace", "field expectation of a decaying coherent state",
       [](const liouspec::RunConfig& c) { return liouspec::cmd_fieldtrace(c); }},
  };

  CommonFlags flags[std::size(subs)];
  CLI::App* apps[std::size(subs)];
  for (size_t i = 0; i < std::size(subs); ++i) {
    apps[i] = app.add_subcommand(subs[i].name, subs[i].help);
    add_common(apps[i], flags[i]);
  }

  CLI11_PARSE(app, argc, argv);

  for (size_t i = 0; i < std::size(subs); ++i) {
    if (!apps[i]->parsed()) continue;
    try {
      const liouspec::RunConfig config = resolve(flags[i]);
      return i == 0 ? liouspec::cmd_spectrum(config) : subs[i].run(config);
    } catch (const std::exception& err) {
      std::cerr << "error: " << err.what() << '\n';
      return 1;
    }
  }
  return 1;
}
