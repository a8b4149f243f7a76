#include <doctest.h>

#include <Eigen/Dense>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "liouspec/cli.hpp"
#include "liouspec/config.hpp"
#include "liouspec/errors.hpp"
#include "liouspec/io.hpp"
#include "liouspec/sector.hpp"
#include "liouspec/verify.hpp"

using namespace liouspec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("liouspec_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

RunConfig tiny_point_config() {
  RunConfig config;
  config.model = "btc";
  config.xi = 1.25;
  config.eta = 1.0;
  config.N = 5;
  config.k_cap = 2;
  config.m = 5;
  config.workers = 1;
  return config;
}

}  // namespace

TEST_CASE("config round-trips through JSON") {
  RunConfig config = tiny_point_config();
  config.xi_list = {0.5, 0.75, 1.0};
  config.N_list = {5, 10};
  config.frame = "rotating";
  config.out = "somewhere.csv";
  const RunConfig reparsed = parse_config(config_to_json(config));
  CHECK(reparsed == config);

  const RunConfig defaults;
  CHECK(parse_config(config_to_json(defaults)) == defaults);
}

TEST_CASE("unknown keys and malformed values are rejected") {
  CHECK_THROWS_AS(parse_config_text(R"({"modle": "btc"})"), ParameterError);
  CHECK_THROWS_AS(parse_config_text(R"({"gamma": "fast"})"), ParameterError);
  CHECK_THROWS_AS(parse_config_text(R"({"model": "kerr"})"), ParameterError);
  CHECK_THROWS_AS(parse_config_text(R"({"N_list": []})"), ParameterError);
  CHECK_THROWS_AS(parse_config_text(R"({"frame": "sideways"})"), ParameterError);
  CHECK_THROWS_AS(parse_config_text("not json"), ParameterError);
  CHECK_THROWS_AS(parse_config_text(R"({"kinds": ["c3"]})"), ParameterError);
  CHECK_NOTHROW(parse_config_text(R"({"model": "scully-lamb"})"));
}

TEST_CASE("grid expansion") {
  const RunConfig config = parse_config_text(
      R"({"xi_grid": {"from": 0.5, "to": 1.5, "step": 0.05}})");
  REQUIRE(config.xi_list.size() == 21);
  CHECK(config.xi_list.front() == doctest::Approx(0.5));
  CHECK(config.xi_list.back() == doctest::Approx(1.5));
  CHECK_THROWS_AS(
      parse_config_text(R"({"xi_grid": {"from": 1.0, "to": 0.5, "step": 0.1}})"),
      ParameterError);
}

TEST_CASE("presets parse and match the committed recipe files") {
  for (const std::string& name : preset_names()) {
    const RunConfig config = preset_config(name);
    CHECK((config.model == "btc" || config.model == "scully-lamb"));
    const fs::path committed = fs::path("configs") / (name + ".json");
    if (fs::exists(committed)) {
      std::ifstream in(committed);
      std::ostringstream text;
      text << in.rdbuf();
      CHECK(text.str() == preset_text(name));
      CHECK(parse_config_text(text.str()) == config);
    } else {
      // test is run from an unexpected working directory
      WARN_MESSAGE(false, "committed preset not found: ", committed.string());
    }
  }
  // figure-1 recipe spans the 21 x 4 grid
  const RunConfig fig1 = preset_config("fig1");
  CHECK(fig1.xi_list.size() == 21);
  CHECK(fig1.N_list.size() == 4);
  CHECK_THROWS_AS(preset_config("fig9"), ParameterError);
}

TEST_CASE("spectrum command writes a snapshot whose first row is the steady state") {
  TempDir tmp;
  RunConfig config = tiny_point_config();
  config.out = tmp.file("snap.csv");
  REQUIRE(cmd_spectrum(config) == 0);
  std::ifstream in(config.out);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header.find("re_over_gamma") != std::string::npos);
  CHECK(first.find("btc,lab,") == 0);
  // steady-state row: re and im both zero to output precision
  std::stringstream fields(first);
  std::string field;
  for (int i = 0; i < 7; ++i) std::getline(fields, field, ',');
  CHECK(std::abs(std::stod(field)) < 1e-10);
}

TEST_CASE("parameter errors exit 1 and leave no output file") {
  TempDir tmp;
  RunConfig config = tiny_point_config();
  config.gamma = -1.0;
  config.out = tmp.file("never.csv");
  CHECK(cmd_spectrum(config) == 1);
  CHECK_FALSE(fs::exists(config.out));
  CHECK(cmd_sweep(config) == 1);  // also missing grids
  CHECK_FALSE(fs::exists(config.out));
}

// Direct tail oracle: at n_max=5 the drive pushes weight to the boundary;
// the full-superoperator kernel (computed with a generic dense solver, not
// the sector machinery) confirms the tail exceeds the acceptance gate.
TEST_CASE("undersized cutoff exits 2, confirmed by an independent tail oracle") {
  TempDir tmp;
  RunConfig config;
  config.model = "btc";
  config.xi = 1.75;
  config.eta = 0.1;
  config.N = 40;
  config.n_max = 5;
  config.out = tmp.file("snap.csv");
  CHECK(cmd_spectrum(config) == 2);

  const ModelSpec model = build_btc_model(1.0, 1.75, 0.1, 1.0, 40, 5, Frame::lab);
  const FullSuperoperator full = build_full_superoperator(model);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(full.m, true);
  int best = 0;
  for (int i = 1; i < solver.eigenvalues().size(); ++i)
    if (std::abs(solver.eigenvalues()[i]) < std::abs(solver.eigenvalues()[best]))
      best = i;
  Eigen::VectorXcd kernel = solver.eigenvectors().col(best);
  std::complex<double> trace = 0.0;
  for (int n = 0; n <= 5; ++n) trace += kernel[full.dyad_index(n, n)];
  const double tail = std::abs(kernel[full.dyad_index(5, 5)] / trace);
  CHECK(tail > 1e-6);
}

TEST_CASE("sweep command writes the full grid") {
  TempDir tmp;
  RunConfig config = tiny_point_config();
  config.xi_list = {0.9, 1.1};
  config.N_list = {4, 8};
  config.out = tmp.file("sweep.csv");
  REQUIRE(cmd_sweep(config) == 0);
  std::ifstream in(config.out);
  int lines = 0;
  std::string line;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 5);  // header + 4 rows
}

TEST_CASE("correlate exits 1 on a length-1 grid but still writes the trace") {
  TempDir tmp;
  RunConfig config = tiny_point_config();
  config.tau_points = 1;
  config.kinds = {"c1"};
  config.out = tmp.file("trace.csv");
  CHECK(cmd_correlate(config) == 1);
  CHECK(fs::exists(tmp.file("trace.c1.csv")));

  RunConfig good = tiny_point_config();
  good.tau_max = 40.0;
  good.tau_points = 801;
  good.out = tmp.file("good.csv");
  CHECK(cmd_correlate(good) == 0);
  CHECK(fs::exists(tmp.file("good.c1.csv")));
  CHECK(fs::exists(tmp.file("good.c2.csv")));
  std::ifstream in(tmp.file("good.c1.csv"));
  std::string meta, header;
  std::getline(in, meta);
  std::getline(in, header);
  CHECK(meta.find("# kind=c1") == 0);
  CHECK(header == "tau,re,im");
}

TEST_CASE("verify command passes clean and fails under fault injection") {
  RunConfig config;
  config.verify_n_max = 5;
  config.n_max = 25;
  CHECK(cmd_verify(config) == 0);

  VerifyHooks hooks;
  hooks.block_perturbation = [](Eigen::MatrixXcd& block, int /*k*/) {
    block(0, 0) += 1e-6;
  };
  const VerifyReport report = run_verify(config, &hooks);
  bool block_check_failed = false;
  for (const VerifyCheck& check : report.checks)
    if (check.name == "block-equivalence" && !check.pass) block_check_failed = true;
  CHECK(block_check_failed);
  CHECK(cmd_verify(config, &hooks) == 3);
}

TEST_CASE("steady, gap and fieldtrace commands run end to end") {
  TempDir tmp;
  RunConfig config = tiny_point_config();
  config.out = tmp.file("steady.csv");
  CHECK(cmd_steady(config) == 0);
  std::ifstream in(config.out);
  std::string meta, header;
  std::getline(in, meta);
  std::getline(in, header);
  CHECK(header == "n,occupation");

  config.out = tmp.file("gap.csv");
  CHECK(cmd_gap(config) == 0);
  CHECK(fs::exists(config.out));

  config.out = tmp.file("field.csv");
  config.alpha0_re = 1.0;
  config.tau_points = 501;
  CHECK(cmd_fieldtrace(config) == 0);
  CHECK(fs::exists(config.out));
}

TEST_CASE("json output format is selectable") {
  TempDir tmp;
  RunConfig config = tiny_point_config();
  config.format = "json";
  config.out = tmp.file("snap.json");
  REQUIRE(cmd_spectrum(config) == 0);
  std::ifstream in(config.out);
  std::ostringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("\"entries\"") != std::string::npos);
}

TEST_CASE("doubles are emitted with full round-trip precision") {
  const double value = 0.1234567890123456789;
  CHECK(std::stod(format_double(value)) == value);
  CHECK(format_double(1.0) == "1");
}
