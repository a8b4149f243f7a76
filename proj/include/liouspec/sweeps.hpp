#pragma once

#include <string>
#include <vector>

#include "liouspec/spectra.hpp"

namespace liouspec {

struct SweepOptions {
  int k_cap = 5;
  double safety = 4.0;        ///< cutoff heuristic multiplier
  int floor = 20;             ///< cutoff heuristic offset
  int n_max_override = 0;     ///< 0 = choose per point via suggest_cutoff
  double tail_tol = 1e-6;
  int workers = 1;
  Frame frame = Frame::rotating;
};

/// One (xi, N) sweep point. Failed points keep their row with a non-"ok"
/// status instead of being dropped.
struct SweepRow {
  std::string model;
  double xi_over_gamma = 0.0;
  int N = 1;
  int n_max = 0;
  double n_ss_over_N = 0.0;
  double re_gap_over_gamma = 0.0;
  double im_gap_over_gamma = 0.0;
  int gap_k = 0;
  double tail_weight = 0.0;
  double wall_s = 0.0;
  std::string status = "ok";
};

struct SweepRequest {
  std::string family;  ///< "btc" | "scully-lamb"
  BaseRates base;      ///< xi ignored; filled per grid point
  std::vector<double> xi_values;
  std::vector<int> N_values;
  SweepOptions opts;
};

/// Steady-state order parameter and gap per (xi, N), computed in the
/// request's frame (rotating by default). Rows come back in grid order
/// (xi outer, N inner) regardless of worker scheduling.
std::vector<SweepRow> sweep_order_parameter(const SweepRequest& request);

/// Same rows, named for the gap-versus-N reading of the output.
std::vector<SweepRow> gap_flow(const SweepRequest& request);

struct SnapshotEntry {
  double re_over_gamma = 0.0;
  double im_over_gamma = 0.0;
  int k = 0;
  double line_dist_over_gamma = 0.0;  ///< |Im lambda - nearest integer multiple of omega_c| / gamma
  double residual = 0.0;
};

/// The m slowest eigenvalues of one model, with sector tags and the distance
/// of each imaginary part to the nearest k*omega_c line.
struct SpectrumSnapshot {
  std::vector<SnapshotEntry> entries;
  std::string model;
  BaseRates base;
  double xi_over_gamma = 0.0;
  int N = 1;
  int n_max = 0;
  Frame frame = Frame::lab;
  int k_cap = 5;
};

SpectrumSnapshot spectrum_snapshot(const ModelSpec& model, int m, int k_cap,
                                   int workers = 1);

/// Builds a model of the requested family at one grid point.
ModelSpec build_family_model(const std::string& family, const BaseRates& base,
                             double xi, int N, int n_max, Frame frame);

/// Cutoff for one grid point without constructing the full jump tables first.
int plan_cutoff(const std::string& family, const BaseRates& base, double xi,
                int N, const SweepOptions& opts);

}  // namespace liouspec
