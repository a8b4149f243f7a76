#include "liouspec/sweeps.hpp"

#include <chrono>
#include <cmath>

#include "liouspec/errors.hpp"
#include "parallel.hpp"

namespace liouspec {

ModelSpec build_family_model(const std::string& family, const BaseRates& base,
                             double xi, int N, int n_max, Frame frame) {
  if (family == "btc")
    return build_btc_model(base.gamma, xi, base.eta, base.omega_c, N, n_max, frame);
  if (family == "scully-lamb")
    return build_scully_lamb(base.gamma, xi, base.eta, base.beta, base.omega_c, N,
                             n_max, frame);
  throw ParameterError("unknown model family '" + family + "'");
}

int plan_cutoff(const std::string& family, const BaseRates& base, double xi,
                int N, const SweepOptions& opts) {
  if (opts.n_max_override > 0) return opts.n_max_override;
  // Tiny probe model; |shift| <= n_max requires at least 2 levels here.
  const ModelSpec probe = build_family_model(family, base, xi, N, 2, Frame::rotating);
  return suggest_cutoff(probe, opts.safety, opts.floor);
}

std::vector<SweepRow> sweep_order_parameter(const SweepRequest& request) {
  if (request.xi_values.empty()) throw ParameterError("empty xi grid");
  if (request.N_values.empty()) throw ParameterError("empty N list");
  if (!(request.base.gamma > 0.0)) throw ParameterError("gamma must be > 0");

  const int npoints =
      static_cast<int>(request.xi_values.size() * request.N_values.size());
  std::vector<SweepRow> rows(npoints);

  detail::parallel_for_indexed(npoints, request.opts.workers, [&](int index) {
    const double xi = request.xi_values[index / request.N_values.size()];
    const int N = request.N_values[index % request.N_values.size()];
    const double gamma = request.base.gamma;

    SweepRow& row = rows[index];
    row.model = request.family;
    row.xi_over_gamma = xi / gamma;
    row.N = N;

    const auto t0 = std::chrono::steady_clock::now();
    try {
      row.n_max = plan_cutoff(request.family, request.base, xi, N, request.opts);
      const ModelSpec model = build_family_model(request.family, request.base, xi,
                                                 N, row.n_max, request.opts.frame);
      try {
        const SteadyState ss = steady_state(model, request.opts.tail_tol);
        row.n_ss_over_N = expectation_number(ss) / N;
        row.tail_weight = ss.tail_weight;
      } catch (const TruncationError& err) {
        row.tail_weight = err.tail_weight;
        row.status = std::string("truncation: ") + err.what();
      }
      const SpectrumEntry gap = liouvillian_gap(model, request.opts.k_cap);
      row.re_gap_over_gamma = gap.lambda.real() / gamma;
      row.im_gap_over_gamma = gap.lambda.imag() / gamma;
      row.gap_k = gap.k;
    } catch (const std::exception& err) {
      row.status = err.what();
    }
    row.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                     .count();
  });
  return rows;
}

std::vector<SweepRow> gap_flow(const SweepRequest& request) {
  return sweep_order_parameter(request);
}

SpectrumSnapshot spectrum_snapshot(const ModelSpec& model, int m, int k_cap,
                                   int workers) {
  const std::vector<SpectrumEntry> spectrum =
      sorted_spectrum(model, k_cap, workers);
  if (m < 1 || m > static_cast<int>(spectrum.size()))
    throw ParameterError("snapshot size m=" + std::to_string(m) +
                         " outside 1.." + std::to_string(spectrum.size()));

  const double gamma = model.base.gamma > 0.0 ? model.base.gamma : 1.0;
  const double omega = model.base.omega_c;
  SpectrumSnapshot snap;
  snap.model = model.name;
  snap.base = model.base;
  snap.xi_over_gamma = model.base.xi / gamma;
  snap.N = model.scale_N;
  snap.n_max = model.n_max;
  snap.frame = model.frame;
  snap.k_cap = k_cap;
  snap.entries.reserve(m);
  for (int i = 0; i < m; ++i) {
    const SpectrumEntry& entry = spectrum[i];
    SnapshotEntry out;
    out.re_over_gamma = entry.lambda.real() / gamma;
    out.im_over_gamma = entry.lambda.imag() / gamma;
    out.k = entry.k;
    out.residual = entry.residual;
    const double im = entry.lambda.imag();
    out.line_dist_over_gamma =
        (omega != 0.0 ? std::abs(im - omega * std::round(im / omega)) : std::abs(im)) /
        gamma;
    snap.entries.push_back(out);
  }
  return snap;
}

}  // namespace liouspec
