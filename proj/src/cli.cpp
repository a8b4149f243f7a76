#include "liouspec/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include "liouspec/dynamics.hpp"
#include "liouspec/errors.hpp"
#include "liouspec/io.hpp"
#include "liouspec/spectra.hpp"
#include "liouspec/sweeps.hpp"

namespace liouspec {

namespace {

int resolve_workers(const RunConfig& config) {
  if (config.workers > 0) return config.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

Frame resolve_frame(const RunConfig& config, Frame fallback) {
  return config.frame.empty() ? fallback : frame_from_name(config.frame);
}

BaseRates config_base(const RunConfig& config) {
  return BaseRates{config.gamma, 0.0, config.eta, config.beta, config.omega_c};
}

SweepOptions config_options(const RunConfig& config, Frame frame) {
  SweepOptions opts;
  opts.k_cap = config.k_cap;
  opts.safety = config.safety;
  opts.floor = config.floor;
  opts.n_max_override = config.n_max;
  opts.tail_tol = config.tail_tol;
  opts.workers = resolve_workers(config);
  opts.frame = frame;
  return opts;
}

std::vector<double> xi_points(const RunConfig& config) {
  return config.xi_list.empty() ? std::vector<double>{config.xi} : config.xi_list;
}

std::vector<int> n_points(const RunConfig& config) {
  return config.N_list.empty() ? std::vector<int>{config.N} : config.N_list;
}

std::vector<double> tau_grid(const RunConfig& config) {
  std::vector<double> grid(config.tau_points);
  if (config.tau_points == 1) {
    grid[0] = 0.0;
    return grid;
  }
  for (int i = 0; i < config.tau_points; ++i)
    grid[i] = config.tau_max * i / double(config.tau_points - 1);
  return grid;
}

/// Writes to config.out (or stdout when empty) only after the payload is
/// fully computed, so a failing run leaves no file behind.
void emit(const RunConfig& config, const std::function<void(std::ostream&)>& write) {
  if (config.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw ParameterError("cannot open output file '" + config.out + "'");
  write(file);
}

void print_warnings(const ModelSpec& model) {
  for (const auto& warning : model.warnings)
    std::cerr << "warning: " << warning << '\n';
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const TruncationError& err) {
    std::cerr << "error: " << err.what()
              << " (tail_weight=" << format_double(err.tail_weight) << ")\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}

std::string trace_out_path(const std::string& base, TraceKind kind) {
  if (base.empty()) return base;
  const std::string tag = "." + trace_kind_name(kind);
  const size_t dot = base.find_last_of('.');
  if (dot == std::string::npos || base.find('/', dot) != std::string::npos)
    return base + tag;
  return base.substr(0, dot) + tag + base.substr(dot);
}

}  // namespace

int cmd_spectrum(const RunConfig& config) {
  return guarded([&] {
    const Frame frame = resolve_frame(config, Frame::lab);
    const SweepOptions opts = config_options(config, frame);
    std::vector<SpectrumSnapshot> snapshots;
    for (double xi : xi_points(config))
      for (int N : n_points(config)) {
        const int n_max = plan_cutoff(config.model, config_base(config), xi, N, opts);
        const ModelSpec model = build_family_model(config.model, config_base(config),
                                                   xi, N, n_max, frame);
        print_warnings(model);
        steady_state(model, config.tail_tol);  // cutoff gate
        snapshots.push_back(
            spectrum_snapshot(model, config.m, config.k_cap, opts.workers));
      }
    emit(config, [&](std::ostream& out) {
      config.format == "json" ? write_snapshots_json(out, snapshots)
                              : write_snapshots_csv(out, snapshots);
    });
    return 0;
  });
}

int cmd_sweep(const RunConfig& config) {
  return guarded([&] {
    if (config.xi_list.empty()) throw ParameterError("sweep requires xi_list or xi_grid");
    if (config.N_list.empty()) throw ParameterError("sweep requires a nonempty N_list");
    SweepRequest request;
    request.family = config.model;
    request.base = config_base(config);
    request.xi_values = config.xi_list;
    request.N_values = config.N_list;
    request.opts = config_options(config, resolve_frame(config, Frame::rotating));
    const std::vector<SweepRow> rows = sweep_order_parameter(request);

    int flagged = 0;
    bool truncated = false;
    for (const SweepRow& row : rows)
      if (row.status != "ok") {
        ++flagged;
        truncated = truncated || row.status.starts_with("truncation");
        std::cerr << "warning: point (xi/gamma=" << format_double(row.xi_over_gamma)
                  << ", N=" << row.N << ") flagged: " << row.status << '\n';
      }
    emit(config, [&](std::ostream& out) {
      config.format == "json" ? write_sweep_json(out, rows)
                              : write_sweep_csv(out, rows);
    });
    return truncated ? 2 : 0;
  });
}

int cmd_correlate(const RunConfig& config) {
  return guarded([&] {
    const Frame frame = resolve_frame(config, Frame::lab);
    const SweepOptions opts = config_options(config, frame);
    const int n_max =
        plan_cutoff(config.model, config_base(config), config.xi, config.N, opts);
    const ModelSpec model = build_family_model(config.model, config_base(config),
                                               config.xi, config.N, n_max, frame);
    print_warnings(model);
    const SteadyState ss = steady_state(model, config.tail_tol);
    const std::vector<double> grid = tau_grid(config);

    std::vector<CorrelationTrace> traces;
    for (const auto& kind : config.kinds)
      traces.push_back(kind == "c2" ? correlation_c2(model, ss, grid)
                                    : correlation_c1(model, ss, grid));

    for (const CorrelationTrace& trace : traces) {
      RunConfig per_trace = config;
      per_trace.out = trace_out_path(config.out, trace.kind);
      emit(per_trace, [&](std::ostream& out) {
        config.format == "json" ? write_trace_json(out, trace)
                                : write_trace_csv(out, trace);
      });
      if (!per_trace.out.empty())
        std::cerr << trace_kind_name(trace.kind) << " -> " << per_trace.out << '\n';
    }

    // Traces are already on disk; an undefined frequency is still exit 1.
    int code = 0;
    for (const CorrelationTrace& trace : traces) {
      try {
        const FrequencyEstimate est = dominant_frequency(trace);
        std::cerr << trace_kind_name(trace.kind)
                  << " dominant angular frequency: " << format_double(est.omega)
                  << " +- " << format_double(est.sigma) << " (" << est.crossings
                  << " crossings)\n";
      } catch (const FrequencyError& err) {
        std::cerr << "error: " << trace_kind_name(trace.kind) << ": " << err.what()
                  << '\n';
        code = 1;
      }
    }
    return code;
  });
}

int cmd_verify(const RunConfig& config, const VerifyHooks* hooks) {
  return guarded([&] {
    const VerifyReport report = run_verify(config, hooks);
    for (const VerifyCheck& check : report.checks)
      std::printf("%-24s %s  deviation %.3e  (tolerance %.1e)\n", check.name.c_str(),
                  check.pass ? "pass" : "FAIL", check.deviation, check.tolerance);
    if (!report.all_pass()) {
      for (const VerifyCheck& check : report.checks)
        if (!check.pass)
          std::cerr << "error: invariant '" << check.name << "' failed: deviation "
                    << format_double(check.deviation) << " exceeds "
                    << format_double(check.tolerance) << '\n';
      return 3;
    }
    return 0;
  });
}

int cmd_steady(const RunConfig& config) {
  return guarded([&] {
    const Frame frame = resolve_frame(config, Frame::rotating);
    const SweepOptions opts = config_options(config, frame);
    const int n_max =
        plan_cutoff(config.model, config_base(config), config.xi, config.N, opts);
    const ModelSpec model = build_family_model(config.model, config_base(config),
                                               config.xi, config.N, n_max, frame);
    print_warnings(model);
    const SteadyState ss = steady_state(model, config.tail_tol);
    if (ss.degenerate)
      std::cerr << "warning: a second near-zero eigenvalue in sector 0 "
                   "(expected only close to the transition at large N)\n";
    std::cerr << "<n>_ss = " << format_double(expectation_number(ss))
              << ", <n>_ss/N = " << format_double(expectation_number(ss) / config.N)
              << ", tail_weight = " << format_double(ss.tail_weight) << '\n';
    emit(config, [&](std::ostream& out) {
      config.format == "json" ? write_steady_json(out, ss, model)
                              : write_steady_csv(out, ss, model);
    });
    return 0;
  });
}

int cmd_gap(const RunConfig& config) {
  return guarded([&] {
    const Frame frame = resolve_frame(config, Frame::rotating);
    const SweepOptions opts = config_options(config, frame);
    const int n_max =
        plan_cutoff(config.model, config_base(config), config.xi, config.N, opts);
    const ModelSpec model = build_family_model(config.model, config_base(config),
                                               config.xi, config.N, n_max, frame);
    print_warnings(model);
    steady_state(model, config.tail_tol);  // cutoff gate
    const SpectrumEntry gap = liouvillian_gap(model, config.k_cap, opts.workers);
    emit(config, [&](std::ostream& out) {
      out << "re_over_gamma,im_over_gamma,k,residual\n"
          << format_double(gap.lambda.real() / config.gamma) << ','
          << format_double(gap.lambda.imag() / config.gamma) << ',' << gap.k << ','
          << format_double(gap.residual) << '\n';
    });
    return 0;
  });
}

int cmd_fieldtrace(const RunConfig& config) {
  return guarded([&] {
    const Frame frame = resolve_frame(config, Frame::lab);
    const SweepOptions opts = config_options(config, frame);
    const std::complex<double> alpha0(config.alpha0_re, config.alpha0_im);
    int n_max =
        plan_cutoff(config.model, config_base(config), config.xi, config.N, opts);
    if (config.n_max <= 0)
      n_max = std::max(n_max, static_cast<int>(std::ceil(
                                  config.safety * std::norm(alpha0))) +
                                  config.floor);
    const ModelSpec model = build_family_model(config.model, config_base(config),
                                               config.xi, config.N, n_max, frame);
    print_warnings(model);
    const CorrelationTrace trace = field_trace(model, alpha0, tau_grid(config));
    emit(config, [&](std::ostream& out) {
      config.format == "json" ? write_trace_json(out, trace)
                              : write_trace_csv(out, trace);
    });
    return 0;
  });
}

}  // namespace liouspec
