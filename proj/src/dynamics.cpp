#include "liouspec/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "liouspec/errors.hpp"

namespace liouspec {

namespace {

bool finite(const Eigen::VectorXcd& v) {
  for (int i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
  return true;
}

Eigen::VectorXcd spectral_apply(const EigenSystem& sys, const Eigen::VectorXcd& x0,
                                double tau) {
  const Eigen::VectorXcd coeffs = sys.left.adjoint() * x0;
  Eigen::VectorXcd weights(coeffs.size());
  for (int i = 0; i < coeffs.size(); ++i)
    weights[i] = std::exp(sys.values[i] * tau) * coeffs[i];
  return sys.right * weights;
}

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187,
                 kA53 = 64448.0 / 6561, kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 35.0 / 384 - 5179.0 / 57600, kE3 = 500.0 / 1113 - 7571.0 / 16695,
                 kE4 = 125.0 / 192 - 393.0 / 640,
                 kE5 = -2187.0 / 6784 + 92097.0 / 339200, kE6 = 11.0 / 84 - 187.0 / 2100,
                 kE7 = -1.0 / 40;

Eigen::VectorXcd integrate_ode(const Eigen::MatrixXcd& m, Eigen::VectorXcd x,
                               double t_begin, double t_end, double rel_tol,
                               double abs_tol) {
  if (t_end == t_begin) return x;
  const double span = t_end - t_begin;
  double h = span / 100.0;
  double t = t_begin;
  const double floor_tol = abs_tol * std::max(1.0, x.cwiseAbs().maxCoeff());
  long steps = 0;

  Eigen::VectorXcd k1 = m * x;
  while (t < t_end) {
    if (++steps > 2'000'000)
      throw PropagationError("adaptive integration exceeded the step budget");
    h = std::min(h, t_end - t);
    const Eigen::VectorXcd k2 = m * (x + h * (kA21 * k1));
    const Eigen::VectorXcd k3 = m * (x + h * (kA31 * k1 + kA32 * k2));
    const Eigen::VectorXcd k4 = m * (x + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
    const Eigen::VectorXcd k5 =
        m * (x + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
    const Eigen::VectorXcd k6 =
        m * (x + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5));
    const Eigen::VectorXcd x_new =
        x + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
    const Eigen::VectorXcd k7 = m * x_new;
    const Eigen::VectorXcd err_vec =
        h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);

    double err = 0.0;
    for (int i = 0; i < x.size(); ++i) {
      const double scale =
          floor_tol + rel_tol * std::max(std::abs(x[i]), std::abs(x_new[i]));
      err = std::max(err, std::abs(err_vec[i]) / scale);
    }
    if (err <= 1.0) {
      t += h;
      x = x_new;
      k1 = k7;  // first-same-as-last
      if (!finite(x))
        throw PropagationError("integration path produced a non-finite state");
    }
    const double factor = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
    if (!(h > 0.0) || !std::isfinite(h))
      throw PropagationError("integration step size collapsed");
  }
  return x;
}

void check_match(const SectorMatrix& block, const SectorVector& x0) {
  if (x0.k != block.k)
    throw ParameterError("sector vector k does not match the block");
  if (x0.coeffs.size() != block.dim())
    throw ParameterError("sector vector length does not match the block");
}

constexpr double kSpectralConditionCap = 1e8;

}  // namespace

SectorVector evolve_sector_ode(const SectorMatrix& block, const SectorVector& x0,
                               double tau, double rel_tol, double abs_tol) {
  check_match(block, x0);
  Eigen::VectorXcd x = integrate_ode(block.m, x0.coeffs, 0.0, tau, rel_tol, abs_tol);
  if (!finite(x))
    throw PropagationError("integration path produced a non-finite state");
  return SectorVector{block.k, std::move(x)};
}

SectorVector evolve_sector(const SectorMatrix& block, const SectorVector& x0,
                           double tau) {
  check_match(block, x0);
  if (tau == 0.0) return x0;
  const EigenSystem sys = eigendecompose(block);
  if (!sys.biorthonormal || sys.basis_condition > kSpectralConditionCap)
    return evolve_sector_ode(block, x0, tau);
  Eigen::VectorXcd x = spectral_apply(sys, x0.coeffs, tau);
  if (!finite(x))
    throw PropagationError("spectral path produced a non-finite state");
  return SectorVector{block.k, std::move(x)};
}

std::vector<SectorVector> evolve_sector_grid(const SectorMatrix& block,
                                             const SectorVector& x0,
                                             const std::vector<double>& tau_grid) {
  check_match(block, x0);
  std::vector<SectorVector> out;
  out.reserve(tau_grid.size());
  const EigenSystem sys = eigendecompose(block);
  if (sys.biorthonormal && sys.basis_condition <= kSpectralConditionCap) {
    for (double tau : tau_grid) {
      Eigen::VectorXcd x = spectral_apply(sys, x0.coeffs, tau);
      if (!finite(x))
        throw PropagationError("spectral path produced a non-finite state");
      out.push_back(SectorVector{block.k, std::move(x)});
    }
  } else {
    Eigen::VectorXcd x = x0.coeffs;
    double t = 0.0;
    for (double tau : tau_grid) {
      if (tau < t)
        throw ParameterError("tau grid must be nondecreasing for integration");
      x = integrate_ode(block.m, x, t, tau, 1e-10, 1e-13);
      t = tau;
      if (!finite(x))
        throw PropagationError("integration path produced a non-finite state");
      out.push_back(SectorVector{block.k, x});
    }
  }
  return out;
}

namespace {

CorrelationTrace regression_trace(const ModelSpec& model, const SteadyState& ss,
                                  const std::vector<double>& tau_grid,
                                  TraceKind kind) {
  validate_model(model);
  const int sector = kind == TraceKind::c2 ? 2 : 1;
  if (model.n_max < sector)
    throw ParameterError("cutoff too small for the requested correlation");
  if (ss.occupations.size() != model.n_max + 1)
    throw ParameterError("steady state does not match the model cutoff");

  const SectorMatrix block = build_sector_matrix(model, sector);
  const SectorSupport sup = block.support();
  Eigen::VectorXcd x0(block.dim());
  Eigen::VectorXd weight(block.dim());
  for (int p = sup.p_min; p <= sup.p_max; ++p) {
    const double w = kind == TraceKind::c2 ? std::sqrt(double(p) * (p - 1.0))
                                           : std::sqrt(double(p));
    weight[p - sup.p_min] = w;
    x0[p - sup.p_min] = ss.occupations[p] * w;
  }

  CorrelationTrace trace;
  trace.kind = kind;
  trace.tau = tau_grid;
  trace.model_name = model.name;
  trace.frame = model.frame;
  trace.base = model.base;
  trace.N = model.scale_N;
  trace.n_max = model.n_max;
  const auto states = evolve_sector_grid(block, SectorVector{sector, x0}, tau_grid);
  trace.values.reserve(states.size());
  for (const auto& state : states) {
    std::complex<double> value = 0.0;
    for (int i = 0; i < state.coeffs.size(); ++i) value += weight[i] * state.coeffs[i];
    trace.values.push_back(value);
  }
  return trace;
}

}  // namespace

CorrelationTrace correlation_c1(const ModelSpec& model, const SteadyState& ss,
                                const std::vector<double>& tau_grid) {
  return regression_trace(model, ss, tau_grid, TraceKind::c1);
}

CorrelationTrace correlation_c2(const ModelSpec& model, const SteadyState& ss,
                                const std::vector<double>& tau_grid) {
  return regression_trace(model, ss, tau_grid, TraceKind::c2);
}

CorrelationTrace field_trace(const ModelSpec& model, std::complex<double> alpha0,
                             const std::vector<double>& tau_grid) {
  validate_model(model);
  if (model.n_max < 1) throw ParameterError("cutoff too small for a field trace");

  // Truncated coherent amplitudes d_n = exp(-|a|^2/2) a^n / sqrt(n!).
  std::vector<std::complex<double>> d(model.n_max + 1);
  d[0] = std::exp(-0.5 * std::norm(alpha0));
  double captured = std::norm(d[0]);
  for (int n = 1; n <= model.n_max; ++n) {
    d[n] = d[n - 1] * alpha0 / std::sqrt(double(n));
    captured += std::norm(d[n]);
  }
  if (1.0 - captured > 1e-6)
    throw TruncationError("coherent state |alpha0|^2 = " +
                              std::to_string(std::norm(alpha0)) +
                              " does not fit the cutoff n_max=" +
                              std::to_string(model.n_max),
                          1.0 - captured);

  const SectorMatrix block = build_sector_matrix(model, 1);
  Eigen::VectorXcd x0(block.dim());
  for (int p = 1; p <= model.n_max; ++p) x0[p - 1] = d[p] * std::conj(d[p - 1]);

  CorrelationTrace trace;
  trace.kind = TraceKind::field;
  trace.tau = tau_grid;
  trace.model_name = model.name;
  trace.frame = model.frame;
  trace.base = model.base;
  trace.N = model.scale_N;
  trace.n_max = model.n_max;
  const auto states = evolve_sector_grid(block, SectorVector{1, x0}, tau_grid);
  trace.values.reserve(states.size());
  for (const auto& state : states) {
    std::complex<double> value = 0.0;
    for (int p = 1; p <= model.n_max; ++p)
      value += std::sqrt(double(p)) * state.coeffs[p - 1];
    trace.values.push_back(value);
  }
  return trace;
}

FrequencyEstimate dominant_frequency(const CorrelationTrace& trace) {
  const size_t n = trace.tau.size();
  if (n < 2 || trace.values.size() != n)
    throw FrequencyError("trace too short for a frequency estimate");

  std::vector<double> y(n);
  double mean = 0.0;
  for (size_t i = 0; i < n; ++i) mean += trace.values[i].real();
  mean /= double(n);
  for (size_t i = 0; i < n; ++i) y[i] = trace.values[i].real() - mean;

  std::vector<double> crossings;
  for (size_t i = 0; i + 1 < n; ++i) {
    if (y[i] == 0.0) {
      if (crossings.empty() || crossings.back() != trace.tau[i])
        crossings.push_back(trace.tau[i]);
    } else if (y[i] * y[i + 1] < 0.0) {
      const double t = trace.tau[i] +
                       (trace.tau[i + 1] - trace.tau[i]) * y[i] / (y[i] - y[i + 1]);
      crossings.push_back(t);
    }
  }
  if (crossings.size() < 4)
    throw FrequencyError("only " + std::to_string(crossings.size()) +
                         " zero crossings; frequency undefined");

  std::vector<double> spacing(crossings.size() - 1);
  for (size_t i = 0; i + 1 < crossings.size(); ++i)
    spacing[i] = crossings[i + 1] - crossings[i];
  const double avg =
      std::accumulate(spacing.begin(), spacing.end(), 0.0) / double(spacing.size());
  double var = 0.0;
  for (double s : spacing) var += (s - avg) * (s - avg);
  var = spacing.size() > 1 ? var / double(spacing.size() - 1) : 0.0;

  FrequencyEstimate out;
  out.crossings = static_cast<int>(crossings.size());
  out.omega = M_PI / avg;  // successive crossings are half a period apart
  out.sigma = M_PI * std::sqrt(var / double(spacing.size())) / (avg * avg);
  return out;
}

}  // namespace liouspec
