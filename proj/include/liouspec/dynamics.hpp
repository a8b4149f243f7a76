#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "liouspec/spectra.hpp"

namespace liouspec {

/// Coefficients c_p of the dyads |p><p-k| over the sector support.
struct SectorVector {
  int k = 0;
  Eigen::VectorXcd coeffs;
};

enum class TraceKind { c1, c2, field };

/// A two-time correlation (or field expectation) sampled on a tau grid.
struct CorrelationTrace {
  std::vector<double> tau;
  std::vector<std::complex<double>> values;
  TraceKind kind = TraceKind::c1;
  std::string model_name;
  Frame frame = Frame::lab;
  BaseRates base;
  int N = 1;
  int n_max = 0;
};

/// Propagates x(tau) = exp(M tau) x0. Uses the spectral expansion
/// x(tau) = sum_i exp(lambda_i tau) v_i <w_i, x0> and falls back to adaptive
/// Dormand-Prince integration of dx/dt = M x when the eigenbasis condition
/// number exceeds 1e8. Throws PropagationError on a non-finite result.
SectorVector evolve_sector(const SectorMatrix& block, const SectorVector& x0,
                           double tau);

/// Grid version sharing one eigendecomposition (or one integration pass).
std::vector<SectorVector> evolve_sector_grid(const SectorMatrix& block,
                                             const SectorVector& x0,
                                             const std::vector<double>& tau_grid);

/// Forced ODE path, exposed for the spectral-vs-integration consistency check.
SectorVector evolve_sector_ode(const SectorMatrix& block, const SectorVector& x0,
                               double tau, double rel_tol = 1e-10,
                               double abs_tol = 1e-13);

/// Steady-state two-time correlation <a^dag(0) a(tau)> via the regression
/// rule: the initial sector-1 vector is x_p(0) = occ(p) sqrt(p) (the first
/// subdiagonal of rho_ss a^dag) and C1(tau) = sum_p sqrt(p) x_p(tau).
CorrelationTrace correlation_c1(const ModelSpec& model, const SteadyState& ss,
                                const std::vector<double>& tau_grid);

/// <a^dag2(0) a^2(tau)>: sector-2 regression with weights sqrt(p(p-1)).
CorrelationTrace correlation_c2(const ModelSpec& model, const SteadyState& ss,
                                const std::vector<double>& tau_grid);

/// <a>(tau) for an initial coherent state |alpha0>: evolves the first
/// subdiagonal of the truncated |alpha0><alpha0| dyad under the k=1 block.
/// Throws TruncationError when the coherent state does not fit the cutoff.
CorrelationTrace field_trace(const ModelSpec& model, std::complex<double> alpha0,
                             const std::vector<double>& tau_grid);

struct FrequencyEstimate {
  double omega = 0.0;      ///< angular frequency
  double sigma = 0.0;      ///< standard error from crossing-spacing variance
  int crossings = 0;
};

/// Angular frequency of Re(trace) from the mean zero-crossing spacing after
/// subtracting the mean. Throws FrequencyError with fewer than 4 crossings.
FrequencyEstimate dominant_frequency(const CorrelationTrace& trace);

}  // namespace liouspec
