#include "liouspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "liouspec/dynamics.hpp"
#include "liouspec/errors.hpp"
#include "liouspec/spectra.hpp"
#include "liouspec/sweeps.hpp"

namespace liouspec {

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

namespace {

ModelSpec family_model(const RunConfig& config, const std::string& family,
                       double xi, int N, int n_max, Frame frame) {
  BaseRates base{config.gamma, 0.0, config.eta, config.beta, config.omega_c};
  return build_family_model(family, base, xi, N, n_max, frame);
}

double column_sum_deviation(const SectorMatrix& block) {
  double worst = 0.0;
  for (int j = 0; j < block.dim(); ++j)
    worst = std::max(worst, std::abs(block.m.col(j).sum()));
  return worst;
}

double conjugation_deviation(const ModelSpec& model, int k_cap) {
  double worst = 0.0;
  for (int k = 1; k <= std::min(k_cap, model.n_max); ++k) {
    const EigenSystem plus = eigendecompose(build_sector_matrix(model, k));
    const EigenSystem minus = eigendecompose(build_sector_matrix(model, -k));
    std::vector<std::complex<double>> a(plus.values.size());
    std::vector<std::complex<double>> b(minus.values.size());
    for (int i = 0; i < plus.values.size(); ++i) a[i] = plus.values[i];
    for (int i = 0; i < minus.values.size(); ++i) b[i] = std::conj(minus.values[i]);
    auto order = [](const std::complex<double>& x, const std::complex<double>& y) {
      return std::make_pair(x.real(), x.imag()) < std::make_pair(y.real(), y.imag());
    };
    std::sort(a.begin(), a.end(), order);
    std::sort(b.begin(), b.end(), order);
    for (size_t i = 0; i < a.size(); ++i)
      worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

VerifyReport run_verify(const RunConfig& config, const VerifyHooks* hooks) {
  VerifyReport report;
  const double gamma = config.gamma;
  const std::vector<std::string> families = {"btc", "scully-lamb"};

  // Block structure against the full-superoperator oracle, three drive
  // strengths per family at a small cutoff.
  {
    const int n_max = std::min(config.verify_n_max, 8);
    double worst = 0.0;
    for (const auto& family : families)
      for (double ratio : {0.5, 1.25, 1.75}) {
        const ModelSpec model =
            family_model(config, family, ratio * gamma, 2, n_max, Frame::lab);
        const BlockEquivalenceReport eq = verify_block_equivalence(
            model, false, hooks ? hooks->block_perturbation : nullptr);
        worst = std::max({worst, eq.max_block_deviation, eq.max_off_block});
      }
    report.checks.push_back(
        VerifyCheck{"block-equivalence", worst < 1e-12, worst, 1e-12});
  }

  // Lab vs rotating eigenvalue shift (exact for the linear Hamiltonian).
  {
    const double tol = 1e-10 * std::max(gamma, config.omega_c);
    double worst = 0.0;
    for (const auto& family : families) {
      const int n_max = config.n_max > 0 ? config.n_max : 40;
      const ModelSpec model =
          family_model(config, family, config.xi, config.N, n_max, Frame::lab);
      worst = std::max(worst,
                       frame_shift_check(model, std::min(config.k_cap, n_max)));
    }
    report.checks.push_back(VerifyCheck{"frame-shift", worst < tol, worst, tol});
  }

  // Trace preservation: columns of the population block sum to zero.
  {
    double worst_rel = 0.0;
    for (const auto& family : families) {
      const ModelSpec model =
          family_model(config, family, config.xi, config.N, 30, Frame::lab);
      const SectorMatrix block = build_sector_matrix(model, 0);
      worst_rel = std::max(worst_rel,
                           column_sum_deviation(block) / std::max(block.norm1(), 1e-300));
    }
    report.checks.push_back(
        VerifyCheck{"trace-preservation", worst_rel < 1e-12, worst_rel, 1e-12});
  }

  // Spectra of opposite sectors are complex conjugates.
  {
    const double tol = 1e-10 * std::max(1.0, gamma);
    double worst = 0.0;
    for (const auto& family : families) {
      const ModelSpec model =
          family_model(config, family, config.xi, config.N, 30, Frame::lab);
      worst = std::max(worst, conjugation_deviation(model, config.k_cap));
    }
    report.checks.push_back(
        VerifyCheck{"conjugation-pairing", worst < tol, worst, tol});
  }

  // Spectral propagation against direct integration on the k=1 block.
  {
    double worst = 0.0;
    for (const auto& family : families) {
      const ModelSpec model =
          family_model(config, family, config.xi, config.N, 30, Frame::lab);
      const SectorMatrix block = build_sector_matrix(model, 1);
      Eigen::VectorXcd x0(block.dim());
      for (int i = 0; i < block.dim(); ++i)
        x0[i] = std::complex<double>(1.0 / (1.0 + i), 0.5 / (1.0 + i));
      const SectorVector start{1, x0};
      const double tau = 1.0 / gamma;
      const SectorVector spectral = evolve_sector(block, start, tau);
      const SectorVector integrated = evolve_sector_ode(block, start, tau);
      const double scale = std::max(spectral.coeffs.norm(), 1e-300);
      worst = std::max(worst,
                       (spectral.coeffs - integrated.coeffs).norm() / scale);
    }
    report.checks.push_back(
        VerifyCheck{"regression-consistency", worst < 1e-6, worst, 1e-6});
  }

  return report;
}

}  // namespace liouspec
