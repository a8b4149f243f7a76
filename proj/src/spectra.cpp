#include "liouspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <tuple>

#include "liouspec/errors.hpp"
#include "parallel.hpp"

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace liouspec {

namespace {

double norm1(const Eigen::MatrixXcd& m) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    best = std::max(best, m.col(j).cwiseAbs().sum());
  return best;
}

void geev_complex(Eigen::MatrixXcd work, Eigen::VectorXcd& values,
                  Eigen::MatrixXcd& right, Eigen::MatrixXcd& left) {
  const int n = static_cast<int>(work.rows());
  values.resize(n);
  right.resize(n, n);
  left.resize(n, n);
  const int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'V', 'V', n, work.data(), n,
                                 values.data(), left.data(), n, right.data(), n);
  if (info != 0)
    throw EigensolverError("zgeev failed with info=" + std::to_string(info));
}

bool spectrum_order(const SpectrumEntry& a, const SpectrumEntry& b) {
  return std::make_tuple(std::abs(a.lambda.real()), std::abs(a.lambda.imag()),
                         std::abs(a.k), a.k, a.index_in_sector) <
         std::make_tuple(std::abs(b.lambda.real()), std::abs(b.lambda.imag()),
                         std::abs(b.k), b.k, b.index_in_sector);
}

}  // namespace

EigenSystem eigendecompose(const SectorMatrix& block) {
  // Real blocks also go through zgeev: this system's dgeev returns eigenpairs
  // with residuals far above backward error on graded generator blocks, and
  // its multishift driver stalls above n = 590 on them. zgeev shows neither
  // problem, and the complex solve costs little at these sizes.
  EigenSystem sys;
  sys.matrix_norm = block.norm1();
  geev_complex(block.m, sys.values, sys.right, sys.left);

  const int n = static_cast<int>(sys.values.size());
  const Eigen::MatrixXcd resid =
      block.m * sys.right - sys.right * sys.values.asDiagonal();
  sys.residuals.resize(n);
  for (int i = 0; i < n; ++i) sys.residuals[i] = resid.col(i).norm();
  const double tol = 1e-8 * std::max(sys.matrix_norm,
                                     std::numeric_limits<double>::min());
  if (sys.residuals.maxCoeff() > tol)
    throw EigensolverError(
        "eigenpair residual " + std::to_string(sys.residuals.maxCoeff()) +
        " above 1e-8*||M|| for sector k=" + std::to_string(block.k) +
        " (dim " + std::to_string(n) + ")");

  // Rescale the adjoint-problem vectors so left^H right = I. The Gram matrix
  // is near-diagonal for simple spectra; a tiny pivot flags a defective basis.
  const Eigen::MatrixXcd gram = sys.left.adjoint() * sys.right;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(gram);
  const Eigen::VectorXcd pivots = lu.matrixLU().diagonal();
  const double pivot_max = pivots.cwiseAbs().maxCoeff();
  const double pivot_min = pivots.cwiseAbs().minCoeff();
  if (pivot_max > 0.0 && pivot_min > 1e-14 * n * pivot_max) {
    sys.left = lu.solve(sys.left.adjoint()).adjoint();
    sys.biorthonormal = true;
    sys.basis_condition = norm1(sys.right) * norm1(sys.left.adjoint());
  } else {
    sys.biorthonormal = false;
    sys.basis_condition = std::numeric_limits<double>::infinity();
  }
  return sys;
}

std::vector<SpectrumEntry> sorted_spectrum(const ModelSpec& model, int k_cap,
                                           int workers) {
  validate_model(model);
  if (k_cap < 0 || k_cap > model.n_max)
    throw ParameterError("k_cap must lie in [0, n_max]");

  const int nsectors = 2 * k_cap + 1;
  std::vector<std::vector<SpectrumEntry>> per_sector(nsectors);
  detail::parallel_for_indexed(nsectors, workers, [&](int i) {
    const int k = i - k_cap;
    const SectorMatrix block = build_sector_matrix(model, k);
    const EigenSystem sys = eigendecompose(block);
    auto& entries = per_sector[i];
    entries.resize(sys.values.size());
    for (int j = 0; j < sys.values.size(); ++j)
      entries[j] = SpectrumEntry{sys.values[j], k, 0, sys.residuals[j]};
    std::sort(entries.begin(), entries.end(), spectrum_order);
    for (int j = 0; j < static_cast<int>(entries.size()); ++j)
      entries[j].index_in_sector = j;
  });

  std::vector<SpectrumEntry> merged;
  for (const auto& entries : per_sector)
    merged.insert(merged.end(), entries.begin(), entries.end());
  std::sort(merged.begin(), merged.end(), spectrum_order);
  return merged;
}

SteadyState steady_state(const ModelSpec& model, double tail_tol) {
  validate_model(model);
  const SectorMatrix block = build_sector_matrix(model, 0);
  const EigenSystem sys = eigendecompose(block);

  int best = 0;
  for (int i = 1; i < sys.values.size(); ++i)
    if (std::abs(sys.values[i]) < std::abs(sys.values[best])) best = i;

  const double zero_scale =
      model.base.gamma > 0.0 ? model.base.gamma : std::max(sys.matrix_norm, 1.0);
  if (std::abs(sys.values[best]) > 1e-8 * zero_scale)
    throw EigensolverError("no zero eigenvalue in sector 0: smallest |lambda| = " +
                           std::to_string(std::abs(sys.values[best])));

  SteadyState out;
  for (int i = 0; i < sys.values.size(); ++i)
    if (i != best && std::abs(sys.values[i]) < 1e-8 * zero_scale)
      out.degenerate = true;

  Eigen::VectorXcd x = sys.right.col(best);
  const std::complex<double> trace = x.sum();
  if (std::abs(trace) < 1e-6 * x.cwiseAbs().sum())
    throw EigensolverError("steady-state candidate has vanishing trace");
  x /= trace;

  Eigen::VectorXd occ = x.real();
  const double min_entry = occ.minCoeff();
  if (min_entry < -1e-10)
    throw EigensolverError("steady-state occupation " + std::to_string(min_entry) +
                           " below the -1e-10 clamping threshold");
  occ = occ.cwiseMax(0.0);
  occ /= occ.sum();

  out.occupations = std::move(occ);
  out.residual = sys.residuals[best];
  out.tail_weight = out.occupations[model.n_max];
  if (out.tail_weight > tail_tol)
    throw TruncationError(
        "steady-state tail weight " + std::to_string(out.tail_weight) +
        " exceeds " + std::to_string(tail_tol) + " at n_max=" +
        std::to_string(model.n_max) + "; increase the cutoff",
        out.tail_weight);
  return out;
}

double expectation_number(const SteadyState& ss) {
  double total = 0.0;
  for (int n = 0; n < ss.occupations.size(); ++n)
    total += n * ss.occupations[n];
  return total;
}

SpectrumEntry liouvillian_gap(const ModelSpec& model, int k_cap, int workers) {
  const std::vector<SpectrumEntry> spectrum =
      sorted_spectrum(model, k_cap, workers);
  if (spectrum.size() < 2)
    throw ParameterError("spectrum too small to define a gap");
  const SpectrumEntry& zero = spectrum.front();
  const double zero_scale =
      model.base.gamma > 0.0 ? model.base.gamma : 1.0;
  if (zero.k != 0 || std::abs(zero.lambda.real()) > 1e-8 * zero_scale)
    throw EigensolverError("slowest spectrum entry is not the steady state");
  return spectrum[1];
}

namespace {

/// Pairs two sorted eigenvalue lists that agree up to numerical noise,
/// re-matching inside clusters of nearly equal real part.
double max_pairing_deviation(std::vector<std::complex<double>> a,
                             std::vector<std::complex<double>> b,
                             double cluster_eps) {
  auto order = [](const std::complex<double>& x, const std::complex<double>& y) {
    return std::make_pair(x.real(), x.imag()) < std::make_pair(y.real(), y.imag());
  };
  std::sort(a.begin(), a.end(), order);
  std::sort(b.begin(), b.end(), order);

  double worst = 0.0;
  const size_t n = a.size();
  size_t start = 0;
  while (start < n) {
    size_t stop = start + 1;
    while (stop < n && a[stop].real() - a[stop - 1].real() <= cluster_eps) ++stop;
    if (stop - start == 1) {
      worst = std::max(worst, std::abs(a[start] - b[start]));
    } else {
      std::vector<bool> used(stop - start, false);
      for (size_t i = start; i < stop; ++i) {
        double best = std::numeric_limits<double>::infinity();
        size_t best_j = 0;
        for (size_t j = start; j < stop; ++j) {
          if (used[j - start]) continue;
          const double d = std::abs(a[i] - b[j]);
          if (d < best) {
            best = d;
            best_j = j;
          }
        }
        used[best_j - start] = true;
        worst = std::max(worst, best);
      }
    }
    start = stop;
  }
  return worst;
}

}  // namespace

double frame_shift_check(const ModelSpec& model, int k_cap, int workers) {
  validate_model(model);
  if (k_cap < 0 || k_cap > model.n_max)
    throw ParameterError("k_cap must lie in [0, n_max]");

  // Lab side: the model's own Hamiltonian if present, else rebuilt from
  // omega_c. Rotating side: same jumps with h = 0.
  ModelSpec lab = model;
  if (model.frame == Frame::rotating) {
    lab.frame = Frame::lab;
    lab.h = make_number_hamiltonian(model.base.omega_c, model.n_max);
  }
  ModelSpec rot = model;
  rot.frame = Frame::rotating;
  rot.h = make_number_hamiltonian(0.0, model.n_max);
  const double omega = lab.h.n_max() >= 1 ? lab.h.h[1] : 0.0;

  const int nsectors = 2 * k_cap + 1;
  std::vector<double> deviation(nsectors, 0.0);
  detail::parallel_for_indexed(nsectors, workers, [&](int i) {
    const int k = i - k_cap;
    const SectorMatrix lab_block = build_sector_matrix(lab, k);
    const SectorMatrix rot_block = build_sector_matrix(rot, k);
    const EigenSystem lab_sys = eigendecompose(lab_block);
    const EigenSystem rot_sys = eigendecompose(rot_block);

    std::vector<std::complex<double>> lab_values(lab_sys.values.size());
    std::vector<std::complex<double>> shifted(rot_sys.values.size());
    const std::complex<double> shift(0.0, -omega * k);
    for (int j = 0; j < lab_sys.values.size(); ++j) lab_values[j] = lab_sys.values[j];
    for (int j = 0; j < rot_sys.values.size(); ++j) shifted[j] = rot_sys.values[j] + shift;

    const double cluster_eps = 1e-7 * std::max(1.0, lab_sys.matrix_norm);
    deviation[i] = max_pairing_deviation(std::move(lab_values), std::move(shifted),
                                         cluster_eps);
  });
  return *std::max_element(deviation.begin(), deviation.end());
}

}  // namespace liouspec
