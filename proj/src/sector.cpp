#include "liouspec/sector.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <cmath>
#include <string>

#include "liouspec/errors.hpp"

namespace liouspec {

SectorSupport sector_support(int k, int n_max) {
  if (std::abs(k) > n_max)
    throw EmptySectorError("sector k=" + std::to_string(k) +
                           " is empty at n_max=" + std::to_string(n_max));
  return SectorSupport{std::max(0, k), std::min(n_max, n_max + k)};
}

bool SectorMatrix::is_real() const {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j).imag() != 0.0) return false;
  return true;
}

double SectorMatrix::norm1() const {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    best = std::max(best, m.col(j).cwiseAbs().sum());
  return best;
}

SectorMatrix build_sector_matrix(const ModelSpec& model, int k) {
  validate_model(model);
  const int n_max = model.n_max;
  const SectorSupport sup = sector_support(k, n_max);
  const int dim = sup.dim();

  SectorMatrix block;
  block.k = k;
  block.n_max = n_max;
  block.m = Eigen::MatrixXcd::Zero(dim, dim);

  const std::complex<double> im_unit(0.0, 1.0);
  for (int p = sup.p_min; p <= sup.p_max; ++p) {
    const int col = p - sup.p_min;
    block.m(col, col) -= im_unit * (model.h.h[p] - model.h.h[p - k]);
    for (const auto& jump : model.jumps) {
      const auto a_p = jump.amp[p];
      const auto a_q = jump.amp[p - k];
      block.m(col, col) -= 0.5 * (std::norm(a_p) + std::norm(a_q));
      const int target = p + jump.shift;
      if (target >= sup.p_min && target <= sup.p_max)
        block.m(target - sup.p_min, col) += a_p * std::conj(a_q);
    }
  }
  return block;
}

FullSuperoperator build_full_superoperator(const ModelSpec& model,
                                           bool allow_large) {
  validate_model(model);
  const int n_max = model.n_max;
  if (n_max > 12 && !allow_large)
    throw GuardError("full superoperator requested at n_max=" +
                     std::to_string(n_max) +
                     " > 12; pass allow_large to override the oracle guard");

  const int d = n_max + 1;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd ham = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n < d; ++n) ham(n, n) = model.h.h[n];

  const std::complex<double> im_unit(0.0, 1.0);
  // Row-major dyad vectorization: vec(A rho B) = (A kron B^T) vec(rho).
  Eigen::MatrixXcd full = -im_unit * (Eigen::kroneckerProduct(ham, id) -
                                      Eigen::kroneckerProduct(id, ham.transpose()));
  for (const auto& jump : model.jumps) {
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) {
      const int target = n + jump.shift;
      if (target >= 0 && target < d) op(target, n) = jump.amp[n];
    }
    const Eigen::MatrixXcd opdag_op = op.adjoint() * op;
    full += Eigen::kroneckerProduct(op, op.conjugate());
    full -= 0.5 * Eigen::kroneckerProduct(opdag_op, id);
    full -= 0.5 * Eigen::kroneckerProduct(id, opdag_op.transpose());
  }

  FullSuperoperator out;
  out.n_max = n_max;
  out.m = std::move(full);
  return out;
}

BlockEquivalenceReport verify_block_equivalence(const ModelSpec& model,
                                                bool allow_large,
                                                const SectorPerturbation& perturb) {
  const FullSuperoperator full = build_full_superoperator(model, allow_large);
  const int n_max = model.n_max;
  const int d = n_max + 1;

  // Flat dyad indices grouped by diagonal offset k, ascending p within each.
  std::vector<int> perm;
  perm.reserve(d * d);
  std::vector<int> block_of(d * d);
  for (int k = -n_max; k <= n_max; ++k) {
    const SectorSupport sup = sector_support(k, n_max);
    for (int p = sup.p_min; p <= sup.p_max; ++p) {
      block_of[perm.size()] = k;
      perm.push_back(full.dyad_index(p, p - k));
    }
  }

  BlockEquivalenceReport report;
  int offset = 0;
  for (int k = -n_max; k <= n_max; ++k) {
    Eigen::MatrixXcd block = build_sector_matrix(model, k).m;
    if (perturb) perturb(block, k);
    const int dim = static_cast<int>(block.rows());
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < dim; ++i) {
        const double dev =
            std::abs(full.m(perm[offset + i], perm[offset + j]) - block(i, j));
        report.max_block_deviation = std::max(report.max_block_deviation, dev);
      }
    offset += dim;
  }

  const int total = d * d;
  for (int j = 0; j < total; ++j)
    for (int i = 0; i < total; ++i) {
      if (block_of[i] == block_of[j]) continue;
      report.max_off_block =
          std::max(report.max_off_block, std::abs(full.m(perm[i], perm[j])));
    }
  return report;
}

std::complex<double> apply_symmetry_phase(int k, double phi) {
  return std::polar(1.0, -phi * k);
}

}  // namespace liouspec
