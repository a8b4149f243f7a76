#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "liouspec/sector.hpp"

namespace liouspec {

/// Full dense non-Hermitian eigendecomposition of a sector block.
///
/// Columns of `right` are unit right eigenvectors; columns of `left` are left
/// eigenvectors from the adjoint problem, rescaled so left.adjoint()*right is
/// the identity (when `biorthonormal`). With that normalization the rows of
/// left.adjoint() form the inverse of the right eigenbasis, which is what the
/// spectral propagator needs.
struct EigenSystem {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd right;
  Eigen::MatrixXcd left;
  Eigen::VectorXd residuals;      ///< ||M v_i - lambda_i v_i||_2 per pair
  double matrix_norm = 0.0;       ///< 1-norm of the decomposed block
  double basis_condition = 0.0;   ///< ||V||_1 ||V^-1||_1; inf when defective
  bool biorthonormal = false;
};

/// Dense eigendecomposition (real fast path when the block is real). Throws
/// EigensolverError on LAPACK non-convergence or when any residual exceeds
/// 1e-8 * ||M||_1.
EigenSystem eigendecompose(const SectorMatrix& block);

struct SpectrumEntry {
  std::complex<double> lambda;
  int k = 0;
  int index_in_sector = 0;  ///< rank within the sector under the global order
  double residual = 0.0;
};

/// Merged spectrum over |k| <= k_cap, ordered by ascending |Re lambda|, ties
/// by ascending |Im lambda|, then |k|, then k.
std::vector<SpectrumEntry> sorted_spectrum(const ModelSpec& model, int k_cap,
                                           int workers = 1);

/// Normalized steady-state Fock distribution with diagnostics.
struct SteadyState {
  Eigen::VectorXd occupations;  ///< size n_max+1, sums to 1
  double residual = 0.0;        ///< ||M x||_2 of the unit eigenvector
  double tail_weight = 0.0;     ///< occupation of the last retained level
  bool degenerate = false;      ///< a second near-zero eigenvalue in sector 0
};

/// Extracts the steady state from the k=0 block: eigenvector of the smallest
/// |lambda| (asserted < 1e-8*gamma), trace-normalized, small negatives
/// clamped. Throws TruncationError when tail exceeds tail_tol.
SteadyState steady_state(const ModelSpec& model, double tail_tol = 1e-6);

/// <a^dag a> of a steady state.
double expectation_number(const SteadyState& ss);

/// Slowest nonzero decay mode over |k| <= k_cap (steady-state entry excluded).
SpectrumEntry liouvillian_gap(const ModelSpec& model, int k_cap, int workers = 1);

/// Frame correspondence check: for every |k| <= k_cap, diagonalizes the block
/// with the model's Hamiltonian and the block with h = 0, and returns the
/// maximum pairing deviation |lambda - (lambda_R - i omega_c k)|. Smallness is
/// only expected for a linear Hamiltonian; a nonlinear one simply yields a
/// large reported deviation.
double frame_shift_check(const ModelSpec& model, int k_cap, int workers = 1);

}  // namespace liouspec
