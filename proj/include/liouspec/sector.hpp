#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "liouspec/model.hpp"

namespace liouspec {

/// The generator commutes with the photon-number phase rotation, so its
/// eigenmatrices live on single diagonals of the density matrix. Sector k
/// collects the dyads |p><p-k| and the Liouvillian restricted to it is a
/// dense (n_max+1-|k|)-dimensional block.

/// Index range of the dyads |p><p-k| inside the truncated space.
struct SectorSupport {
  int p_min = 0;
  int p_max = 0;
  int dim() const { return p_max - p_min + 1; }
};

/// p in [max(0,k), min(n_max, n_max+k)]. Throws EmptySectorError for |k| > n_max.
SectorSupport sector_support(int k, int n_max);

/// Liouvillian block acting on the coefficients c_p of sector k.
/// Row/column i corresponds to p = support.p_min + i.
struct SectorMatrix {
  int k = 0;
  int n_max = 0;
  Eigen::MatrixXcd m;

  int dim() const { return static_cast<int>(m.rows()); }
  SectorSupport support() const { return sector_support(k, n_max); }
  bool is_real() const;
  double norm1() const;
};

/// Assembles the sector-k block. For each jump (shift s, amplitude A):
///   M[p+s, p] += A(p) * conj(A(p-k))        (gain of coefficient p+s)
///   M[p, p]   -= (|A(p)|^2 + |A(p-k)|^2)/2
/// and the Hamiltonian contributes M[p, p] -= i (h(p) - h(p-k)).
SectorMatrix build_sector_matrix(const ModelSpec& model, int k);

/// The full (n_max+1)^2-dimensional generator, for oracle comparisons only.
/// vec index of the dyad |m><n| is m*(n_max+1) + n.
struct FullSuperoperator {
  int n_max = 0;
  Eigen::MatrixXcd m;

  int dim() const { return static_cast<int>(m.rows()); }
  int dyad_index(int row, int col) const { return row * (n_max + 1) + col; }
};

/// Builds -i[H, .] + sum_j D[L_j] from explicit (n_max+1)x(n_max+1) operator
/// matrices via Kronecker products — deliberately independent of the sector
/// assembly above. Guarded to n_max <= 12 unless allow_large.
FullSuperoperator build_full_superoperator(const ModelSpec& model,
                                           bool allow_large = false);

/// Test hook type: mutates a sector block before comparison (fault injection).
using SectorPerturbation = std::function<void(Eigen::MatrixXcd&, int k)>;

struct BlockEquivalenceReport {
  double max_block_deviation = 0.0;  ///< full superoperator vs direct block sum
  double max_off_block = 0.0;        ///< coupling between different sectors
};

/// Permutes the full superoperator into diagonal-offset order and compares it
/// against the direct sum of build_sector_matrix over k = -n_max..n_max.
BlockEquivalenceReport verify_block_equivalence(
    const ModelSpec& model, bool allow_large = false,
    const SectorPerturbation& perturb = nullptr);

/// Eigenvalue exp(-i phi k) of the number-phase rotation superoperator on any
/// sector-k dyad.
std::complex<double> apply_symmetry_phase(int k, double phi);

}  // namespace liouspec
