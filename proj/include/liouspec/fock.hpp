#pragma once

#include <complex>
#include <string>
#include <vector>

namespace liouspec {

/// A jump operator on the truncated Fock space 0..n_max that shifts the
/// photon number by a fixed amount: L|n> = amp[n] |n + shift>.
///
/// The rate is folded into the amplitude table, so amp[n] carries units of
/// sqrt(1/time). Amplitudes are zero whenever the shifted level would leave
/// the truncated space, which keeps the resulting generator trace-preserving.
struct LadderJump {
  int shift = 0;                          ///< quanta added per jump (negative = loss)
  std::vector<std::complex<double>> amp;  ///< amp[n] for n = 0..n_max
  std::string label;

  int n_max() const { return static_cast<int>(amp.size()) - 1; }
};

/// Hamiltonian diagonal in the Fock basis, h[n] in units of 1/time (hbar = 1).
struct DiagonalHamiltonian {
  std::vector<double> h;  ///< h[n] for n = 0..n_max
  bool is_linear = false; ///< true iff h[n] = h[1]*n for all n

  int n_max() const { return static_cast<int>(h.size()) - 1; }
};

/// Validates the boundary invariants and builds a jump from a raw table.
/// Throws ParameterError if an amplitude is non-finite, |shift| > n_max, or
/// a nonzero amplitude would map outside 0..n_max.
LadderJump make_ladder_jump(int shift, std::vector<std::complex<double>> amp,
                            std::string label);

/// L = sqrt(gamma) a : single-particle loss. amp[n] = sqrt(gamma*n).
LadderJump make_annihilation(double gamma, int n_max);

/// L = sqrt(eta) a^2 : two-photon loss. amp[n] = sqrt(eta*n*(n-1)).
LadderJump make_two_photon_loss(double eta, int n_max);

/// L = sqrt(xi) a^dag : incoherent drive. amp[n] = sqrt(xi*(n+1)) for
/// n < n_max and amp[n_max] = 0 (truncation rule: raising jumps stop at the
/// boundary instead of leaking probability).
LadderJump make_incoherent_drive(double xi, int n_max);

/// L = a^dag (sqrt(xi) - sqrt(beta) a a^dag) : saturating incoherent gain.
/// amp[n] = sqrt(n+1)*(sqrt(xi) - sqrt(beta)*(n+1)) for n < n_max, 0 at n_max.
LadderJump make_scully_lamb_gain(double xi, double beta, int n_max);

/// L = sqrt(eta) a a^dag : number-conserving decoherence. amp[n] = sqrt(eta)*(n+1).
LadderJump make_scully_lamb_decoherence(double eta, int n_max);

/// H = omega_c a^dag a.
DiagonalHamiltonian make_number_hamiltonian(double omega_c, int n_max);

/// Builds a Hamiltonian from a raw diagonal, detecting linearity.
DiagonalHamiltonian make_diagonal_hamiltonian(std::vector<double> h);

}  // namespace liouspec
