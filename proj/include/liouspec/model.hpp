#pragma once

#include <string>
#include <vector>

#include "liouspec/fock.hpp"

namespace liouspec {

enum class Frame { lab, rotating };

/// Physical rates before the thermodynamic-limit rescaling by N.
struct BaseRates {
  double gamma = 0.0;    ///< single-photon loss
  double xi = 0.0;       ///< incoherent drive (gain)
  double eta = 0.0;      ///< two-photon loss / nonlinear decoherence
  double beta = 0.0;     ///< gain saturation (Scully-Lamb only)
  double omega_c = 0.0;  ///< cavity frequency
};

/// A fully assembled single-mode model: Hamiltonian diagonal, jump list and
/// the bookkeeping needed to rebuild or rescale it.
///
/// The scaling parameter N sends the photon number to N*n while keeping the
/// photon lifetime 1/gamma fixed; the jump tables already contain the
/// rescaled rates.
struct ModelSpec {
  std::string name;  ///< "btc" or "scully-lamb"
  int n_max = 0;
  DiagonalHamiltonian h;
  std::vector<LadderJump> jumps;
  BaseRates base;
  int scale_N = 1;
  Frame frame = Frame::lab;
  std::vector<std::string> warnings;  ///< non-fatal validity notes from construction
};

/// Checks the structural invariants (table sizes, rotating frame => h == 0,
/// N >= 1). Throws ParameterError on violation.
void validate_model(const ModelSpec& model);

/// Driven cavity with two-photon loss: jumps {sqrt(gamma) a, sqrt(eta/N) a^2,
/// sqrt(xi) a^dag}; H = omega_c a^dag a in the lab frame, 0 in the rotating one.
ModelSpec build_btc_model(double gamma, double xi, double eta, double omega_c,
                          int N, int n_max, Frame frame);

/// Scully-Lamb laser model in the fourth-order field approximation:
/// jumps {a^dag(sqrt(xi) - sqrt(beta/N^2) a a^dag), sqrt(eta/N) a a^dag,
/// sqrt(gamma) a}. Warns when sqrt(beta_scaled/xi) exceeds saturation_warn_level
/// (the weak gain-saturation validity condition).
ModelSpec build_scully_lamb(double gamma, double xi, double eta, double beta,
                            double omega_c, int N, int n_max, Frame frame,
                            double saturation_warn_level = 0.1);

/// Maps the laser gain A and gain-saturation B parameters to (xi, beta, eta).
struct SlRates {
  double xi;
  double beta;
  double eta;
};
SlRates sl_params_from_AB(double A, double B);

/// Stable rescaled photon number <n>/N in the thermodynamic limit.
///
/// Derived from the adjoint master equation for <n> with the factorization
/// <a^dag2 a^2> -> <n>^2. Each jump with number shift s contributes
/// s * |amp(n)|^2 to d<n>/dt, so for the driven two-photon-loss model
///   d<n>/dt = xi (n+1) - gamma n - 2 eta n (n-1)
/// and for the Scully-Lamb model
///   d<n>/dt = (n+1) (sqrt(xi) - sqrt(beta)(n+1))^2 - gamma n.
/// Substituting n = N*nu with the model's N-scaling of the rates and letting
/// N -> infinity leaves
///   BTC:          dnu/dt = (xi - gamma) nu - 2 eta nu^2,
///   Scully-Lamb:  dnu/dt = nu [ (sqrt(xi) - sqrt(beta) nu)^2 - gamma ].
/// The nonzero fixed points are (xi - gamma)/(2 eta) and
/// (sqrt(xi) - sqrt(gamma))/sqrt(beta); both are stable above threshold
/// (xi > gamma) and absent below it, where nu = 0 is the attractor.
double semiclassical_fixed_point(const ModelSpec& model);

/// Fock cutoff heuristic: ceil(safety * N * fixed_point) + floor. Consumers
/// must still pass the steady-state tail check.
int suggest_cutoff(const ModelSpec& model, double safety = 4.0, int floor = 20);

}  // namespace liouspec
