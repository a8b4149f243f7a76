#include "liouspec/fock.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "liouspec/errors.hpp"

namespace liouspec {

namespace {

void require_rate(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value))
    throw ParameterError(std::string(name) + " must be a finite nonnegative rate");
}

void require_cutoff(int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be >= 1");
}

}  // namespace

LadderJump make_ladder_jump(int shift, std::vector<std::complex<double>> amp,
                            std::string label) {
  if (amp.empty()) throw ParameterError("amplitude table must not be empty");
  const int n_max = static_cast<int>(amp.size()) - 1;
  if (std::abs(shift) > n_max)
    throw ParameterError("jump '" + label + "': |shift| exceeds n_max");
  for (int n = 0; n <= n_max; ++n) {
    if (!std::isfinite(amp[n].real()) || !std::isfinite(amp[n].imag()))
      throw ParameterError("jump '" + label + "': non-finite amplitude at n=" +
                           std::to_string(n));
    const int target = n + shift;
    if ((target < 0 || target > n_max) && amp[n] != std::complex<double>(0.0))
      throw ParameterError("jump '" + label + "': amplitude at n=" +
                           std::to_string(n) + " maps outside 0.." +
                           std::to_string(n_max));
  }
  return LadderJump{shift, std::move(amp), std::move(label)};
}

LadderJump make_annihilation(double gamma, int n_max) {
  require_rate(gamma, "gamma");
  require_cutoff(n_max);
  std::vector<std::complex<double>> amp(n_max + 1);
  for (int n = 0; n <= n_max; ++n) amp[n] = std::sqrt(gamma * n);
  return make_ladder_jump(-1, std::move(amp), "loss");
}

LadderJump make_two_photon_loss(double eta, int n_max) {
  require_rate(eta, "eta");
  require_cutoff(n_max);
  std::vector<std::complex<double>> amp(n_max + 1);
  for (int n = 0; n <= n_max; ++n) amp[n] = std::sqrt(eta * n * (n - 1.0));
  return make_ladder_jump(-2, std::move(amp), "two-photon-loss");
}

LadderJump make_incoherent_drive(double xi, int n_max) {
  require_rate(xi, "xi");
  require_cutoff(n_max);
  std::vector<std::complex<double>> amp(n_max + 1);
  for (int n = 0; n < n_max; ++n) amp[n] = std::sqrt(xi * (n + 1.0));
  amp[n_max] = 0.0;
  return make_ladder_jump(+1, std::move(amp), "drive");
}

LadderJump make_scully_lamb_gain(double xi, double beta, int n_max) {
  require_rate(xi, "xi");
  require_rate(beta, "beta");
  require_cutoff(n_max);
  std::vector<std::complex<double>> amp(n_max + 1);
  for (int n = 0; n < n_max; ++n)
    amp[n] = std::sqrt(n + 1.0) * (std::sqrt(xi) - std::sqrt(beta) * (n + 1.0));
  amp[n_max] = 0.0;
  return make_ladder_jump(+1, std::move(amp), "saturating-gain");
}

LadderJump make_scully_lamb_decoherence(double eta, int n_max) {
  require_rate(eta, "eta");
  require_cutoff(n_max);
  std::vector<std::complex<double>> amp(n_max + 1);
  for (int n = 0; n <= n_max; ++n) amp[n] = std::sqrt(eta) * (n + 1.0);
  return make_ladder_jump(0, std::move(amp), "number-decoherence");
}

DiagonalHamiltonian make_number_hamiltonian(double omega_c, int n_max) {
  if (!std::isfinite(omega_c)) throw ParameterError("omega_c must be finite");
  require_cutoff(n_max);
  std::vector<double> h(n_max + 1);
  for (int n = 0; n <= n_max; ++n) h[n] = omega_c * n;
  DiagonalHamiltonian out{std::move(h), true};
  return out;
}

DiagonalHamiltonian make_diagonal_hamiltonian(std::vector<double> h) {
  if (h.empty()) throw ParameterError("Hamiltonian diagonal must not be empty");
  double scale = 0.0;
  for (double v : h) {
    if (!std::isfinite(v)) throw ParameterError("non-finite Hamiltonian entry");
    scale = std::max(scale, std::abs(v));
  }
  const int n_max = static_cast<int>(h.size()) - 1;
  bool linear = h[0] == 0.0;
  if (n_max >= 1) {
    const double slope = h[1];
    for (int n = 2; n <= n_max && linear; ++n)
      linear = std::abs(h[n] - slope * n) <= 8.0 * 2.220446049250313e-16 * scale * n;
  }
  return DiagonalHamiltonian{std::move(h), linear};
}

}  // namespace liouspec
