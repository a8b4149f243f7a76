#include "liouspec/model.hpp"

#include <cmath>

#include "liouspec/errors.hpp"

namespace liouspec {

void validate_model(const ModelSpec& model) {
  if (model.n_max < 1) throw ParameterError("model n_max must be >= 1");
  if (model.scale_N < 1) throw ParameterError("model N must be >= 1");
  if (model.h.n_max() != model.n_max)
    throw ParameterError("Hamiltonian table size does not match n_max");
  for (const auto& jump : model.jumps)
    if (jump.n_max() != model.n_max)
      throw ParameterError("jump '" + jump.label + "' table size does not match n_max");
  if (model.frame == Frame::rotating)
    for (double v : model.h.h)
      if (v != 0.0)
        throw ParameterError("rotating-frame model must have zero Hamiltonian");
}

namespace {

DiagonalHamiltonian frame_hamiltonian(double omega_c, int n_max, Frame frame) {
  return frame == Frame::rotating ? make_number_hamiltonian(0.0, n_max)
                                  : make_number_hamiltonian(omega_c, n_max);
}

}  // namespace

ModelSpec build_btc_model(double gamma, double xi, double eta, double omega_c,
                          int N, int n_max, Frame frame) {
  if (!(gamma > 0.0)) throw ParameterError("gamma must be > 0");
  if (xi < 0.0) throw ParameterError("xi must be >= 0");
  if (eta < 0.0) throw ParameterError("eta must be >= 0");
  if (N < 1) throw ParameterError("N must be >= 1");

  ModelSpec model;
  model.name = "btc";
  model.n_max = n_max;
  model.base = BaseRates{gamma, xi, eta, 0.0, omega_c};
  model.scale_N = N;
  model.frame = frame;
  model.h = frame_hamiltonian(omega_c, n_max, frame);
  model.jumps.push_back(make_annihilation(gamma, n_max));
  model.jumps.push_back(make_two_photon_loss(eta / N, n_max));
  model.jumps.push_back(make_incoherent_drive(xi, n_max));
  if (eta == 0.0 && xi >= gamma)
    model.warnings.push_back(
        "eta=0 with xi >= gamma: no nonlinearity saturates the drive, "
        "the steady state is truncation-dominated");
  validate_model(model);
  return model;
}

ModelSpec build_scully_lamb(double gamma, double xi, double eta, double beta,
                            double omega_c, int N, int n_max, Frame frame,
                            double saturation_warn_level) {
  if (!(gamma > 0.0)) throw ParameterError("gamma must be > 0");
  if (xi < 0.0) throw ParameterError("xi must be >= 0");
  if (eta < 0.0) throw ParameterError("eta must be >= 0");
  if (!(beta > 0.0)) throw ParameterError("beta must be > 0");
  if (N < 1) throw ParameterError("N must be >= 1");

  const double beta_scaled = beta / (double(N) * double(N));
  ModelSpec model;
  model.name = "scully-lamb";
  model.n_max = n_max;
  model.base = BaseRates{gamma, xi, eta, beta, omega_c};
  model.scale_N = N;
  model.frame = frame;
  model.h = frame_hamiltonian(omega_c, n_max, frame);
  model.jumps.push_back(make_scully_lamb_gain(xi, beta_scaled, n_max));
  model.jumps.push_back(make_scully_lamb_decoherence(eta / N, n_max));
  model.jumps.push_back(make_annihilation(gamma, n_max));
  if (xi > 0.0 && std::sqrt(beta_scaled / xi) > saturation_warn_level)
    model.warnings.push_back(
        "sqrt(beta/xi) above the weak gain-saturation level; the "
        "fourth-order field approximation may be unreliable");
  validate_model(model);
  return model;
}

SlRates sl_params_from_AB(double A, double B) {
  if (!(A > 0.0)) throw ParameterError("laser gain A must be > 0");
  if (B < 0.0) throw ParameterError("gain saturation B must be >= 0");
  return SlRates{A, B * B / (4.0 * A), 3.0 * B / 4.0};
}

double semiclassical_fixed_point(const ModelSpec& model) {
  const BaseRates& r = model.base;
  if (model.name == "btc") {
    if (r.xi <= r.gamma || r.eta <= 0.0) return 0.0;
    return (r.xi - r.gamma) / (2.0 * r.eta);
  }
  if (model.name == "scully-lamb") {
    if (r.xi <= r.gamma) return 0.0;
    return (std::sqrt(r.xi) - std::sqrt(r.gamma)) / std::sqrt(r.beta);
  }
  throw ParameterError("semiclassical fixed point defined only for the btc "
                       "and scully-lamb models, got '" + model.name + "'");
}

int suggest_cutoff(const ModelSpec& model, double safety, int floor) {
  const double nu = semiclassical_fixed_point(model);
  return static_cast<int>(std::ceil(safety * model.scale_N * nu)) + floor;
}

}  // namespace liouspec
