#include "kzlz/lz.hpp"

#include <cmath>

namespace kzlz {

void LZParams::validate() const {
  // delta = 0 is admitted for the coupling-free decay limits.
  if (!(delta >= 0.0)) throw std::invalid_argument("LZParams: delta must be >= 0");
  if (!(t_lz > 0.0)) throw std::invalid_argument("LZParams: t_lz must be > 0");
  if (!std::isfinite(speed())) throw std::invalid_argument("LZParams: sweep speed not finite");
}

void ChirpProtocol::validate() const {
  params.validate();
  if (scheme == Scheme::B && params.eps_i != 0.0) {
    throw std::invalid_argument("ChirpProtocol: scheme B requires eps_i = 0");
  }
  if (scheme == Scheme::A && !(params.eps_i < -params.delta)) {
    throw std::invalid_argument(
        "ChirpProtocol: scheme A requires eps_i < -delta (start far from the crossing)");
  }
}

PureState2 ChirpProtocol::initial_state() const {
  return ground_state(eigen_frame(params.eps_i, params.delta));
}

double epsilon_at(const LZParams& p, double t) {
  if (t < 0.0 || t > p.t_lz) {
    throw std::invalid_argument("epsilon_at: t outside [0, t_lz]");
  }
  return p.eps_i + p.speed() * t;
}

EigenFrame eigen_frame(double eps, double delta) {
  // atan2 keeps theta in (0, pi) with sin(theta) > 0, covering eps < 0 without
  // sign ambiguity.
  return {std::atan2(delta, eps), std::hypot(delta, eps)};
}

PureState2 ground_state(const EigenFrame& frame) {
  return PureState2(std::cos(0.5 * frame.theta), std::sin(0.5 * frame.theta));
}

PureState2 excited_state(const EigenFrame& frame) {
  return PureState2(-std::sin(0.5 * frame.theta), std::cos(0.5 * frame.theta));
}

double p_plus(const DensityMatrix2& rho, const EigenFrame& frame) {
  const BlochVector b = bloch_from_density(rho);
  return 0.5 * (1.0 - b.sz * std::cos(frame.theta) - b.sx * std::sin(frame.theta));
}

double p_minus(const DensityMatrix2& rho, const EigenFrame& frame) {
  const BlochVector b = bloch_from_density(rho);
  return 0.5 * (1.0 + b.sz * std::cos(frame.theta) + b.sx * std::sin(frame.theta));
}

double lz_probability(double delta, double v) {
  if (!(v > 0.0)) throw std::invalid_argument("lz_probability: v must be > 0");
  return std::exp(-M_PI * delta * delta / (2.0 * v));
}

EpsilonEndpoints chirp_to_epsilon(double delta_omega_i, double delta_omega_f) {
  return {-delta_omega_i, -delta_omega_f};
}

}  // namespace kzlz
