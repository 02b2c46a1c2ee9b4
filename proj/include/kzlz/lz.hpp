// Two-level Landau-Zener model: linear chirp protocols, instantaneous
// eigenbasis, P+ observable, asymptotic transition probability.
#pragma once

#include "kzlz/state.hpp"

namespace kzlz {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// All internal frequencies are angular (rad/ns); hbar = 1. Converters for the
// ordinary-frequency (MHz) convention used by config files.
inline double rad_per_ns_from_mhz(double f_mhz) { return kTwoPi * f_mhz * 1e-3; }
inline double mhz_from_rad_per_ns(double w) { return w / kTwoPi * 1e3; }

struct LZParams {
  double delta = 0.0;   // tunneling amplitude, rad/ns, > 0
  double eps_i = 0.0;   // diabatic-energy start, rad/ns
  double eps_f = 0.0;   // diabatic-energy end, rad/ns
  double t_lz = 0.0;    // chirp duration, ns, > 0

  double speed() const { return (eps_f - eps_i) / t_lz; }
  void validate() const;
};

enum class Scheme { A, B };
enum class Prep { GroundAtStart };

struct ChirpProtocol {
  LZParams params;
  Scheme scheme = Scheme::A;
  Prep prep = Prep::GroundAtStart;

  void validate() const;
  // Ground state of the instantaneous Hamiltonian at t = 0.
  PureState2 initial_state() const;
};

// Instantaneous eigenframe: mixing angle theta in [0, pi] with
// cos(theta) = eps/Omega, and gap Omega = sqrt(delta^2 + eps^2).
struct EigenFrame {
  double theta = 0.0;
  double omega = 0.0;
};

// eps(t) = eps_i + v t; rejects t outside [0, t_lz].
double epsilon_at(const LZParams& p, double t);

EigenFrame eigen_frame(double eps, double delta);

// |E-> = cos(theta/2)|0> + sin(theta/2)|1>.
PureState2 ground_state(const EigenFrame& frame);
// |E+> = -sin(theta/2)|0> + cos(theta/2)|1>.
PureState2 excited_state(const EigenFrame& frame);

// P+ = (1 - <sz> cos(theta) - <sx> sin(theta)) / 2.
double p_plus(const DensityMatrix2& rho, const EigenFrame& frame);
double p_minus(const DensityMatrix2& rho, const EigenFrame& frame);

// Asymptotic formula exp(-pi delta^2 / (2 v)); rejects v <= 0.
double lz_probability(double delta, double v);

// Chirped-drive mapping eps = -delta_omega, applied to both endpoints.
struct EpsilonEndpoints {
  double eps_i;
  double eps_f;
};
EpsilonEndpoints chirp_to_epsilon(double delta_omega_i, double delta_omega_f);

}  // namespace kzlz
