// Adiabatic-impulse analytics: freeze-out time, region classification,
// closed-form P+ for both chirp schemes, and the alpha fit.
#pragma once

#include <vector>

#include "kzlz/lz.hpp"

namespace kzlz {

// Default alpha per scheme.
inline constexpr double kAlphaSchemeA = 1.5707963267948966;  // pi/2
inline constexpr double kAlphaSchemeB = 0.7853981633974483;  // pi/4

struct AIAConfig {
  double alpha;
  double tau_q;  // Delta / v
  double tau_0;  // 1 / Delta

  static AIAConfig from_protocol(double delta, double v, double alpha);
};

enum class Region { Adiabatic, Impulse };

// t_hat = sqrt(tau_q * tau_0 / alpha) = 1 / sqrt(alpha v); independent of delta.
double freeze_out_time(double delta, double v, double alpha);

// t is measured relative to the crossing. Scheme A: impulse iff |t| <= t_hat;
// scheme B: impulse iff 0 <= t <= t_hat (t < 0 rejected).
Region classify(double t, double t_hat, Scheme scheme);

// Frozen at |E-(0)> until t_hat, then projected on the instantaneous basis:
// P+ = (1 - 1/sqrt(1 + x^2)) / 2 with x = v t_hat / delta.
double aia_p_plus_scheme_b(double delta, double v, double alpha);

// Frozen across [-t_hat, t_hat], then projected: P+ = x^2 / (1 + x^2).
double aia_p_plus_scheme_a(double delta, double v, double alpha);

struct AlphaSample {
  double tau_ratio;  // tau_q / tau_0
  double p_plus;     // measured excitation, in (0, 1/2)
};

struct AlphaFit {
  double alpha;
  double rss;  // summed squared residuals at the minimizer
  int iterations;
};

// Unweighted least squares over alpha in [0.1, 10] via golden-section search.
// Rejects < 3 samples, samples outside (0, 1/2), and a flat (degenerate)
// objective.
AlphaFit fit_alpha(const std::vector<AlphaSample>& samples, Scheme scheme);

}  // namespace kzlz
