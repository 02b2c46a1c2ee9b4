#include "kzlz/aia.hpp"

#include <cmath>
#include <stdexcept>

namespace kzlz {

AIAConfig AIAConfig::from_protocol(double delta, double v, double alpha) {
  if (!(delta > 0.0) || !(v > 0.0) || !(alpha > 0.0)) {
    throw std::invalid_argument("AIAConfig: delta, v, alpha must be > 0");
  }
  return {alpha, delta / v, 1.0 / delta};
}

double freeze_out_time(double delta, double v, double alpha) {
  if (!(v > 0.0)) throw std::invalid_argument("freeze_out_time: v must be > 0");
  if (!(alpha > 0.0)) throw std::invalid_argument("freeze_out_time: alpha must be > 0");
  (void)delta;  // tau_q * tau_0 = 1/v regardless of delta
  return 1.0 / std::sqrt(alpha * v);
}

Region classify(double t, double t_hat, Scheme scheme) {
  if (!(t_hat > 0.0)) throw std::invalid_argument("classify: t_hat must be > 0");
  if (scheme == Scheme::B) {
    if (t < 0.0) throw std::invalid_argument("classify: scheme B has no t < 0");
    return t <= t_hat ? Region::Impulse : Region::Adiabatic;
  }
  return std::abs(t) <= t_hat ? Region::Impulse : Region::Adiabatic;
}

namespace {

// x = v t_hat / delta; x^2 = tau_0 / (alpha tau_q).
double impulse_x_squared(double delta, double v, double alpha) {
  if (!(v > 0.0) || !(alpha > 0.0)) {
    throw std::invalid_argument("aia_p_plus: v and alpha must be > 0");
  }
  return v / (alpha * delta * delta);
}

double model_p_plus(double tau_ratio, double alpha, Scheme scheme) {
  const double x2 = 1.0 / (alpha * tau_ratio);
  if (scheme == Scheme::A) return x2 / (1.0 + x2);
  return 0.5 * (1.0 - 1.0 / std::sqrt(1.0 + x2));
}

}  // namespace

double aia_p_plus_scheme_b(double delta, double v, double alpha) {
  const double x2 = impulse_x_squared(delta, v, alpha);
  return 0.5 * (1.0 - 1.0 / std::sqrt(1.0 + x2));
}

double aia_p_plus_scheme_a(double delta, double v, double alpha) {
  const double x2 = impulse_x_squared(delta, v, alpha);
  return x2 / (1.0 + x2);
}

AlphaFit fit_alpha(const std::vector<AlphaSample>& samples, Scheme scheme) {
  if (samples.size() < 3) {
    throw std::invalid_argument("fit_alpha: need at least 3 samples");
  }
  bool spread = false;
  for (const auto& s : samples) {
    if (!(s.p_plus > 0.0) || !(s.p_plus < 0.5)) {
      throw std::invalid_argument("fit_alpha: P+ samples must lie in (0, 1/2)");
    }
    if (!(s.tau_ratio > 0.0)) {
      throw std::invalid_argument("fit_alpha: tau_q/tau_0 must be > 0");
    }
    if (s.tau_ratio != samples.front().tau_ratio || s.p_plus != samples.front().p_plus) {
      spread = true;
    }
  }
  if (!spread) {
    throw std::invalid_argument("fit_alpha: degenerate input, all samples identical");
  }

  auto rss = [&](double alpha) {
    double s = 0.0;
    for (const auto& smp : samples) {
      const double r = model_p_plus(smp.tau_ratio, alpha, scheme) - smp.p_plus;
      s += r * r;
    }
    return s;
  };

  // Golden-section search on [0.1, 10].
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.1, b = 10.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = rss(c), fd = rss(d);
  int iter = 0;
  const int max_iter = 200;
  while (b - a > 1e-10 && iter < max_iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = rss(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = rss(d);
    }
    ++iter;
  }
  if (b - a > 1e-10) {
    throw std::runtime_error("fit_alpha: no convergence after " +
                             std::to_string(max_iter) + " iterations, bracket [" +
                             std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  const double alpha = 0.5 * (a + b);
  const double best = rss(alpha);
  if (rss(0.1) - best < 1e-18 && rss(10.0) - best < 1e-18) {
    throw std::invalid_argument("fit_alpha: flat objective, fit is degenerate");
  }
  return {alpha, best, iter};
}

}  // namespace kzlz
