#include "kzlz/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kzlz {

void DecoherenceParams::validate() const {
  if (gamma1 < 0.0) throw std::invalid_argument("DecoherenceParams: gamma1 < 0");
  if (gamma_phi_total < 0.5 * gamma1 - 1e-12) {
    throw std::invalid_argument("DecoherenceParams: gamma < gamma1/2 is unphysical");
  }
}

double StepPolicy::step_size(const LZParams& p) const {
  const double eps_max = std::max(std::abs(p.eps_i), std::abs(p.eps_f));
  const double omega_max = std::hypot(p.delta, eps_max);
  return std::min(p.t_lz * max_fraction, phase_per_step / omega_max);
}

Deriv rhs(const DensityMatrix2& rho, double eps, double delta,
          const DecoherenceParams& dec) {
  const double p0 = rho.rho00();
  const double p1 = rho.rho11();
  const double re = rho.rho01().real();
  const double im = rho.rho01().imag();
  const double d00 = delta * im + dec.gamma1 * p1;
  const double dre = -eps * im - dec.gamma_phi_total * re;
  const double dim = 0.5 * delta * (p1 - p0) + eps * re - dec.gamma_phi_total * im;
  return {d00, -d00, complexd(dre, dim)};
}

namespace {

struct RawState {
  double p0, p1, re, im;
};

// One RK4 step of the four real degrees of freedom. eps0/epsm/eps1 are the
// drive at t, t + h/2, t + h.
inline RawState rk4_step(const RawState& y, double h, double delta, double eps0,
                         double epsm, double eps1, double g1, double gp) {
  auto f = [delta, g1, gp](const RawState& s, double eps, RawState& d) {
    d.p0 = delta * s.im + g1 * s.p1;
    d.p1 = -d.p0;
    d.re = -eps * s.im - gp * s.re;
    d.im = 0.5 * delta * (s.p1 - s.p0) + eps * s.re - gp * s.im;
  };
  RawState k1, k2, k3, k4, tmp;
  f(y, eps0, k1);
  tmp = {y.p0 + 0.5 * h * k1.p0, y.p1 + 0.5 * h * k1.p1, y.re + 0.5 * h * k1.re,
         y.im + 0.5 * h * k1.im};
  f(tmp, epsm, k2);
  tmp = {y.p0 + 0.5 * h * k2.p0, y.p1 + 0.5 * h * k2.p1, y.re + 0.5 * h * k2.re,
         y.im + 0.5 * h * k2.im};
  f(tmp, epsm, k3);
  tmp = {y.p0 + h * k3.p0, y.p1 + h * k3.p1, y.re + h * k3.re, y.im + h * k3.im};
  f(tmp, eps1, k4);
  const double c = h / 6.0;
  return {y.p0 + c * (k1.p0 + 2.0 * (k2.p0 + k3.p0) + k4.p0),
          y.p1 + c * (k1.p1 + 2.0 * (k2.p1 + k3.p1) + k4.p1),
          y.re + c * (k1.re + 2.0 * (k2.re + k3.re) + k4.re),
          y.im + c * (k1.im + 2.0 * (k2.im + k3.im) + k4.im)};
}

long step_count(const ChirpProtocol& protocol, const StepPolicy& policy) {
  const double t_lz = protocol.params.t_lz;
  const double h = policy.step_size(protocol.params);
  if (!(h > 0.0) || t_lz + h == t_lz) {
    throw std::invalid_argument(
        "integrate: step size underflow, t_lz = " + std::to_string(t_lz) +
        " ns cannot be resolved at the requested step " + std::to_string(h) + " ns");
  }
  const double n = std::ceil(t_lz / h);
  if (n > 4e9) {
    throw std::invalid_argument("integrate: step count " + std::to_string(n) +
                                " exceeds supported range");
  }
  return std::max(1L, static_cast<long>(n));
}

DensityMatrix2 to_density(const RawState& y) {
  return DensityMatrix2(y.p0, y.p1, complexd(y.re, y.im));
}

template <typename SampleFn>
DensityMatrix2 run(const ChirpProtocol& protocol, const DensityMatrix2& rho0,
                   const DecoherenceParams& dec, long n_steps, SampleFn&& on_sample) {
  protocol.validate();
  dec.validate();
  const LZParams& p = protocol.params;
  const double h = p.t_lz / static_cast<double>(n_steps);
  const double v = p.speed();
  RawState y{rho0.rho00(), rho0.rho11(), rho0.rho01().real(), rho0.rho01().imag()};
  on_sample(0.0, y.p0, y.p1, y.re, y.im);
  for (long i = 0; i < n_steps; ++i) {
    const double t = static_cast<double>(i) * h;
    const double e0 = p.eps_i + v * t;
    const double em = p.eps_i + v * (t + 0.5 * h);
    const double e1 = p.eps_i + v * (t + h);
    y = rk4_step(y, h, p.delta, e0, em, e1, dec.gamma1, dec.gamma_phi_total);
    on_sample(static_cast<double>(i + 1) * h, y.p0, y.p1, y.re, y.im);
  }
  return to_density(y);
}

}  // namespace

Trajectory integrate(const ChirpProtocol& protocol, const DensityMatrix2& rho0,
                     const DecoherenceParams& dec, double sample_every,
                     const StepPolicy& policy) {
  if (!(sample_every > 0.0)) {
    throw std::invalid_argument("integrate: sample_every must be > 0");
  }
  const long n_steps = step_count(protocol, policy);
  Trajectory traj;
  traj.protocol = protocol;
  traj.decoherence = dec;
  long next_bucket = 0;
  const double t_lz = protocol.params.t_lz;
  run(protocol, rho0, dec, n_steps,
      [&](double t, double p0, double p1, double re, double im) {
        const bool last = t == t_lz;
        if (t >= static_cast<double>(next_bucket) * sample_every || last) {
          traj.samples.push_back({t, DensityMatrix2(p0, p1, complexd(re, im))});
          next_bucket = static_cast<long>(std::floor(t / sample_every)) + 1;
        }
      });
  return traj;
}

DensityMatrix2 evolve_final(const ChirpProtocol& protocol, const DensityMatrix2& rho0,
                            const DecoherenceParams& dec, const StepPolicy& policy) {
  return run(protocol, rho0, dec, step_count(protocol, policy),
             [](double, double, double, double, double) {});
}

DensityMatrix2 evolve_fixed_steps(const ChirpProtocol& protocol, const DensityMatrix2& rho0,
                                  const DecoherenceParams& dec, long n_steps) {
  if (n_steps < 1) throw std::invalid_argument("evolve_fixed_steps: n_steps < 1");
  return run(protocol, rho0, dec, n_steps, [](double, double, double, double, double) {});
}

double final_p_plus(const ChirpProtocol& protocol, const DensityMatrix2& rho0,
                    const DecoherenceParams& dec, const StepPolicy& policy) {
  const DensityMatrix2 rho = evolve_final(protocol, rho0, dec, policy);
  return p_plus(rho, eigen_frame(protocol.params.eps_f, protocol.params.delta));
}

}  // namespace kzlz
