#include "kzlz/ising.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "kzlz/parallel.hpp"

namespace kzlz {

void IsingQuenchSpec::validate() const {
  if (!(tau_q_i > 1.0 / kTwoPi)) {
    throw std::invalid_argument("IsingQuenchSpec: tau_q_i must exceed 1/2pi (slow quench)");
  }
  if (!(k_c > 0.0) || !(k_c < M_PI / 4.0)) {
    throw std::invalid_argument("IsingQuenchSpec: k_c must lie in (0, pi/4)");
  }
  if (n_k < 1) throw std::invalid_argument("IsingQuenchSpec: n_k must be >= 1");
  if (range_policy == RangePolicy::FixedRatio && !(eps_f_over_delta > 1.0)) {
    throw std::invalid_argument("IsingQuenchSpec: eps_f_over_delta must be > 1");
  }
  if (!(delta_ref > 0.0)) throw std::invalid_argument("IsingQuenchSpec: delta_ref must be > 0");
  if (eps_start_over_delta < 0.0 || eps_end_cap_over_delta < 0.0 ||
      eps_end_pad_over_delta < 0.0 || t_cap_ns < 0.0 || t_floor_ns < 0.0) {
    throw std::invalid_argument("IsingQuenchSpec: embedding refinements must be >= 0");
  }
  if (t_cap_ns > 0.0 && t_floor_ns > t_cap_ns) {
    throw std::invalid_argument("IsingQuenchSpec: t_floor_ns must not exceed t_cap_ns");
  }
}

double mode_rate(double k, double tau_q_i) {
  if (k == 0.0) throw std::invalid_argument("mode_rate: k = 0 has a divergent rate");
  const double s = std::sin(k);
  if (!(std::abs(k) < M_PI)) throw std::invalid_argument("mode_rate: |k| must be < pi");
  return 1.0 / (4.0 * tau_q_i * s * s);
}

std::vector<double> mode_grid(double k_c, int n_k) {
  if (n_k < 1) throw std::invalid_argument("mode_grid: n_k must be >= 1");
  std::vector<double> grid;
  grid.reserve(n_k);
  for (int m = 1; m <= n_k; ++m) {
    grid.push_back((2.0 * m - 1.0) * k_c / (2.0 * n_k));
  }
  return grid;
}

ModeProtocol mode_to_protocol(double k, const IsingQuenchSpec& spec) {
  const double chi = mode_rate(k, spec.tau_q_i);
  double ratio;
  if (spec.range_policy == RangePolicy::CotK) {
    if (k >= M_PI / 2.0) {
      throw std::invalid_argument("mode_to_protocol: CotK needs k < pi/2 for a positive endpoint");
    }
    ratio = std::cos(k) / std::sin(k);
  } else {
    ratio = spec.eps_f_over_delta;
  }

  double end = ratio;
  if (spec.eps_end_cap_over_delta > 0.0) end = std::min(end, spec.eps_end_cap_over_delta);
  end += spec.eps_end_pad_over_delta;
  const double start =
      spec.eps_start_over_delta > 0.0 ? -spec.eps_start_over_delta : -end;
  const double width = end - start;

  ModeProtocol mp;
  mp.chi = chi;
  mp.normalized.params = {1.0, start, end, width / chi};
  mp.normalized.scheme = Scheme::A;

  double d = spec.delta_ref;
  if (spec.t_cap_ns > 0.0 && width / (chi * d) > spec.t_cap_ns) {
    d = width / (chi * spec.t_cap_ns);  // raise the gap so the sweep fits
  }
  if (spec.t_floor_ns > 0.0 && width / (chi * d) < spec.t_floor_ns) {
    d = width / (chi * spec.t_floor_ns);  // lower the gap to the minimum pulse length
  }
  mp.physical.params = {d, start * d, end * d, width / (chi * d)};
  mp.physical.scheme = Scheme::A;
  return mp;
}

ScalingPoint defect_density(const IsingQuenchSpec& spec, const DecoherenceParams& dec,
                            unsigned threads) {
  spec.validate();
  dec.validate();
  const std::vector<double> grid = mode_grid(spec.k_c, spec.n_k);
  std::vector<double> p(grid.size());
  const StepPolicy policy = scan_step_policy();
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    const ModeProtocol mp = mode_to_protocol(grid[i], spec);
    const ChirpProtocol& proto = mp.physical;
    const DensityMatrix2 rho0 = proto.initial_state().to_density();
    p[i] = final_p_plus(proto, rho0, dec, policy);
  });
  double sum = 0.0;
  for (double v : p) sum += v;  // fixed ascending-k order
  const double n = spec.k_c / M_PI * (sum / static_cast<double>(spec.n_k));
  return {spec.tau_q_i, 1.0 / std::sqrt(spec.tau_q_i), n};
}

std::vector<ScalingPoint> scaling_scan(const std::vector<double>& tau_q_list,
                                       const IsingQuenchSpec& spec_template,
                                       const DecoherenceParams& dec,
                                       unsigned threads) {
  if (tau_q_list.size() < 4) {
    throw std::invalid_argument("scaling_scan: need at least 4 quench times");
  }
  dec.validate();
  std::vector<IsingQuenchSpec> specs;
  specs.reserve(tau_q_list.size());
  for (double tau : tau_q_list) {
    IsingQuenchSpec s = spec_template;
    s.tau_q_i = tau;
    s.validate();
    specs.push_back(s);
  }

  const std::size_t n_k = static_cast<std::size_t>(spec_template.n_k);
  const std::size_t n_tau = specs.size();
  std::vector<double> p(n_tau * n_k);
  const StepPolicy policy = scan_step_policy();
  parallel_for(n_tau * n_k, threads, [&](std::size_t idx) {
    const std::size_t it = idx / n_k;
    const std::size_t ik = idx % n_k;
    const std::vector<double> grid = mode_grid(specs[it].k_c, specs[it].n_k);
    const ModeProtocol mp = mode_to_protocol(grid[ik], specs[it]);
    const DensityMatrix2 rho0 = mp.physical.initial_state().to_density();
    p[idx] = final_p_plus(mp.physical, rho0, dec, policy);
  });

  std::vector<ScalingPoint> out;
  out.reserve(n_tau);
  for (std::size_t it = 0; it < n_tau; ++it) {
    double sum = 0.0;
    for (std::size_t ik = 0; ik < n_k; ++ik) sum += p[it * n_k + ik];
    const double tau = specs[it].tau_q_i;
    out.push_back({tau, 1.0 / std::sqrt(tau),
                   specs[it].k_c / M_PI * (sum / static_cast<double>(n_k))});
  }
  return out;
}

double finite_size_min_rate(int n_spins) {
  if (n_spins < 2) throw std::invalid_argument("finite_size_min_rate: n_spins must be >= 2");
  return kTwoPi / static_cast<double>(n_spins);
}

}  // namespace kzlz
