// Fixed-step RK4 integration of the two-level master equation with energy
// relaxation Gamma1 and total coherence decay gamma, for linear chirps.
#pragma once

#include <vector>

#include "kzlz/lz.hpp"
#include "kzlz/state.hpp"

namespace kzlz {

struct DecoherenceParams {
  double gamma1 = 0.0;           // Gamma_1 = 1/T1, 1/ns
  double gamma_phi_total = 0.0;  // gamma = 1/T2*, 1/ns

  void validate() const;
  bool is_zero() const { return gamma1 == 0.0 && gamma_phi_total == 0.0; }

  static DecoherenceParams none() { return {}; }
  static DecoherenceParams from_times(double t1_ns, double t2_star_ns) {
    return {1.0 / t1_ns, 1.0 / t2_star_ns};
  }
};

// h = min(t_lz * max_fraction, phase_per_step / Omega_max), with Omega_max the
// largest instantaneous gap along the sweep.
struct StepPolicy {
  double max_fraction = 1.0 / 4000.0;
  double phase_per_step = 0.002;

  double step_size(const LZParams& p) const;
  StepPolicy halved() const { return {max_fraction * 0.5, phase_per_step * 0.5}; }
};

// Loose policy for long quasi-adiabatic sweeps (mode scans): ~100 steps per
// oscillation period instead of ~3000.
inline StepPolicy scan_step_policy() { return {1.0 / 4000.0, 0.0628}; }

struct Deriv {
  double d00;
  double d11;
  complexd d01;
};

// All four lines of the master equation; trace of the derivative is exactly 0.
Deriv rhs(const DensityMatrix2& rho, double eps, double delta,
          const DecoherenceParams& dec);

struct TrajectorySample {
  double t;  // ns
  DensityMatrix2 rho;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  ChirpProtocol protocol;
  DecoherenceParams decoherence;
};

Trajectory integrate(const ChirpProtocol& protocol, const DensityMatrix2& rho0,
                     const DecoherenceParams& dec, double sample_every,
                     const StepPolicy& policy = {});

// Endpoint-only integration (same stepping, no sample storage).
DensityMatrix2 evolve_final(const ChirpProtocol& protocol, const DensityMatrix2& rho0,
                            const DecoherenceParams& dec, const StepPolicy& policy = {});

// Integration with an explicit step count; used by convergence checks.
DensityMatrix2 evolve_fixed_steps(const ChirpProtocol& protocol, const DensityMatrix2& rho0,
                                  const DecoherenceParams& dec, long n_steps);

// P+ of the final state in the eigenframe at eps_f.
double final_p_plus(const ChirpProtocol& protocol, const DensityMatrix2& rho0,
                    const DecoherenceParams& dec, const StepPolicy& policy = {});

}  // namespace kzlz
