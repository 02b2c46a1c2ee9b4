// Ising <-> Landau-Zener dictionary: mode rates, mode-to-protocol mapping,
// defect-density aggregation, scaling scans, finite-size bound.
#pragma once

#include <vector>

#include "kzlz/lindblad.hpp"
#include "kzlz/lz.hpp"

namespace kzlz {

enum class RangePolicy { FixedRatio, CotK };

struct IsingQuenchSpec {
  double tau_q_i = 0.0;                  // dimensionless quench time, > 0
  double k_c = 0.2 * M_PI;               // momentum cutoff, rad
  int n_k = 127;                         // modes on the positive half-grid
  RangePolicy range_policy = RangePolicy::FixedRatio;
  double eps_f_over_delta = 10.0;        // sweep endpoint for FixedRatio
  double delta_ref = kTwoPi * 0.02;      // rad/ns, physical embedding gap

  // Physical-embedding refinements. The defaults reproduce the plain
  // symmetric, uncapped realization; the scan presets override them to model
  // the finite control window of the hardware.
  double eps_start_over_delta = 0.0;     // > 0: eps_i = -value * delta; 0: symmetric -eps_f
  double eps_end_cap_over_delta = 0.0;   // > 0: end = min(policy end, value)
  double eps_end_pad_over_delta = 0.0;   // added past the (capped) policy end
  double t_cap_ns = 0.0;                 // > 0: gap-boosted so the sweep fits in this window
  double t_floor_ns = 0.0;               // > 0: gap-lowered so the sweep lasts at least this long

  void validate() const;
};

// chi_k = 1 / (4 tau_q_i sin^2 k); rejects k = 0.
double mode_rate(double k, double tau_q_i);

// Positive midpoint grid k_m = (2m - 1) k_c / (2 n_k), m = 1..n_k. Averaging
// over it equals averaging over the symmetric set (chi_{-k} = chi_k), and 0 is
// never a grid point.
std::vector<double> mode_grid(double k_c, int n_k);

// The normalized LZ problem of mode k (delta = 1, v = chi_k, sweep from
// -eps_start to the range-policy endpoint) and its physical realization
// rescaled by the embedding gap, so decoherence rates in 1/ns apply
// meaningfully. When the natural duration exceeds t_cap_ns the gap is raised
// above delta_ref so the same normalized sweep fits the control window.
struct ModeProtocol {
  ChirpProtocol normalized;
  ChirpProtocol physical;
  double chi;  // normalized sweep rate
};
ModeProtocol mode_to_protocol(double k, const IsingQuenchSpec& spec);

struct ScalingPoint {
  double tau_q_i;
  double inv_sqrt_tau;  // 1 / sqrt(tau_q_i)
  double n_defects;     // in [0, k_c/pi]
};

// N = (k_c/pi) * mean_k P+(k); every grid mode is integrated with a
// ground-state start (scheme A). Deterministic; the reduction runs in
// ascending-k order regardless of scheduling.
ScalingPoint defect_density(const IsingQuenchSpec& spec, const DecoherenceParams& dec,
                            unsigned threads = 1);

// One ScalingPoint per quench time; (tau, k) tasks run as a parallel map with
// an order-deterministic reduction. Rejects < 4 quench times.
std::vector<ScalingPoint> scaling_scan(const std::vector<double>& tau_q_list,
                                       const IsingQuenchSpec& spec_template,
                                       const DecoherenceParams& dec,
                                       unsigned threads = 1);

// Minimal 1/sqrt(tau_q_i) compatible with the finite-size energy splitting:
// 2 pi / n_spins.
double finite_size_min_rate(int n_spins);

}  // namespace kzlz
