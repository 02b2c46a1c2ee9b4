// Run configuration: experiment presets, config-file parsing (TOML subset or
// JSON), and key=value overrides.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "kzlz/aia.hpp"
#include "kzlz/ising.hpp"
#include "kzlz/lindblad.hpp"
#include "kzlz/lz.hpp"

namespace kzlz {

// Qubit coherence times from the two samples.
inline constexpr double kQ1T1Ns = 113.0;
inline constexpr double kQ1T2Ns = 93.0;
inline constexpr double kQ2T1Ns = 2386.0;
inline constexpr double kQ2T2Ns = 2135.0;

struct RunConfig {
  // Single-protocol parameters (ordinary frequencies, MHz).
  double delta_mhz = 20.0;
  double eps_i_mhz = -200.0;
  double eps_f_mhz = 200.0;
  double t_lz_ns = 20.0;
  Scheme scheme = Scheme::A;
  double alpha = 0.0;  // 0 = per-scheme default (pi/2 for A, pi/4 for B)

  // Decoherence: none | q1 | q2 | custom (t1_ns / t2_ns).
  std::string dec = "none";
  double t1_ns = 0.0;
  double t2_ns = 0.0;

  double sample_every_ns = 0.1;

  // Sweep grid (Fig.-2-style map).
  double sweep_eps_f_min_mhz = -200.0;
  double sweep_eps_f_max_mhz = 400.0;
  double sweep_eps_f_step_mhz = 10.0;
  double sweep_t_lz_min_ns = 1.0;
  double sweep_t_lz_max_ns = 120.0;
  double sweep_t_lz_step_ns = 1.0;

  // Region-plot chirp durations.
  std::vector<double> regions_t_lz_ns = {10.0, 20.0, 40.0, 80.0};

  // Defect-density scan.
  double inv_sqrt_tau_min = 0.02;
  double inv_sqrt_tau_max = 0.10;
  double inv_sqrt_tau_step = 0.01;
  double k_c_over_pi = 0.2;
  int n_k = 127;
  std::string range_policy = "fixed";  // fixed | cotk
  double eps_f_over_delta = 10.0;
  double delta_ref_mhz = 20.0;
  // Control-window realization of the scan (see IsingQuenchSpec).
  double eps_start_over_delta = 0.0;
  double eps_end_cap_over_delta = 0.0;
  double eps_end_pad_over_delta = 0.0;
  double t_cap_ns = 0.0;
  double t_floor_ns = 0.0;
  int n_spins_bound = 1000;  // finite-size warning threshold

  // ED cross-check.
  int ed_n_spins = 8;
  std::vector<double> ed_tau_q = {1.0, 2.0, 4.0, 8.0};

  unsigned threads = 1;

  LZParams lz_params() const;
  ChirpProtocol protocol() const;
  DecoherenceParams decoherence() const;
  double resolved_alpha() const;
  IsingQuenchSpec quench_spec(double tau_q_i) const;
  std::vector<double> scan_tau_list() const;

  // One-line key=value rendering, embedded in output headers.
  std::string describe() const;
};

// Named presets: scheme-a-map, scheme-b-regions, freezeout, kzm-scan,
// kzm-scan-ideal, kzm-scan-sample1, kzm-scan-sample2, ed-check.
RunConfig preset_config(const std::string& name);

// Applies a single key=value override; throws std::invalid_argument naming the
// field on unknown keys or malformed values.
void apply_override(RunConfig& config, const std::string& key, const std::string& value);

// Flat key = value file. Files ending in .json are parsed as a JSON object;
// anything else as a TOML subset (comments, bare/quoted scalars, arrays).
std::map<std::string, std::string> parse_config_file(const std::string& path);

void apply_file(RunConfig& config, const std::string& path);

// Protocol files: {delta_mhz, eps_i_mhz, eps_f_mhz, t_lz_ns, scheme}.
ChirpProtocol load_protocol_file(const std::string& path);

}  // namespace kzlz
