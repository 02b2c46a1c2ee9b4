// Serialization: qubit states to JSON, trajectories and scans to CSV, fit
// reports to JSON. Output is deterministic and locale-independent.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "kzlz/fit.hpp"
#include "kzlz/ising.hpp"
#include "kzlz/lindblad.hpp"
#include "kzlz/state.hpp"

namespace kzlz {

const char* artifact_version();

nlohmann::json density_to_json(const DensityMatrix2& rho);
DensityMatrix2 density_from_json(const nlohmann::json& j);
nlohmann::json bloch_to_json(const BlochVector& b);
BlochVector bloch_from_json(const nlohmann::json& j);

// '#'-prefixed comment lines with the artifact version and the resolved
// configuration; every CSV writer starts with this.
void write_csv_preamble(std::ostream& out, const std::string& config_line);

// Columns: t_ns, rho00, rho11, re01, im01, sx, sy, sz, theta, p_plus, purity,
// t_over_t_hat, region. t is re-centered on the crossing for region
// classification; alpha sets the freeze-out time.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, double alpha,
                          const std::string& config_line);

struct SweepCell {
  double eps_f_mhz;
  double t_lz_ns;
  double sx;
  double sz;
  double p_plus;
};
void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells,
                     const std::string& config_line);

void write_scan_csv(std::ostream& out, const std::vector<ScalingPoint>& points,
                    const IsingQuenchSpec& spec, const DecoherenceParams& dec,
                    const std::string& config_line);

nlohmann::json fit_to_json(const ScalingFitResult& fit);

struct EdCheckRow {
  int n_spins;
  double tau_q;
  double kink_density_ed;
  double kink_density_modesum;
  double rel_diff;
};
void write_ed_csv(std::ostream& out, const std::vector<EdCheckRow>& rows,
                  const std::string& config_line);

// Reads two named columns from a CSV produced by write_scan_csv (or any CSV
// with a header row; '#' lines are skipped).
std::vector<std::pair<double, double>> read_csv_columns(std::istream& in,
                                                        const std::string& x_column,
                                                        const std::string& y_column);

}  // namespace kzlz
