// Command-line driver: chirp trajectories, parameter sweeps, defect-density
// scans, scaling fits, and the small-chain cross-check.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kzlz/aia.hpp"
#include "kzlz/config.hpp"
#include "kzlz/ed.hpp"
#include "kzlz/fit.hpp"
#include "kzlz/io.hpp"
#include "kzlz/ising.hpp"
#include "kzlz/lindblad.hpp"
#include "kzlz/lz.hpp"
#include "kzlz/parallel.hpp"

namespace {

using namespace kzlz;

constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

struct CommonOpts {
  std::string config_file;
  std::string preset;
  std::vector<std::string> overrides;
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const std::string& default_output) {
  cmd->add_option("-c,--config", opts.config_file, "Config file (TOML subset or JSON)");
  cmd->add_option("-p,--preset", opts.preset, "Named experiment preset");
  cmd->add_option("-s,--set", opts.overrides, "Override as key=value (repeatable)");
  opts.output = default_output;
  cmd->add_option("-o,--output", opts.output, "Output file")->capture_default_str();
}

RunConfig resolve_config(const CommonOpts& opts, const std::string& default_preset) {
  RunConfig c = preset_config(opts.preset.empty() ? default_preset : opts.preset);
  if (!opts.config_file.empty()) apply_file(c, opts.config_file);
  for (const auto& kv : opts.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
    }
    apply_override(c, kv.substr(0, eq), kv.substr(eq + 1));
  }
  return c;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

void cmd_lz_run(const RunConfig& config, const std::string& protocol_file,
                const std::string& output) {
  ChirpProtocol protocol =
      protocol_file.empty() ? config.protocol() : load_protocol_file(protocol_file);
  const DensityMatrix2 rho0 = protocol.initial_state().to_density();
  const Trajectory traj =
      integrate(protocol, rho0, config.decoherence(), config.sample_every_ns);
  auto out = open_output(output);
  write_trajectory_csv(out, traj, config.resolved_alpha(), config.describe());
  std::cerr << "wrote " << traj.samples.size() << " samples to " << output << "\n";
}

void cmd_sweep(const RunConfig& config, const std::string& output) {
  std::vector<SweepCell> cells;
  for (double eps_f = config.sweep_eps_f_min_mhz;
       eps_f <= config.sweep_eps_f_max_mhz + 1e-9; eps_f += config.sweep_eps_f_step_mhz) {
    for (double t_lz = config.sweep_t_lz_min_ns; t_lz <= config.sweep_t_lz_max_ns + 1e-9;
         t_lz += config.sweep_t_lz_step_ns) {
      cells.push_back({eps_f, t_lz, 0.0, 0.0, 0.0});
    }
  }
  const DecoherenceParams dec = config.decoherence();
  parallel_for(cells.size(), config.threads, [&](std::size_t i) {
    RunConfig cell_config = config;
    cell_config.eps_f_mhz = cells[i].eps_f_mhz;
    cell_config.t_lz_ns = cells[i].t_lz_ns;
    const ChirpProtocol protocol = cell_config.protocol();
    const DensityMatrix2 rho0 = protocol.initial_state().to_density();
    const DensityMatrix2 rho = evolve_final(protocol, rho0, dec);
    const BlochVector b = bloch_from_density(rho);
    cells[i].sx = b.sx;
    cells[i].sz = b.sz;
    cells[i].p_plus = p_plus(rho, eigen_frame(protocol.params.eps_f, protocol.params.delta));
  });
  auto out = open_output(output);
  write_sweep_csv(out, cells, config.describe());
  std::cerr << "wrote " << cells.size() << " cells to " << output << "\n";
}

void cmd_regions(const RunConfig& config, const std::string& output) {
  auto out = open_output(output);
  write_csv_preamble(out, config.describe());
  out << "t_lz_ns,t_ns,t_over_t_hat,p_plus,region\n";
  const DecoherenceParams dec = config.decoherence();
  for (double t_lz : config.regions_t_lz_ns) {
    RunConfig run = config;
    run.t_lz_ns = t_lz;
    const ChirpProtocol protocol = run.protocol();
    const DensityMatrix2 rho0 = protocol.initial_state().to_density();
    const Trajectory traj = integrate(protocol, rho0, dec, run.sample_every_ns);
    const double v = protocol.params.speed();
    const double t_hat = freeze_out_time(protocol.params.delta, v, run.resolved_alpha());
    const double t_cross = -protocol.params.eps_i / v;
    for (const auto& s : traj.samples) {
      const EigenFrame frame = eigen_frame(epsilon_at(protocol.params, s.t), protocol.params.delta);
      const double t_rel = s.t - t_cross;
      const Region r = classify(t_rel, t_hat, protocol.scheme);
      std::ostringstream row;
      row.precision(17);
      row << t_lz << ',' << s.t << ',' << t_rel / t_hat << ',' << p_plus(s.rho, frame)
          << ',' << (r == Region::Impulse ? "impulse" : "adiabatic") << '\n';
      out << row.str();
    }
  }
  std::cerr << "wrote region trajectories to " << output << "\n";
}

void cmd_kzm_scan(const RunConfig& config, const std::string& output,
                  const std::string& fit_output) {
  const std::vector<double> taus = config.scan_tau_list();
  const IsingQuenchSpec spec = config.quench_spec(taus.front());
  const DecoherenceParams dec = config.decoherence();

  const double min_rate = finite_size_min_rate(config.n_spins_bound);
  for (double tau : taus) {
    if (1.0 / std::sqrt(tau) <= min_rate) {
      std::cerr << "warning [finite-size]: 1/sqrt(tau_q_i) = " << 1.0 / std::sqrt(tau)
                << " violates the bound 2*pi/N = " << min_rate << " for N = "
                << config.n_spins_bound << "\n";
    }
  }

  const std::vector<ScalingPoint> points = scaling_scan(taus, spec, dec, config.threads);
  auto out = open_output(output);
  write_scan_csv(out, points, spec, dec, config.describe());

  std::vector<std::pair<double, double>> xy;
  for (const auto& p : points) xy.emplace_back(p.inv_sqrt_tau, p.n_defects);
  const ScalingFitResult fit = linear_fit(xy);
  nlohmann::json j = fit_to_json(fit);
  j["version"] = artifact_version();
  j["config"] = config.describe();
  auto fout = open_output(fit_output);
  fout << j.dump(2) << "\n";
  std::cerr << "N(tau) fit: n0 = " << fit.n0 << ", beta = " << fit.beta << " (theory "
            << theory_slope() << ")\n";
}

void cmd_fit(const std::string& input, const std::string& x_column,
             const std::string& y_column, const std::string& output) {
  std::ifstream in(input);
  if (!in) throw std::invalid_argument("cannot open input CSV: " + input);
  const auto points = read_csv_columns(in, x_column, y_column);
  const ScalingFitResult fit = linear_fit(points);
  nlohmann::json j = fit_to_json(fit);
  j["version"] = artifact_version();
  j["config"] = "fit " + input + " " + x_column + " vs " + y_column;
  auto out = open_output(output);
  out << j.dump(2) << "\n";
  std::cerr << "fit: n0 = " << fit.n0 << " +- " << fit.se_n0 << ", beta = " << fit.beta
            << " +- " << fit.se_beta << "\n";
}

void cmd_ed_check(const RunConfig& config, const std::string& output) {
  std::vector<EdCheckRow> rows;
  for (double tau : config.ed_tau_q) {
    SpinChainSpec spec;
    spec.n_spins = config.ed_n_spins;
    spec.tau_q = tau;
    spec.validate();
    const ChainState final_state = quench_evolve(spec);
    const double ed = kink_density(final_state, spec.n_spins);
    const double ms = mode_sum_prediction(spec);
    rows.push_back({spec.n_spins, tau, ed, ms, ed != 0.0 ? (ms - ed) / ed : 0.0});
  }
  auto out = open_output(output);
  write_ed_csv(out, rows, config.describe());
  std::cerr << "wrote " << rows.size() << " ED comparisons to " << output << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Zener chirp simulator and defect-density scaling toolkit"};
  app.require_subcommand(1);

  CommonOpts lz_opts, sweep_opts, regions_opts, freeze_opts, scan_opts, ed_opts;
  std::string protocol_file, fit_output = "fit.json";
  std::string fit_input, fit_x = "inv_sqrt_tau", fit_y = "n_defects", fit_out = "fit.json";

  auto* lz = app.add_subcommand("lz-run", "Time-resolved chirp trajectory CSV");
  add_common(lz, lz_opts, "trajectory.csv");
  lz->add_option("--protocol", protocol_file, "Protocol file (delta_mhz, eps_i_mhz, ...)");

  auto* sweep = app.add_subcommand("sweep", "Final-state map over (eps_f, t_lz)");
  add_common(sweep, sweep_opts, "sweep.csv");

  auto* regions = app.add_subcommand("regions", "P+ vs t/t_hat for several chirp durations");
  add_common(regions, regions_opts, "regions.csv");

  auto* freeze = app.add_subcommand("freezeout", "Bloch-vector trajectory around t_hat");
  add_common(freeze, freeze_opts, "freezeout.csv");

  auto* scan = app.add_subcommand("kzm-scan", "Defect density vs quench rate, with fit");
  add_common(scan, scan_opts, "scan.csv");
  scan->add_option("--fit-output", fit_output, "Fit report JSON")->capture_default_str();

  auto* fit = app.add_subcommand("fit", "Line fit of a scan CSV");
  fit->add_option("-i,--input", fit_input, "Input CSV")->required();
  fit->add_option("--x-column", fit_x, "X column name")->capture_default_str();
  fit->add_option("--y-column", fit_y, "Y column name")->capture_default_str();
  fit->add_option("-o,--output", fit_out, "Fit report JSON")->capture_default_str();

  auto* ed = app.add_subcommand("ed-check", "Exact chain vs mode-sum kink density");
  add_common(ed, ed_opts, "ed_check.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (lz->parsed()) {
      cmd_lz_run(resolve_config(lz_opts, "scheme-a-map"), protocol_file, lz_opts.output);
    } else if (sweep->parsed()) {
      cmd_sweep(resolve_config(sweep_opts, "scheme-a-map"), sweep_opts.output);
    } else if (regions->parsed()) {
      cmd_regions(resolve_config(regions_opts, "scheme-b-regions"), regions_opts.output);
    } else if (freeze->parsed()) {
      cmd_lz_run(resolve_config(freeze_opts, "freezeout"), "", freeze_opts.output);
    } else if (scan->parsed()) {
      cmd_kzm_scan(resolve_config(scan_opts, "kzm-scan"), scan_opts.output, fit_output);
    } else if (fit->parsed()) {
      cmd_fit(fit_input, fit_x, fit_y, fit_out);
    } else if (ed->parsed()) {
      cmd_ed_check(resolve_config(ed_opts, "ed-check"), ed_opts.output);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumericalError;
  }
  return 0;
}
