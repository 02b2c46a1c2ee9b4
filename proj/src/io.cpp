#include "kzlz/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kzlz/aia.hpp"
#include "kzlz/lz.hpp"

namespace kzlz {

namespace {

// Shortest round-trippable decimal rendering, '.' separator regardless of
// locale.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  for (char* p = buf; *p; ++p) {
    if (*p == ',') *p = '.';
  }
  return buf;
}

const char* region_name(Region r) {
  return r == Region::Impulse ? "impulse" : "adiabatic";
}

}  // namespace

const char* artifact_version() { return "0.1.0"; }

nlohmann::json density_to_json(const DensityMatrix2& rho) {
  return {{"rho00", rho.rho00()},
          {"rho11", rho.rho11()},
          {"re01", rho.rho01().real()},
          {"im01", rho.rho01().imag()}};
}

DensityMatrix2 density_from_json(const nlohmann::json& j) {
  return DensityMatrix2(j.at("rho00").get<double>(), j.at("rho11").get<double>(),
                        {j.at("re01").get<double>(), j.at("im01").get<double>()});
}

nlohmann::json bloch_to_json(const BlochVector& b) {
  return {{"sx", b.sx}, {"sy", b.sy}, {"sz", b.sz}};
}

BlochVector bloch_from_json(const nlohmann::json& j) {
  return {j.at("sx").get<double>(), j.at("sy").get<double>(), j.at("sz").get<double>()};
}

void write_csv_preamble(std::ostream& out, const std::string& config_line) {
  out << "# kzlz " << artifact_version() << "\n";
  out << "# config: " << config_line << "\n";
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, double alpha,
                          const std::string& config_line) {
  const LZParams& p = traj.protocol.params;
  const double v = p.speed();
  const double t_hat = v > 0.0 ? freeze_out_time(p.delta, v, alpha) : 0.0;
  // Time of the crossing (eps = 0); scheme B starts there.
  const double t_cross = v != 0.0 ? -p.eps_i / v : 0.0;

  write_csv_preamble(out, config_line);
  out << "t_ns,rho00,rho11,re01,im01,sx,sy,sz,theta,p_plus,purity,t_over_t_hat,region\n";
  for (const auto& s : traj.samples) {
    const BlochVector b = bloch_from_density(s.rho);
    const EigenFrame frame = eigen_frame(epsilon_at(p, s.t), p.delta);
    const double t_rel = s.t - t_cross;
    out << fmt(s.t) << ',' << fmt(s.rho.rho00()) << ',' << fmt(s.rho.rho11()) << ','
        << fmt(s.rho.rho01().real()) << ',' << fmt(s.rho.rho01().imag()) << ','
        << fmt(b.sx) << ',' << fmt(b.sy) << ',' << fmt(b.sz) << ','
        << fmt(frame.theta) << ',' << fmt(p_plus(s.rho, frame)) << ','
        << fmt(s.rho.purity()) << ',';
    if (t_hat > 0.0) {
      out << fmt(t_rel / t_hat) << ','
          << region_name(classify(t_rel, t_hat, traj.protocol.scheme));
    } else {
      out << "nan,adiabatic";
    }
    out << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells,
                     const std::string& config_line) {
  write_csv_preamble(out, config_line);
  out << "eps_f_mhz,t_lz_ns,sx,sz,p_plus\n";
  for (const auto& c : cells) {
    out << fmt(c.eps_f_mhz) << ',' << fmt(c.t_lz_ns) << ',' << fmt(c.sx) << ','
        << fmt(c.sz) << ',' << fmt(c.p_plus) << '\n';
  }
}

void write_scan_csv(std::ostream& out, const std::vector<ScalingPoint>& points,
                    const IsingQuenchSpec& spec, const DecoherenceParams& dec,
                    const std::string& config_line) {
  write_csv_preamble(out, config_line);
  out << "tau_q_i,inv_sqrt_tau,n_defects,n_modes,k_c_over_pi,range_policy,t1_ns,t2_ns\n";
  const char* policy = spec.range_policy == RangePolicy::CotK ? "cotk" : "fixed";
  const double t1 = dec.gamma1 > 0.0 ? 1.0 / dec.gamma1 : 0.0;
  const double t2 = dec.gamma_phi_total > 0.0 ? 1.0 / dec.gamma_phi_total : 0.0;
  for (const auto& pt : points) {
    out << fmt(pt.tau_q_i) << ',' << fmt(pt.inv_sqrt_tau) << ',' << fmt(pt.n_defects)
        << ',' << spec.n_k << ',' << fmt(spec.k_c / M_PI) << ',' << policy << ','
        << fmt(t1) << ',' << fmt(t2) << '\n';
  }
}

nlohmann::json fit_to_json(const ScalingFitResult& fit) {
  return {{"n0", fit.n0},           {"beta", fit.beta},
          {"se_n0", fit.se_n0},     {"se_beta", fit.se_beta},
          {"r_squared", fit.r_squared}, {"n_points", fit.n_points}};
}

void write_ed_csv(std::ostream& out, const std::vector<EdCheckRow>& rows,
                  const std::string& config_line) {
  write_csv_preamble(out, config_line);
  out << "n_spins,tau_q,kink_density_ed,kink_density_modesum,rel_diff\n";
  for (const auto& r : rows) {
    out << r.n_spins << ',' << fmt(r.tau_q) << ',' << fmt(r.kink_density_ed) << ','
        << fmt(r.kink_density_modesum) << ',' << fmt(r.rel_diff) << '\n';
  }
}

std::vector<std::pair<double, double>> read_csv_columns(std::istream& in,
                                                        const std::string& x_column,
                                                        const std::string& y_column) {
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
    break;
  }
  int ix = -1, iy = -1;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    if (header[i] == x_column) ix = i;
    if (header[i] == y_column) iy = i;
  }
  if (ix < 0 || iy < 0) {
    throw std::invalid_argument("CSV is missing column '" + (ix < 0 ? x_column : y_column) +
                                "'");
  }
  std::vector<std::pair<double, double>> out;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (static_cast<int>(cells.size()) <= std::max(ix, iy)) {
      throw std::invalid_argument("CSV row has too few columns: " + line);
    }
    out.emplace_back(std::stod(cells[ix]), std::stod(cells[iy]));
  }
  return out;
}

}  // namespace kzlz
