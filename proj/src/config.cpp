#include "kzlz/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kzlz {

namespace {

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return d;
  } catch (const std::exception&) {
    throw std::invalid_argument("config field '" + key + "': not a number: " + value);
  }
}

int to_int(const std::string& key, const std::string& value) {
  const double d = to_double(key, value);
  if (d != std::floor(d)) {
    throw std::invalid_argument("config field '" + key + "': not an integer: " + value);
  }
  return static_cast<int>(d);
}

std::vector<double> to_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(value);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(to_double(key, item));
  }
  if (out.empty()) throw std::invalid_argument("config field '" + key + "': empty list");
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string join(const std::vector<double>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace

LZParams RunConfig::lz_params() const {
  return {rad_per_ns_from_mhz(delta_mhz), rad_per_ns_from_mhz(eps_i_mhz),
          rad_per_ns_from_mhz(eps_f_mhz), t_lz_ns};
}

ChirpProtocol RunConfig::protocol() const {
  ChirpProtocol p;
  p.params = lz_params();
  p.scheme = scheme;
  p.validate();
  return p;
}

DecoherenceParams RunConfig::decoherence() const {
  if (dec == "none") return DecoherenceParams::none();
  if (dec == "q1") return DecoherenceParams::from_times(kQ1T1Ns, kQ1T2Ns);
  if (dec == "q2") return DecoherenceParams::from_times(kQ2T1Ns, kQ2T2Ns);
  if (dec == "custom") {
    if (!(t1_ns > 0.0) || !(t2_ns > 0.0)) {
      throw std::invalid_argument("config field 't1_ns'/'t2_ns': custom decoherence needs both > 0");
    }
    return DecoherenceParams::from_times(t1_ns, t2_ns);
  }
  throw std::invalid_argument("config field 'dec': expected none|q1|q2|custom, got " + dec);
}

double RunConfig::resolved_alpha() const {
  if (alpha > 0.0) return alpha;
  return scheme == Scheme::A ? kAlphaSchemeA : kAlphaSchemeB;
}

IsingQuenchSpec RunConfig::quench_spec(double tau_q_i) const {
  IsingQuenchSpec s;
  s.tau_q_i = tau_q_i;
  s.k_c = k_c_over_pi * M_PI;
  s.n_k = n_k;
  if (range_policy == "fixed") {
    s.range_policy = RangePolicy::FixedRatio;
  } else if (range_policy == "cotk") {
    s.range_policy = RangePolicy::CotK;
  } else {
    throw std::invalid_argument("config field 'range_policy': expected fixed|cotk, got " +
                                range_policy);
  }
  s.eps_f_over_delta = eps_f_over_delta;
  s.delta_ref = rad_per_ns_from_mhz(delta_ref_mhz);
  s.eps_start_over_delta = eps_start_over_delta;
  s.eps_end_cap_over_delta = eps_end_cap_over_delta;
  s.eps_end_pad_over_delta = eps_end_pad_over_delta;
  s.t_cap_ns = t_cap_ns;
  s.t_floor_ns = t_floor_ns;
  return s;
}

std::vector<double> RunConfig::scan_tau_list() const {
  if (!(inv_sqrt_tau_min > 0.0) || !(inv_sqrt_tau_max >= inv_sqrt_tau_min) ||
      !(inv_sqrt_tau_step > 0.0)) {
    throw std::invalid_argument("config field 'inv_sqrt_tau_*': malformed scan range");
  }
  std::vector<double> taus;
  for (double x = inv_sqrt_tau_min; x <= inv_sqrt_tau_max + 1e-12;
       x += inv_sqrt_tau_step) {
    taus.push_back(1.0 / (x * x));
  }
  return taus;
}

std::string RunConfig::describe() const {
  std::ostringstream os;
  os << "delta_mhz=" << delta_mhz << " eps_i_mhz=" << eps_i_mhz
     << " eps_f_mhz=" << eps_f_mhz << " t_lz_ns=" << t_lz_ns
     << " scheme=" << (scheme == Scheme::A ? "A" : "B") << " alpha=" << resolved_alpha()
     << " dec=" << dec;
  if (dec == "custom") os << " t1_ns=" << t1_ns << " t2_ns=" << t2_ns;
  os << " k_c_over_pi=" << k_c_over_pi << " n_k=" << n_k
     << " range_policy=" << range_policy << " eps_f_over_delta=" << eps_f_over_delta
     << " delta_ref_mhz=" << delta_ref_mhz;
  if (eps_start_over_delta > 0.0) os << " eps_start_over_delta=" << eps_start_over_delta;
  if (eps_end_cap_over_delta > 0.0) os << " eps_end_cap_over_delta=" << eps_end_cap_over_delta;
  if (eps_end_pad_over_delta > 0.0) os << " eps_end_pad_over_delta=" << eps_end_pad_over_delta;
  if (t_cap_ns > 0.0) os << " t_cap_ns=" << t_cap_ns;
  if (t_floor_ns > 0.0) os << " t_floor_ns=" << t_floor_ns;
  os << " threads=" << threads;
  return os.str();
}

RunConfig preset_config(const std::string& name) {
  RunConfig c;
  if (name == "scheme-a-map") {
    c.scheme = Scheme::A;
    c.dec = "q2";
    return c;
  }
  if (name == "scheme-b-regions") {
    c.scheme = Scheme::B;
    c.eps_i_mhz = 0.0;
    c.eps_f_mhz = 400.0;
    c.t_lz_ns = 40.0;
    c.dec = "q2";
    return c;
  }
  if (name == "freezeout") {
    c.scheme = Scheme::B;
    c.eps_i_mhz = 0.0;
    c.eps_f_mhz = 400.0;
    c.t_lz_ns = 40.0;
    c.dec = "q2";
    c.sample_every_ns = 0.2;
    return c;
  }
  if (name == "kzm-scan") {
    return c;  // defaults: symmetric fixed-ratio sweeps, no decoherence
  }
  if (name == "kzm-scan-ideal") {
    // Coherent reference scan: fixed-ratio endpoint with the shallow hardware
    // start just below the crossing.
    c.eps_start_over_delta = 1.02;
    return c;
  }
  if (name == "kzm-scan-sample1") {
    // Short-coherence sample: endpoint-matched sweeps truncated to the
    // control window, with a slight overshoot past the measurement point.
    c.dec = "q1";
    c.range_policy = "cotk";
    c.eps_start_over_delta = 1.02;
    c.eps_end_cap_over_delta = 60.0;
    c.eps_end_pad_over_delta = 0.1;
    c.t_cap_ns = 1800.0;
    c.t_floor_ns = 40.0;
    return c;
  }
  if (name == "kzm-scan-sample2") {
    // Long-coherence sample: narrower amplitude window and a longer minimum
    // pulse, as used on the second device.
    c.dec = "q2";
    c.range_policy = "cotk";
    c.eps_start_over_delta = 1.02;
    c.eps_end_cap_over_delta = 4.0;
    c.eps_end_pad_over_delta = 8.0;
    c.t_cap_ns = 600.0;
    c.t_floor_ns = 350.0;
    return c;
  }
  if (name == "ed-check") {
    return c;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

void apply_override(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "delta_mhz") {
    c.delta_mhz = to_double(key, value);
  } else if (key == "eps_i_mhz") {
    c.eps_i_mhz = to_double(key, value);
  } else if (key == "eps_f_mhz") {
    c.eps_f_mhz = to_double(key, value);
  } else if (key == "t_lz_ns") {
    c.t_lz_ns = to_double(key, value);
  } else if (key == "scheme") {
    if (value == "A" || value == "a") {
      c.scheme = Scheme::A;
    } else if (value == "B" || value == "b") {
      c.scheme = Scheme::B;
    } else {
      throw std::invalid_argument("config field 'scheme': expected A or B, got " + value);
    }
  } else if (key == "alpha") {
    c.alpha = to_double(key, value);
  } else if (key == "dec") {
    c.dec = value;
  } else if (key == "t1_ns") {
    c.t1_ns = to_double(key, value);
    if (c.dec == "none") c.dec = "custom";
  } else if (key == "t2_ns") {
    c.t2_ns = to_double(key, value);
    if (c.dec == "none") c.dec = "custom";
  } else if (key == "sample_every_ns") {
    c.sample_every_ns = to_double(key, value);
  } else if (key == "sweep_eps_f_min_mhz") {
    c.sweep_eps_f_min_mhz = to_double(key, value);
  } else if (key == "sweep_eps_f_max_mhz") {
    c.sweep_eps_f_max_mhz = to_double(key, value);
  } else if (key == "sweep_eps_f_step_mhz") {
    c.sweep_eps_f_step_mhz = to_double(key, value);
  } else if (key == "sweep_t_lz_min_ns") {
    c.sweep_t_lz_min_ns = to_double(key, value);
  } else if (key == "sweep_t_lz_max_ns") {
    c.sweep_t_lz_max_ns = to_double(key, value);
  } else if (key == "sweep_t_lz_step_ns") {
    c.sweep_t_lz_step_ns = to_double(key, value);
  } else if (key == "regions_t_lz_ns") {
    c.regions_t_lz_ns = to_list(key, value);
  } else if (key == "inv_sqrt_tau_min") {
    c.inv_sqrt_tau_min = to_double(key, value);
  } else if (key == "inv_sqrt_tau_max") {
    c.inv_sqrt_tau_max = to_double(key, value);
  } else if (key == "inv_sqrt_tau_step") {
    c.inv_sqrt_tau_step = to_double(key, value);
  } else if (key == "k_c_over_pi") {
    c.k_c_over_pi = to_double(key, value);
  } else if (key == "n_k") {
    c.n_k = to_int(key, value);
  } else if (key == "range_policy") {
    c.range_policy = value;
  } else if (key == "eps_f_over_delta") {
    c.eps_f_over_delta = to_double(key, value);
  } else if (key == "delta_ref_mhz") {
    c.delta_ref_mhz = to_double(key, value);
  } else if (key == "eps_start_over_delta") {
    c.eps_start_over_delta = to_double(key, value);
  } else if (key == "eps_end_cap_over_delta") {
    c.eps_end_cap_over_delta = to_double(key, value);
  } else if (key == "eps_end_pad_over_delta") {
    c.eps_end_pad_over_delta = to_double(key, value);
  } else if (key == "t_cap_ns") {
    c.t_cap_ns = to_double(key, value);
  } else if (key == "t_floor_ns") {
    c.t_floor_ns = to_double(key, value);
  } else if (key == "n_spins_bound") {
    c.n_spins_bound = to_int(key, value);
  } else if (key == "ed_n_spins") {
    c.ed_n_spins = to_int(key, value);
  } else if (key == "ed_tau_q") {
    c.ed_tau_q = to_list(key, value);
  } else if (key == "threads") {
    const int t = to_int(key, value);
    if (t < 1) throw std::invalid_argument("config field 'threads': must be >= 1");
    c.threads = static_cast<unsigned>(t);
  } else {
    throw std::invalid_argument("unknown config field '" + key + "'");
  }
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::map<std::string, std::string> kv;

  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json j;
    in >> j;
    if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (value.is_string()) {
        kv[key] = value.get<std::string>();
      } else if (value.is_array()) {
        std::string s;
        for (const auto& item : value) {
          if (!s.empty()) s += ',';
          s += item.dump();
        }
        kv[key] = s;
      } else {
        kv[key] = value.dump();
      }
    }
    return kv;
  }

  // TOML subset: comments, [sections] (ignored), key = scalar or [array].
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config file: malformed line: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'')) {
      value = value.substr(1, value.size() - 2);
    } else if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
      value = trim(value.substr(1, value.size() - 2));
    }
    kv[key] = value;
  }
  return kv;
}

void apply_file(RunConfig& config, const std::string& path) {
  for (const auto& [key, value] : parse_config_file(path)) {
    apply_override(config, key, value);
  }
}

ChirpProtocol load_protocol_file(const std::string& path) {
  RunConfig c;
  for (const auto& [key, value] : parse_config_file(path)) {
    if (key != "delta_mhz" && key != "eps_i_mhz" && key != "eps_f_mhz" &&
        key != "t_lz_ns" && key != "scheme") {
      throw std::invalid_argument("protocol file: unexpected field '" + key + "'");
    }
    apply_override(c, key, value);
  }
  return c.protocol();
}

}  // namespace kzlz
