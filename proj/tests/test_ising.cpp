#include <doctest.h>

#include <cmath>
#include <vector>

#include "kzlz/ising.hpp"

using namespace kzlz;

TEST_CASE("quench-spec validation") {
  IsingQuenchSpec s;
  s.tau_q_i = 100.0;
  CHECK_NOTHROW(s.validate());
  s.tau_q_i = 0.1;  // not slow compared to 1/(2 pi)
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.tau_q_i = 100.0;
  s.k_c = M_PI / 3.0;  // cutoff must stay long-wavelength
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.k_c = 0.2 * M_PI;
  s.n_k = 0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.n_k = 127;
  s.eps_f_over_delta = 1.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("mode sweep rate") {
  CHECK(mode_rate(M_PI / 2.0, 100.0) == doctest::Approx(0.0025).epsilon(1e-15));
  CHECK(mode_rate(0.05 * M_PI, 200.0) ==
        doctest::Approx(0.05107932273632675).epsilon(1e-14));
  // Even in k.
  CHECK(mode_rate(-0.3, 50.0) == mode_rate(0.3, 50.0));
  // Long-wavelength modes sweep fast: chi ~ 1/k^2.
  CHECK(mode_rate(0.001, 100.0) / mode_rate(0.002, 100.0) ==
        doctest::Approx(4.0).epsilon(1e-5));
  CHECK_THROWS_AS(mode_rate(0.0, 100.0), std::invalid_argument);
  CHECK_THROWS_AS(mode_rate(3.5, 100.0), std::invalid_argument);
}

TEST_CASE("midpoint momentum grid") {
  const std::vector<double> g1 = mode_grid(0.2 * M_PI, 1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == doctest::Approx(0.1 * M_PI).epsilon(1e-15));

  const std::vector<double> g2 = mode_grid(0.2 * M_PI, 2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0] == doctest::Approx(0.05 * M_PI).epsilon(1e-15));
  CHECK(g2[1] == doctest::Approx(0.15 * M_PI).epsilon(1e-15));

  const std::vector<double> g = mode_grid(0.2 * M_PI, 127);
  REQUIRE(g.size() == 127);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g[i] > 0.0);
    CHECK(g[i] < 0.2 * M_PI);
    if (i) CHECK(g[i] > g[i - 1]);
  }
  CHECK_THROWS_AS(mode_grid(0.2 * M_PI, 0), std::invalid_argument);
}

TEST_CASE("mode-to-protocol mapping, fixed endpoint ratio") {
  IsingQuenchSpec spec;
  spec.tau_q_i = 200.0;
  const double k = 0.05 * M_PI;
  const ModeProtocol mp = mode_to_protocol(k, spec);
  CHECK(mp.chi == doctest::Approx(0.05107932273632675).epsilon(1e-14));
  CHECK(mp.normalized.params.delta == 1.0);
  CHECK(mp.normalized.params.eps_i == -10.0);
  CHECK(mp.normalized.params.eps_f == 10.0);
  CHECK(mp.normalized.params.speed() == doctest::Approx(mp.chi).epsilon(1e-12));
  CHECK(mp.normalized.scheme == Scheme::A);
  // The physical realization is the same dimensionless problem rescaled by the
  // reference gap: v_phys = chi delta_ref^2, eps_f/delta unchanged.
  const double d = spec.delta_ref;
  CHECK(mp.physical.params.delta == doctest::Approx(d).epsilon(1e-15));
  CHECK(mp.physical.params.eps_f / mp.physical.params.delta ==
        doctest::Approx(10.0).epsilon(1e-12));
  CHECK(mp.physical.params.speed() == doctest::Approx(mp.chi * d * d).epsilon(1e-12));
  CHECK(mp.physical.params.t_lz ==
        doctest::Approx(mp.normalized.params.t_lz / d).epsilon(1e-12));
}

TEST_CASE("mode-to-protocol mapping, quench-endpoint image") {
  IsingQuenchSpec spec;
  spec.tau_q_i = 200.0;
  spec.range_policy = RangePolicy::CotK;
  const ModeProtocol mp = mode_to_protocol(M_PI / 4.0, spec);
  CHECK(mp.normalized.params.eps_f == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mp.normalized.params.eps_i == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK_THROWS_AS(mode_to_protocol(M_PI / 2.0, spec), std::invalid_argument);
}

TEST_CASE("control-window knobs reshape the physical sweep") {
  IsingQuenchSpec spec;
  spec.tau_q_i = 200.0;
  spec.range_policy = RangePolicy::CotK;
  spec.eps_start_over_delta = 1.02;
  spec.eps_end_cap_over_delta = 4.0;
  spec.eps_end_pad_over_delta = 0.5;
  const double k = 0.05 * M_PI;  // cot k ~ 6.3, so the cap binds
  const ModeProtocol mp = mode_to_protocol(k, spec);
  CHECK(mp.normalized.params.eps_f == doctest::Approx(4.5).epsilon(1e-14));
  CHECK(mp.normalized.params.eps_i == doctest::Approx(-1.02).epsilon(1e-14));
  CHECK(mp.normalized.params.speed() == doctest::Approx(mp.chi).epsilon(1e-12));

  // Duration cap: the gap rises above delta_ref so the same normalized sweep
  // fits in the window; the endpoint ratios are unchanged.
  IsingQuenchSpec capped = spec;
  capped.t_cap_ns = 10.0;
  const ModeProtocol mc = mode_to_protocol(k, capped);
  CHECK(mp.physical.params.t_lz > 10.0);
  CHECK(mc.physical.params.t_lz == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(mc.physical.params.delta > spec.delta_ref);
  CHECK(mc.physical.params.eps_f / mc.physical.params.delta ==
        doctest::Approx(4.5).epsilon(1e-12));

  // Duration floor: the gap drops so the sweep lasts at least the minimum
  // pulse length.
  IsingQuenchSpec floored = spec;
  floored.t_floor_ns = 10.0 * mp.physical.params.t_lz;
  const ModeProtocol mf = mode_to_protocol(k, floored);
  CHECK(mf.physical.params.t_lz == doctest::Approx(floored.t_floor_ns).epsilon(1e-12));
  CHECK(mf.physical.params.delta == doctest::Approx(spec.delta_ref / 10.0).epsilon(1e-12));

  IsingQuenchSpec bad = spec;
  bad.eps_end_pad_over_delta = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = spec;
  bad.t_cap_ns = 100.0;
  bad.t_floor_ns = 200.0;  // floor cannot exceed cap
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("defect density is bounded and decreases for slower quenches") {
  IsingQuenchSpec spec;
  spec.n_k = 8;
  spec.tau_q_i = 150.0;
  const ScalingPoint fast = defect_density(spec, DecoherenceParams::none());
  spec.tau_q_i = 300.0;
  const ScalingPoint slow = defect_density(spec, DecoherenceParams::none());
  for (const ScalingPoint& p : {fast, slow}) {
    CHECK(p.n_defects > 0.0);
    CHECK(p.n_defects < spec.k_c / M_PI);
    CHECK(p.inv_sqrt_tau == doctest::Approx(1.0 / std::sqrt(p.tau_q_i)).epsilon(1e-15));
  }
  CHECK(slow.n_defects < fast.n_defects);
}

TEST_CASE("doubling the momentum grid moves the density by less than 0.5%") {
  IsingQuenchSpec spec;
  spec.tau_q_i = 150.0;
  spec.n_k = 16;
  const double n16 = defect_density(spec, DecoherenceParams::none()).n_defects;
  spec.n_k = 32;
  const double n32 = defect_density(spec, DecoherenceParams::none()).n_defects;
  CHECK(std::abs(n32 - n16) / n16 < 0.005);
}

TEST_CASE("scaling scan is bitwise identical across thread counts") {
  IsingQuenchSpec spec;
  spec.n_k = 5;
  spec.tau_q_i = 100.0;
  const std::vector<double> taus{100.0, 178.0, 278.0, 400.0};
  const std::vector<ScalingPoint> serial =
      scaling_scan(taus, spec, DecoherenceParams::none(), 1);
  const std::vector<ScalingPoint> parallel =
      scaling_scan(taus, spec, DecoherenceParams::none(), 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].tau_q_i == parallel[i].tau_q_i);
    CHECK(serial[i].n_defects == parallel[i].n_defects);
  }
}

TEST_CASE("scaling scan needs enough quench times") {
  IsingQuenchSpec spec;
  spec.n_k = 4;
  spec.tau_q_i = 100.0;
  CHECK_THROWS_AS(scaling_scan({100.0, 200.0, 300.0}, spec, DecoherenceParams::none()),
                  std::invalid_argument);
}

TEST_CASE("finite-size bound on the quench rate") {
  CHECK(finite_size_min_rate(1000) == doctest::Approx(0.006283185307179587).epsilon(1e-15));
  CHECK(finite_size_min_rate(2) == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK_THROWS_AS(finite_size_min_rate(1), std::invalid_argument);
}
