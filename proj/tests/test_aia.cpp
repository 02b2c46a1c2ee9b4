#include <doctest.h>

#include <cmath>
#include <vector>

#include "kzlz/aia.hpp"

using namespace kzlz;

namespace {
constexpr double kDelta = 0.12566370614359174;  // 2 pi * 0.02 rad/ns
}

TEST_CASE("characteristic times from a protocol") {
  const AIAConfig c = AIAConfig::from_protocol(kDelta, kDelta * kDelta, kAlphaSchemeA);
  CHECK(c.tau_q == doctest::Approx(1.0 / kDelta).epsilon(1e-15));
  CHECK(c.tau_0 == doctest::Approx(1.0 / kDelta).epsilon(1e-15));
  CHECK_THROWS_AS(AIAConfig::from_protocol(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AIAConfig::from_protocol(1.0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("freeze-out time") {
  CHECK(freeze_out_time(kDelta, kDelta, kAlphaSchemeA) ==
        doctest::Approx(2.2507907903927653).epsilon(1e-12));
  // Independent of the gap entirely.
  CHECK(freeze_out_time(0.3, 0.05, 1.1) == freeze_out_time(7.0, 0.05, 1.1));
  // Quadrupling alpha halves t_hat.
  CHECK(freeze_out_time(1.0, 0.05, 4.4) ==
        doctest::Approx(0.5 * freeze_out_time(1.0, 0.05, 1.1)).epsilon(1e-15));
  CHECK_THROWS_AS(freeze_out_time(1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(freeze_out_time(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("region classification") {
  CHECK(classify(0.0, 2.0, Scheme::A) == Region::Impulse);
  CHECK(classify(-2.0, 2.0, Scheme::A) == Region::Impulse);  // boundary included
  CHECK(classify(-2.1, 2.0, Scheme::A) == Region::Adiabatic);
  CHECK(classify(2.1, 2.0, Scheme::A) == Region::Adiabatic);
  CHECK(classify(2.0, 2.0, Scheme::B) == Region::Impulse);
  CHECK(classify(2.1, 2.0, Scheme::B) == Region::Adiabatic);
  CHECK_THROWS_AS(classify(-0.1, 2.0, Scheme::B), std::invalid_argument);
  CHECK_THROWS_AS(classify(0.0, 0.0, Scheme::A), std::invalid_argument);
}

TEST_CASE("closed-form excitation at tau_q = tau_0") {
  const double v = kDelta * kDelta;
  CHECK(aia_p_plus_scheme_a(kDelta, v, kAlphaSchemeA) ==
        doctest::Approx(0.3889845296483427).epsilon(1e-12));
  CHECK(aia_p_plus_scheme_b(kDelta, v, kAlphaSchemeB) ==
        doctest::Approx(0.16837489295574937).epsilon(1e-12));
}

TEST_CASE("closed-form limits and monotonicity") {
  // Slow sweeps excite nothing.
  CHECK(aia_p_plus_scheme_a(1.0, 1e-12, 1.0) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(aia_p_plus_scheme_b(1.0, 1e-12, 1.0) == doctest::Approx(0.0).epsilon(1e-10));
  // Fast sweeps saturate at 1 (scheme A) and 1/2 (scheme B).
  CHECK(aia_p_plus_scheme_a(1.0, 1e12, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(aia_p_plus_scheme_b(1.0, 1e12, 1.0) == doctest::Approx(0.5).epsilon(1e-6));
  double prev_a = 0.0, prev_b = 0.0;
  for (double lv = -6.0; lv <= 6.0; lv += 0.25) {
    const double v = std::pow(10.0, lv);
    const double pa = aia_p_plus_scheme_a(1.0, v, 1.0);
    const double pb = aia_p_plus_scheme_b(1.0, v, 1.0);
    CHECK(pa > prev_a);
    CHECK(pb > prev_b);
    CHECK(pb < 0.5);
    // Starting far from the crossing always excites at least as much as
    // starting on it, at equal alpha.
    CHECK(pa >= pb);
    prev_a = pa;
    prev_b = pb;
  }
}

TEST_CASE("alpha fit recovers the generating alpha") {
  auto model = [](double tau_ratio, double alpha, Scheme scheme) {
    const double x2 = 1.0 / (alpha * tau_ratio);
    return scheme == Scheme::A ? x2 / (1.0 + x2) : 0.5 * (1.0 - 1.0 / std::sqrt(1.0 + x2));
  };

  std::vector<AlphaSample> b_samples;
  for (double r : {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    b_samples.push_back({r, model(r, kAlphaSchemeB, Scheme::B)});
  }
  const AlphaFit fb = fit_alpha(b_samples, Scheme::B);
  CHECK(std::abs(fb.alpha - kAlphaSchemeB) <= 1e-6);
  CHECK(fb.rss <= 1e-15);

  std::vector<AlphaSample> a_samples;
  for (double r : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    a_samples.push_back({r, model(r, kAlphaSchemeA, Scheme::A)});
  }
  const AlphaFit fa = fit_alpha(a_samples, Scheme::A);
  CHECK(std::abs(fa.alpha - kAlphaSchemeA) <= 1e-6);
}

TEST_CASE("alpha fit rejects degenerate input") {
  CHECK_THROWS_AS(fit_alpha({{1.0, 0.2}, {2.0, 0.1}}, Scheme::B), std::invalid_argument);
  CHECK_THROWS_AS(fit_alpha({{1.0, 0.2}, {1.0, 0.2}, {1.0, 0.2}}, Scheme::B),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_alpha({{1.0, 0.6}, {2.0, 0.1}, {3.0, 0.05}}, Scheme::B),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_alpha({{1.0, 0.2}, {-2.0, 0.1}, {3.0, 0.05}}, Scheme::B),
                  std::invalid_argument);
}
