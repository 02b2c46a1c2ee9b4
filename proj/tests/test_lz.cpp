#include <doctest.h>

#include <cmath>
#include <random>

#include "kzlz/lz.hpp"

using namespace kzlz;

namespace {
constexpr double kDelta = 0.12566370614359174;  // 2 pi * 0.02 rad/ns (20 MHz)
}

TEST_CASE("frequency unit conversion") {
  CHECK(rad_per_ns_from_mhz(20.0) == doctest::Approx(kDelta).epsilon(1e-15));
  CHECK(mhz_from_rad_per_ns(rad_per_ns_from_mhz(-137.5)) ==
        doctest::Approx(-137.5).epsilon(1e-14));
}

TEST_CASE("linear chirp drive") {
  const LZParams p{1.0, -2.0, 2.0, 10.0};
  CHECK(p.speed() == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(epsilon_at(p, 0.0) == -2.0);
  CHECK(epsilon_at(p, 5.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(epsilon_at(p, 10.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(epsilon_at(p, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_at(p, 10.1), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(LZParams({-1.0, -2.0, 2.0, 10.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(LZParams({1.0, -2.0, 2.0, 0.0}).validate(), std::invalid_argument);
  CHECK_NOTHROW(LZParams({0.0, -2.0, 2.0, 10.0}).validate());

  ChirpProtocol a{{1.0, -1.0, 2.0, 10.0}, Scheme::A};
  CHECK_THROWS_AS(a.validate(), std::invalid_argument);  // eps_i = -delta not allowed
  a.params.eps_i = -5.0;
  CHECK_NOTHROW(a.validate());

  ChirpProtocol b{{1.0, -5.0, 2.0, 10.0}, Scheme::B};
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);  // scheme B starts at eps = 0
  b.params.eps_i = 0.0;
  CHECK_NOTHROW(b.validate());
}

TEST_CASE("instantaneous eigenframe") {
  const EigenFrame at_crossing = eigen_frame(0.0, 1.0);
  CHECK(at_crossing.theta == doctest::Approx(M_PI / 2).epsilon(1e-15));
  CHECK(at_crossing.omega == 1.0);

  const EigenFrame diag = eigen_frame(1.0, 1.0);
  CHECK(diag.theta == doctest::Approx(M_PI / 4).epsilon(1e-15));
  CHECK(diag.omega == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  CHECK(eigen_frame(-1e6, 1.0).theta == doctest::Approx(M_PI).epsilon(1e-6));
  CHECK(eigen_frame(1e6, 1.0).theta == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("gap is minimized at the crossing and equals delta there") {
  const double delta = 0.7;
  const double gap_min = eigen_frame(0.0, delta).omega;
  CHECK(gap_min == delta);
  for (double eps = -3.0; eps <= 3.0; eps += 0.1) {
    CHECK(eigen_frame(eps, delta).omega >= gap_min);
  }
}

TEST_CASE("eigenstates are orthonormal for every mixing angle") {
  for (double eps = -5.0; eps <= 5.0; eps += 0.25) {
    const EigenFrame f = eigen_frame(eps, 0.9);
    const PureState2 g = ground_state(f);
    const PureState2 e = excited_state(f);
    const complexd overlap = std::conj(e.a0()) * g.a0() + std::conj(e.a1()) * g.a1();
    CHECK(std::abs(overlap) <= 1e-15);
    CHECK(std::abs(std::norm(g.a0()) + std::norm(g.a1()) - 1.0) <= 1e-15);
  }
}

TEST_CASE("P+ observable on reference states") {
  const EigenFrame f = eigen_frame(0.35, 1.2);
  CHECK(p_plus(ground_state(f).to_density(), f) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(p_plus(excited_state(f).to_density(), f) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p_plus(DensityMatrix2::maximally_mixed(), f) == doctest::Approx(0.5).epsilon(1e-15));
  // At the crossing theta = pi/2, the diabatic |1> is an equal superposition.
  CHECK(p_plus(DensityMatrix2::pure_one(), eigen_frame(0.0, 1.0)) ==
        doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("P+ and P- are exact complements and ignore sy") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int n = 0;
  while (n < 10000) {
    const double sx = u(rng), sy = u(rng), sz = u(rng);
    if (sx * sx + sy * sy + sz * sz > 1.0) continue;
    ++n;
    const EigenFrame f = eigen_frame(u(rng) * 3.0, 0.5 + 0.5 * std::abs(u(rng)));
    const DensityMatrix2 rho = density_from_bloch({sx, sy, sz});
    const DensityMatrix2 rho_flip = density_from_bloch({sx, -sy, sz});
    CHECK(std::abs(p_plus(rho, f) + p_minus(rho, f) - 1.0) <= 1e-15);
    CHECK(p_plus(rho, f) == p_plus(rho_flip, f));
  }
}

TEST_CASE("asymptotic transition probability") {
  CHECK(lz_probability(kDelta, kDelta) ==
        doctest::Approx(0.8208687174155399).epsilon(1e-12));
  CHECK(lz_probability(kDelta, 1e9) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(lz_probability(10.0, 0.01) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(lz_probability(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lz_probability(1.0, -1.0), std::invalid_argument);
}

TEST_CASE("initial state tracks the instantaneous ground state") {
  // Far left of the crossing the ground state is (nearly) the diabatic |1>.
  const ChirpProtocol a{{kDelta, -100.0 * kDelta, 100.0 * kDelta, 20.0}, Scheme::A};
  const PureState2 psi = a.initial_state();
  CHECK(std::norm(psi.a1()) > 0.9999);
  // At the crossing it is the equal superposition.
  const ChirpProtocol b{{kDelta, 0.0, 100.0 * kDelta, 20.0}, Scheme::B};
  CHECK(std::norm(b.initial_state().a0()) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("chirped-drive detuning maps to eps with a sign flip") {
  const EpsilonEndpoints e = chirp_to_epsilon(-3.0, 5.0);
  CHECK(e.eps_i == 3.0);
  CHECK(e.eps_f == -5.0);
}
