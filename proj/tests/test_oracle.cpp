#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>

#include "ripangles/angle_bounds.hpp"
#include "ripangles/oracle.hpp"
#include "ripangles/rng.hpp"

using namespace ripangles;

TEST_CASE("oracle matches the closed forms on spot scenarios") {
  SUBCASE("orthogonal at delta = 0.5") {
    const RipScenario sc = normalize_scenario(0.5, kPi / 2.0);
    const OracleResult result = oracle_extremes(sc, 96);
    CHECK(result.alpha_min == doctest::Approx(0.95532).epsilon(2e-5));
    CHECK(result.alpha_max == doctest::Approx(2.18628).epsilon(2e-5));
    CHECK(result.alpha_min <= result.alpha_max);
    const auto env = compute_envelope(sc);
    CHECK(is_feasible(result.argmin_triple, env, 0.5, 1e-9));
    CHECK(is_feasible(result.argmax_triple, env, 0.5, 1e-9));
  }
  SUBCASE("sixty degrees at delta = 0.3 pins the maximal corner") {
    const RipScenario sc = normalize_scenario(0.3, kPi / 3.0);
    const OracleResult result = oracle_extremes(sc, 96);
    const double closed = alpha_max(sc);
    CHECK(std::fabs(result.alpha_max - closed) <= 1e-4);
    // The maximizer sits at the symmetric corner a = b = 0.85, d^2 = 1.3
    // with the sum magnitude on its floor.
    CHECK(result.argmax_triple.a == doctest::Approx(0.85).epsilon(1e-3));
    CHECK(result.argmax_triple.b == doctest::Approx(0.85).epsilon(1e-3));
    CHECK(result.argmax_triple.d_sq == doctest::Approx(1.3).epsilon(1e-3));
    CHECK(std::cos(result.alpha_max) == doctest::Approx(0.8 / 3.4).epsilon(1e-4));
  }
  SUBCASE("tiny distortion degenerates to theta") {
    const double theta = 0.9;
    const RipScenario sc{1e-9, theta, theta, false};
    const OracleResult result = oracle_extremes(sc, 32);
    CHECK(result.alpha_min == doctest::Approx(theta).epsilon(1e-6));
    CHECK(result.alpha_max == doctest::Approx(theta).epsilon(1e-6));
  }
}

TEST_CASE("oracle deviations stay within the reported resolution bound") {
  RandomStream stream(5);
  for (int i = 0; i < 12; ++i) {
    const double delta = 0.05 + 0.85 * stream.uniform01();
    const double theta = 0.05 + (kPi / 2.0 - 0.05) * stream.uniform01();
    const RipScenario sc = normalize_scenario(delta, theta);
    const OracleResult result = oracle_extremes(sc, 48);
    CHECK(std::fabs(result.alpha_max - alpha_max(sc)) <=
          std::max(result.resolution_bound, 1e-6));
    CHECK(std::fabs(result.alpha_min - alpha_min(sc)) <=
          std::max(result.resolution_bound, 1e-6));
  }
}

TEST_CASE("oracle rejects a degenerate grid") {
  const RipScenario sc = normalize_scenario(0.3, 1.0);
  CHECK_THROWS_AS(oracle_extremes(sc, 8), std::domain_error);
}

TEST_CASE("interior window points never beat the endpoints") {
  // cos(alpha) is linear in d^2 at fixed (a, b); sampling the window interior
  // must stay inside the endpoint extremes.
  RandomStream stream(7);
  const RipScenario sc = normalize_scenario(0.45, 1.1);
  const auto env = compute_envelope(sc);
  for (int i = 0; i < 200; ++i) {
    const double a = 0.55 + 0.9 * stream.uniform01();
    const double b = 0.55 + 0.9 * stream.uniform01();
    const double sa = std::sqrt(a), sb = std::sqrt(b);
    const double lo = std::max({env.d_min_sq, (sa - sb) * (sa - sb),
                                2.0 * (a + b) - env.dt_max_sq});
    const double hi = std::min({env.d_max_sq, (sa + sb) * (sa + sb),
                                2.0 * (a + b) - env.dt_min_sq});
    if (lo > hi) continue;
    const auto cos_at = [&](double d_sq) {
      return (a + b - d_sq) / (2.0 * std::sqrt(a * b));
    };
    for (int k = 0; k <= 10; ++k) {
      const double d_sq = lo + (hi - lo) * k / 10.0;
      CHECK(cos_at(d_sq) <= cos_at(lo) + 1e-12);
      CHECK(cos_at(d_sq) >= cos_at(hi) - 1e-12);
    }
  }
}

TEST_CASE("constrained sum extremum") {
  SUBCASE("maximum is the symmetric tangency point") {
    const ArcPoint pt = constrained_sum_extremum(2.0, 0.5, 1.5, true);
    CHECK(pt.x == doctest::Approx(1.0));
    CHECK(pt.y == doctest::Approx(1.0));
  }
  SUBCASE("minimum is the low-x arc endpoint") {
    const ArcPoint pt = constrained_sum_extremum(2.0, 0.5, 1.5, false);
    CHECK(pt.x == doctest::Approx(0.5));
    CHECK(pt.y == doctest::Approx(std::sqrt(1.75)).epsilon(1e-12));
  }
  SUBCASE("singleton arc returns the only point") {
    const ArcPoint mx = constrained_sum_extremum(2.0, 1.0, 1.0, true);
    const ArcPoint mn = constrained_sum_extremum(2.0, 1.0, 1.0, false);
    CHECK(mx.x == doctest::Approx(1.0));
    CHECK(mx.y == doctest::Approx(1.0));
    CHECK(mn.x == doctest::Approx(1.0));
    CHECK(mn.y == doctest::Approx(1.0));
  }
  SUBCASE("empty arc throws") {
    CHECK_THROWS_AS(constrained_sum_extremum(0.4, 0.5, 1.5, true),
                    std::domain_error);
    CHECK_THROWS_AS(constrained_sum_extremum(5.0, 0.5, 1.5, true),
                    std::domain_error);
  }
  SUBCASE("dense arc sweep agrees with the closed answers") {
    RandomStream stream(3);
    for (int trial = 0; trial < 40; ++trial) {
      const double lo = 0.1 + stream.uniform01();
      const double hi = lo + 0.1 + stream.uniform01();
      const double c =
          2.0 * lo * lo + (2.0 * hi * hi - 2.0 * lo * lo) * stream.uniform01();
      const ArcPoint mx = constrained_sum_extremum(c, lo, hi, true);
      const ArcPoint mn = constrained_sum_extremum(c, lo, hi, false);

      double best = -1.0, worst = 1e300;
      const int steps = 20000;
      for (int k = 0; k <= steps; ++k) {
        const double x_lo = std::sqrt(std::max(c - hi * hi, lo * lo));
        const double x_hi = std::sqrt(std::min(c - lo * lo, hi * hi));
        const double x = x_lo + (x_hi - x_lo) * k / steps;
        const double y = std::sqrt(c - x * x);
        if (y < lo - 1e-12 || y > hi + 1e-12) continue;
        best = std::max(best, x + y);
        worst = std::min(worst, x + y);
      }
      CHECK(mx.x + mx.y >= best - 1e-6);
      CHECK(mn.x + mn.y <= worst + 1e-6);
      // Maximizer is symmetric whenever feasible; minimizer pins a bound.
      CHECK(mx.x == doctest::Approx(mx.y));
      const bool pinned = std::fabs(mn.x - lo) < 1e-12 ||
                          std::fabs(mn.y - hi) < 1e-12 ||
                          std::fabs(mn.x - hi) < 1e-12 ||
                          std::fabs(mn.y - lo) < 1e-12;
      CHECK(pinned);
    }
  }
}
