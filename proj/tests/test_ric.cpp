#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ripangles/ric.hpp"

using namespace ripangles;

TEST_CASE("projected ric point values") {
  CHECK(projected_ric(0.3) == doctest::Approx(0.369231).epsilon(1e-6));
  CHECK(projected_ric(0.321699) == doctest::Approx(0.4).epsilon(1e-5));
  CHECK(projected_ric(1e-9) == doctest::Approx(0.0));
  CHECK(algebraic_projected_ric(0.2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(algebraic_projected_ric(0.5) == doctest::Approx(1.0));
  CHECK(algebraic_projected_ric(0.7) == doctest::Approx(1.0));
}

TEST_CASE("projected ric dominates pointwise and via the cubic identity") {
  for (int i = 1; i < 1000; ++i) {
    const double delta = i / 1000.0;
    const double bar = projected_ric(delta);
    const double bar_a = algebraic_projected_ric(delta);
    if (bar_a < 1.0) {
      CHECK(bar < bar_a);
      // Gap identity: bar_a - bar = 2*delta^3 / ((1-delta)(1+delta)).
      const double gap = 2.0 * std::pow(delta, 3) / ((1.0 - delta) * (1.0 + delta));
      CHECK(bar_a - bar == doctest::Approx(gap).epsilon(1e-10));
    } else {
      CHECK(bar <= bar_a);
    }
    // The two algebraic forms of the same quantity agree to double precision.
    const double alt = std::min(1.0, delta * (1.0 + 2.0 * delta) / (1.0 + delta));
    CHECK(std::fabs(bar - alt) <= 1e-14);
  }
}

TEST_CASE("reconstruction error bound") {
  CHECK(reconstruction_error_bound(0.0, 0.01) == doctest::Approx(0.04));
  CHECK(reconstruction_error_bound(0.4, 0.01) ==
        doctest::Approx(0.067120966).epsilon(1e-6));
  CHECK_THROWS_AS(reconstruction_error_bound(0.414214, 0.01), std::domain_error);
  CHECK_THROWS_AS(reconstruction_error_bound(-0.1, 0.01), std::domain_error);

  // Wherever both bounds exist, the tighter RIC gives the tighter bound.
  const double stable = std::sqrt(2.0) - 1.0;
  for (int i = 1; i < 100; ++i) {
    const double delta = i / 100.0;
    const double bar = projected_ric(delta);
    const double bar_a = algebraic_projected_ric(delta);
    if (bar_a >= stable) continue;
    CHECK(reconstruction_error_bound(bar, 0.01) <=
          reconstruction_error_bound(bar_a, 0.01) + 1e-15);
  }
}

TEST_CASE("ric inversions") {
  CHECK(invert_projected_ric(0.4) == doctest::Approx(0.321699).epsilon(1e-6));
  CHECK(invert_projected_ric(0.369231) == doctest::Approx(0.3).epsilon(1e-5));
  CHECK(invert_projected_ric(1e-9) == doctest::Approx(0.0));
  CHECK(invert_algebraic_ric(0.4) == doctest::Approx(0.285714).epsilon(1e-6));
  CHECK(invert_algebraic_ric(1.0) == doctest::Approx(0.5));

  SUBCASE("round trip to 1e-10") {
    for (int i = 1; i < 1000; ++i) {
      const double tau = i / 1000.0;
      const double delta = invert_projected_ric(tau);
      CHECK(std::fabs(projected_ric(delta) - tau) <= 1e-10);
    }
  }
}

TEST_CASE("measurement reduction") {
  CHECK(measurement_reduction(0.4) == doctest::Approx(0.211).epsilon(0.025));
  // Composition oracle: recompute from the two inversions directly.
  for (const double tau : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const double ratio = invert_algebraic_ric(tau) / invert_projected_ric(tau);
    CHECK(measurement_reduction(tau) ==
          doctest::Approx(1.0 - ratio * ratio).epsilon(1e-14));
  }
  // Both inversions agree to first order, so the reduction vanishes small-tau.
  CHECK(measurement_reduction(1e-4) < 1e-3);
  CHECK(measurement_reduction(1e-6) < 1e-5);
}

TEST_CASE("greedy recovery threshold solves its quadratic") {
  CHECK(omp_ric_threshold(1) == doctest::Approx(0.390388).epsilon(1e-6));
  CHECK(omp_ric_threshold(10) == doctest::Approx(0.14074807).epsilon(1e-7));
  CHECK_THROWS_AS(omp_ric_threshold(0), std::domain_error);

  SUBCASE("quadratic residual vanishes") {
    for (int K = 1; K <= 100; ++K) {
      const double d = omp_ric_threshold(K);
      const double rk = std::sqrt(static_cast<double>(K));
      const double residual = 4.0 * rk * d * d + (2.0 * rk - 1.0) * d - 1.0;
      CHECK(std::fabs(residual) <= 1e-10);
    }
  }
  SUBCASE("bisection oracle on 2*projected_ric(d)*sqrt(K) = 1") {
    for (const int K : {1, 2, 5, 10, 50, 100}) {
      const double rk = std::sqrt(static_cast<double>(K));
      double lo = 1e-12, hi = 0.999;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (2.0 * projected_ric(mid) * rk < 1.0 ? lo : hi) = mid;
      }
      CHECK(omp_ric_threshold(K) == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-10));
      CHECK(std::fabs(2.0 * projected_ric(omp_ric_threshold(K)) * rk - 1.0) <=
            1e-10);
    }
  }
  SUBCASE("large-K behavior: threshold*sqrt(K) -> 1/2") {
    // First-order correction is -1/(4*sqrt(K)), so 0.3/sqrt(K) bounds the gap.
    for (const std::int64_t K : {100ll, 10000ll, 1000000ll}) {
      const double rk = std::sqrt(static_cast<double>(K));
      CHECK(std::fabs(omp_ric_threshold(K) * rk - 0.5) <= 0.3 / rk);
    }
  }
}

TEST_CASE("prior threshold values") {
  CHECK(omp_ric_threshold_prior(1) == doctest::Approx(0.414214).epsilon(1e-6));
  CHECK(omp_ric_threshold_prior(10) == doctest::Approx(0.182744).epsilon(1e-6));
  for (const std::int64_t K : {100ll, 10000ll}) {
    const double rk = std::sqrt(2.0 * static_cast<double>(K));
    CHECK(omp_ric_threshold_prior(K) == doctest::Approx(1.0 / rk).epsilon(2.0 / rk));
  }
}
