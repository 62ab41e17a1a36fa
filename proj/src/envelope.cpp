#include "ripangles/envelope.hpp"

#include <cmath>
#include <stdexcept>

namespace ripangles {

RipScenario normalize_scenario(double delta, double theta_input) {
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw std::domain_error("delta must lie in (0, 1)");
  }
  if (!(theta_input > 0.0) || !(theta_input < kPi)) {
    throw std::domain_error("theta_input must lie in (0, pi)");
  }
  const bool flipped = theta_input > kPi / 2.0;
  RipScenario sc;
  sc.delta = delta;
  sc.theta_input = theta_input;
  sc.theta = flipped ? kPi - theta_input : theta_input;
  sc.flipped = flipped;
  return sc;
}

DistanceEnvelope compute_envelope(const RipScenario& scenario) {
  const double c = std::cos(scenario.theta);
  const double lo = 1.0 - scenario.delta;
  const double hi = 1.0 + scenario.delta;
  DistanceEnvelope env;
  env.d_min_sq = 2.0 * lo * (1.0 - c);
  env.d_max_sq = 2.0 * hi * (1.0 - c);
  env.dt_min_sq = 2.0 * lo * (1.0 + c);
  env.dt_max_sq = 2.0 * hi * (1.0 + c);
  return env;
}

bool is_feasible(const FeasibleTriple& triple, const DistanceEnvelope& env,
                 double delta, double tol) {
  const double a = triple.a;
  const double b = triple.b;
  const double d_sq = triple.d_sq;
  if (!(a > 0.0) || !(b > 0.0) || d_sq < -tol) return false;

  const double lo = 1.0 - delta;
  const double hi = 1.0 + delta;
  if (a < lo - tol || a > hi + tol) return false;
  if (b < lo - tol || b > hi + tol) return false;
  if (d_sq < env.d_min_sq - tol || d_sq > env.d_max_sq + tol) return false;

  const double s_sq = triple.s_sq();
  if (s_sq < env.dt_min_sq - tol || s_sq > env.dt_max_sq + tol) return false;

  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b);
  const double tri_lo = (sa - sb) * (sa - sb);
  const double tri_hi = (sa + sb) * (sa + sb);
  return d_sq >= tri_lo - tol && d_sq <= tri_hi + tol;
}

}  // namespace ripangles
