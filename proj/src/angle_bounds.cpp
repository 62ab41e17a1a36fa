#include "ripangles/angle_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ripangles {

namespace {

// Boundary comparisons get a small tolerance band so that analytically exact
// boundaries (e.g. theta = pi/2 making dt_min_sq + d_max_sq = 4) land in a
// deterministic branch despite rounding in cos().
constexpr double kBranchTol = 1e-12;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

std::string_view branch_label(MaxBranch b) {
  switch (b) {
    case MaxBranch::kT32: return "T3.2";
    case MaxBranch::kT34Case1: return "T3.4(1)";
    case MaxBranch::kT34Case2: return "T3.4(2)";
  }
  return "?";
}

std::string_view branch_label(MinBranch b) {
  switch (b) {
    case MinBranch::kT42: return "T4.2";
    case MinBranch::kT44Case1: return "T4.4(1)";
    case MinBranch::kT44Case2aHi: return "T4.4(2)(a)i";
    case MinBranch::kT44Case2aLo: return "T4.4(2)(a)ii";
    case MinBranch::kT44Case2b: return "T4.4(2)(b)";
  }
  return "?";
}

MaxDetail alpha_max_detail(const RipScenario& scenario) {
  const DistanceEnvelope env = compute_envelope(scenario);
  const double delta = scenario.delta;
  const double diff = env.dt_min_sq - env.d_max_sq;  // 4(cos(theta) - delta)
  const double sum = env.dt_min_sq + env.d_max_sq;   // 4(1 - delta*cos(theta))

  if (diff >= -kBranchTol) {
    return {std::acos(clamp_unit(diff / sum)), MaxBranch::kT32};
  }
  if (sum <= 4.0 + kBranchTol) {
    const double denom =
        4.0 * std::sqrt(1.0 - delta) * std::sqrt(sum / 2.0 - (1.0 - delta));
    const double arg = std::max(-1.0, diff / denom);
    return {std::acos(clamp_unit(arg)), MaxBranch::kT34Case1};
  }
  // Unreachable for theta in (0, pi/2] since sum = 4(1 - delta*cos(theta))
  // never exceeds 4 there; kept for the complete case analysis.
  const double denom =
      4.0 * std::sqrt(sum / 2.0 - (1.0 + delta)) * std::sqrt(1.0 + delta);
  const double arg = std::max(-1.0, diff / denom);
  return {std::acos(clamp_unit(arg)), MaxBranch::kT34Case2};
}

double alpha_max(const RipScenario& scenario) {
  return alpha_max_detail(scenario).alpha;
}

MinDetail alpha_min_detail(const RipScenario& scenario) {
  const DistanceEnvelope env = compute_envelope(scenario);
  const double delta = scenario.delta;
  const double diff = env.dt_max_sq - env.d_min_sq;  // 4(cos(theta) + delta)
  const double sum = env.dt_max_sq + env.d_min_sq;   // 4(1 + delta*cos(theta))

  if (diff < -kBranchTol) {
    // Unreachable for theta in (0, pi/2]: diff = 4(cos(theta) + delta) > 0
    // there. Kept for the complete case analysis.
    return {std::acos(clamp_unit(diff / sum)), MinBranch::kT42};
  }
  if (sum < 4.0 - kBranchTol) {
    // Also unreachable in the normalized domain (sum >= 4 there).
    const double denom =
        4.0 * std::sqrt(1.0 - delta) * std::sqrt(sum / 2.0 - (1.0 - delta));
    const double arg = std::min(1.0, diff / denom);
    return {std::acos(clamp_unit(arg)), MinBranch::kT44Case1};
  }

  // sum >= 4. The corner value shared by the remaining cases.
  const double corner =
      diff / (4.0 * std::sqrt(1.0 + delta) * std::sqrt(sum / 2.0 - (1.0 + delta)));

  if ((1.0 + delta) - env.d_min_sq >= -kBranchTol) {
    const double low_sum = env.dt_min_sq + env.d_min_sq;  // 4(1 - delta)
    if (low_sum > 4.0 + kBranchTol) {
      // Unreachable in the normalized domain (low_sum <= 4 there).
      const double other =
          (env.dt_min_sq - env.d_min_sq) /
          (4.0 * std::sqrt(1.0 + delta) * std::sqrt(low_sum / 2.0 - (1.0 + delta)));
      const double arg = std::min(1.0, std::max(corner, other));
      return {std::acos(clamp_unit(arg)), MinBranch::kT44Case2aHi};
    }
    const double other =
        (2.0 - env.d_min_sq) /
        (2.0 * std::sqrt(1.0 + delta) * std::sqrt(1.0 - delta));
    const double arg = std::min(1.0, std::max(corner, other));
    return {std::acos(clamp_unit(arg)), MinBranch::kT44Case2aLo};
  }
  return {std::acos(clamp_unit(std::min(1.0, corner))), MinBranch::kT44Case2b};
}

double alpha_min(const RipScenario& scenario) {
  return alpha_min_detail(scenario).alpha;
}

IntervalDetail angle_interval_detail(double delta, double theta_input) {
  const RipScenario sc = normalize_scenario(delta, theta_input);
  const MaxDetail mx = alpha_max_detail(sc);
  const MinDetail mn = alpha_min_detail(sc);
  IntervalDetail out;
  out.min_branch = mn.branch;
  out.max_branch = mx.branch;
  out.flipped = sc.flipped;
  if (sc.flipped) {
    out.interval = {kPi - mx.alpha, kPi - mn.alpha};
  } else {
    out.interval = {mn.alpha, mx.alpha};
  }
  return out;
}

AngleInterval angle_interval(double delta, double theta_input) {
  return angle_interval_detail(delta, theta_input).interval;
}

AngleInterval orthogonal_interval(double delta) {
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw std::domain_error("delta must lie in (0, 1)");
  }
  const double r = delta / std::sqrt(1.0 - delta * delta);
  AngleInterval out;
  out.alpha_max = std::acos(std::max(-1.0, -r));
  out.alpha_min = std::acos(std::min(1.0, r));
  return out;
}

double polarization_cos_bound(const RipScenario& scenario) {
  const double c = std::fabs(std::cos(scenario.theta));
  return std::min((scenario.delta + c) / (1.0 - scenario.delta), 1.0);
}

double polarization_cos_bound(double delta, double theta_input) {
  return polarization_cos_bound(normalize_scenario(delta, theta_input));
}

CosRange achievable_cos_range(double delta, double theta_input) {
  const AngleInterval iv = angle_interval(delta, theta_input);
  const double half = kPi / 2.0;
  const double at_min = std::fabs(std::cos(iv.alpha_min));
  const double at_max = std::fabs(std::cos(iv.alpha_max));
  if (iv.alpha_max <= half) return {at_max, at_min};
  if (iv.alpha_min > half) return {at_min, at_max};
  return {0.0, std::max(at_min, at_max)};
}

}  // namespace ripangles
