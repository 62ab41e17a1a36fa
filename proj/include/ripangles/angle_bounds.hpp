#pragma once

#include <string_view>

#include "ripangles/envelope.hpp"

namespace ripangles {

/// Closed achievable interval for the compressed angle.
struct AngleInterval {
  double alpha_min = 0.0;
  double alpha_max = 0.0;
};

/// Achievable range of |cos(alpha)| over the interval.
struct CosRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Which case of the maximal-angle analysis produced the value.
enum class MaxBranch {
  kT32,        ///< dt_min_sq >= d_max_sq (equivalently cos(theta) >= delta)
  kT34Case1,   ///< dt_min_sq + d_max_sq <= 4
  kT34Case2,   ///< dt_min_sq + d_max_sq > 4
};

/// Which case of the minimal-angle analysis produced the value.
enum class MinBranch {
  kT42,          ///< dt_max_sq < d_min_sq
  kT44Case1,     ///< dt_max_sq + d_min_sq < 4
  kT44Case2aHi,  ///< sum >= 4, (1+delta) >= d_min_sq, dt_min_sq + d_min_sq > 4
  kT44Case2aLo,  ///< sum >= 4, (1+delta) >= d_min_sq, dt_min_sq + d_min_sq <= 4
  kT44Case2b,    ///< sum >= 4, (1+delta) < d_min_sq
};

std::string_view branch_label(MaxBranch b);
std::string_view branch_label(MinBranch b);

struct MaxDetail {
  double alpha = 0.0;
  MaxBranch branch = MaxBranch::kT32;
};

struct MinDetail {
  double alpha = 0.0;
  MinBranch branch = MinBranch::kT44Case2b;
};

/// Interval plus the branches taken on the normalized scenario.
struct IntervalDetail {
  AngleInterval interval;
  MinBranch min_branch = MinBranch::kT44Case2b;
  MaxBranch max_branch = MaxBranch::kT32;
  bool flipped = false;
};

/// Maximal achievable compressed angle for a normalized scenario
/// (theta in (0, pi/2]). Result lies in [theta, pi].
double alpha_max(const RipScenario& scenario);
MaxDetail alpha_max_detail(const RipScenario& scenario);

/// Minimal achievable compressed angle for a normalized scenario.
/// Result lies in [0, theta].
double alpha_min(const RipScenario& scenario);
MinDetail alpha_min_detail(const RipScenario& scenario);

/// Full interval for an arbitrary ambient angle in (0, pi). Angles above
/// pi/2 are handled through the supplement substitution, swapping and
/// reflecting the endpoint roles.
AngleInterval angle_interval(double delta, double theta_input);
IntervalDetail angle_interval_detail(double delta, double theta_input);

/// Specialized interval for orthogonal inputs (theta = pi/2):
/// alpha_max = acos(max{-1, -delta/sqrt(1-delta^2)}),
/// alpha_min = acos(min{ 1,  delta/sqrt(1-delta^2)}).
AngleInterval orthogonal_interval(double delta);

/// Polarization-identity upper bound on |cos(alpha)|:
/// min{(delta + |cos theta|)/(1 - delta), 1}.
double polarization_cos_bound(const RipScenario& scenario);
double polarization_cos_bound(double delta, double theta_input);

/// Achievable |cos(alpha)| range induced by the angle interval.
CosRange achievable_cos_range(double delta, double theta_input);

}  // namespace ripangles
