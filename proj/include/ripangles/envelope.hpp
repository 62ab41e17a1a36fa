#pragma once

#include <numbers>

namespace ripangles {

inline constexpr double kPi = std::numbers::pi;

/// Absolute tolerance on squared magnitudes used by feasibility checks, so
/// that boundary points (where the extremes occur) are admitted.
inline constexpr double kFeasibilityTol = 1e-12;

/// One analysis instance: an isometry constant together with the ambient
/// angle, normalized into (0, pi/2] by the supplement substitution.
struct RipScenario {
  double delta = 0.0;        ///< restricted isometry constant, in (0, 1)
  double theta_input = 0.0;  ///< requested ambient angle, radians, in (0, pi)
  double theta = 0.0;        ///< normalized angle, radians, in (0, pi/2]
  bool flipped = false;      ///< true when theta = pi - theta_input
};

/// The four squared-distance extremes implied by the isometry constant for
/// unit-norm inputs at angle theta: bounds on |A(u-v)|^2 and |A(u+v)|^2.
struct DistanceEnvelope {
  double d_min_sq = 0.0;
  double d_max_sq = 0.0;
  double dt_min_sq = 0.0;
  double dt_max_sq = 0.0;
};

/// A candidate magnitude triple (|Au|^2, |Av|^2, |A(u-v)|^2). The fourth
/// magnitude |A(u+v)|^2 is determined by the parallelogram law.
struct FeasibleTriple {
  double a = 0.0;
  double b = 0.0;
  double d_sq = 0.0;

  double s_sq() const { return 2.0 * (a + b) - d_sq; }
};

/// Validates (delta, theta_input) and folds angles above pi/2 onto their
/// supplement. theta_input exactly pi/2 stays un-flipped. Throws
/// std::domain_error naming the offending parameter.
RipScenario normalize_scenario(double delta, double theta_input);

DistanceEnvelope compute_envelope(const RipScenario& scenario);

/// True iff the triple lies inside every interval constraint (norm caps,
/// the two distance envelopes, triangle validity), each checked with
/// kFeasibilityTol slack.
bool is_feasible(const FeasibleTriple& triple, const DistanceEnvelope& env,
                 double delta, double tol = kFeasibilityTol);

}  // namespace ripangles
