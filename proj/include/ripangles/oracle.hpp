#pragma once

#include "ripangles/envelope.hpp"

namespace ripangles {

/// Brute-force extremes of the achievable angle over the feasible magnitude
/// region, together with the attaining triples and a conservative accuracy
/// bound for the search itself.
struct OracleResult {
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  FeasibleTriple argmin_triple;
  FeasibleTriple argmax_triple;
  double resolution_bound = 0.0;  ///< radians; guaranteed search slack
};

/// Grid search over the feasible (a, b, d^2) region with local refinement.
/// At fixed (a, b) the feasible d^2 values form an explicit interval and
/// cos(alpha) is monotone in d^2, so the per-column extremes sit exactly at
/// the interval endpoints; the search grids (a, b) and evaluates those
/// endpoints, then refines around the best cells until the cell width drops
/// below 1e-6. Requires grid_per_axis >= 16.
OracleResult oracle_extremes(const RipScenario& scenario, int grid_per_axis);

/// Solution of: extremize x + y subject to x^2 + y^2 = c, lo <= x, y <= hi.
struct ArcPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Maximum is the symmetric tangency point when feasible; minimum is an arc
/// endpoint. Ties between mirrored endpoints resolve to the smaller x.
/// Requires a nonempty arc: 2*lo^2 <= c <= 2*hi^2.
ArcPoint constrained_sum_extremum(double c, double lo, double hi, bool maximize);

}  // namespace ripangles
