#include "ripangles/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ripangles {

namespace {

constexpr double kRefineStop = 1e-6;  // final cell width target

struct Window {
  double lo = 0.0;
  double hi = 0.0;
  bool feasible = false;
};

// Feasible d^2 interval at fixed (a, b): intersection of the distance
// envelope, the parallelogram-law image of the sum envelope, and triangle
// validity.
Window window_for(double a, double b, const DistanceEnvelope& env) {
  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b);
  const double tri_lo = (sa - sb) * (sa - sb);
  const double tri_hi = (sa + sb) * (sa + sb);
  const double twice_sum = 2.0 * (a + b);
  Window w;
  w.lo = std::max({env.d_min_sq, tri_lo, twice_sum - env.dt_max_sq});
  w.hi = std::min({env.d_max_sq, tri_hi, twice_sum - env.dt_min_sq});
  if (w.lo <= w.hi) {
    w.feasible = true;
  } else if (w.lo - w.hi <= kFeasibilityTol) {
    w.lo = w.hi = 0.5 * (w.lo + w.hi);
    w.feasible = true;
  }
  return w;
}

double cos_of(double a, double b, double d_sq) {
  return std::clamp((a + b - d_sq) / (2.0 * std::sqrt(a * b)), -1.0, 1.0);
}

struct Extremum {
  double cos_value = 0.0;
  FeasibleTriple triple;
  bool found = false;
};

// Evaluates one (a, b) column. cos is decreasing in d^2, so the window's hi
// endpoint carries the column's smallest cos and lo its largest.
void visit_column(double a, double b, const DistanceEnvelope& env,
                  Extremum& min_cos, Extremum& max_cos) {
  const Window w = window_for(a, b, env);
  if (!w.feasible) return;
  const double c_hi = cos_of(a, b, w.hi);
  const double c_lo = cos_of(a, b, w.lo);
  if (!min_cos.found || c_hi < min_cos.cos_value) {
    min_cos = {c_hi, {a, b, w.hi}, true};
  }
  if (!max_cos.found || c_lo > max_cos.cos_value) {
    max_cos = {c_lo, {a, b, w.lo}, true};
  }
}

// Local refinement around an incumbent column; the sampling box halves each
// pass until its width drops below kRefineStop.
Extremum refine(Extremum start, double initial_width, double box_lo,
                double box_hi, const DistanceEnvelope& env, bool minimize) {
  constexpr int kSide = 8;  // 17 samples per axis
  Extremum best = start;
  for (double w = initial_width; w >= kRefineStop; w *= 0.5) {
    Extremum min_cos = best;
    Extremum max_cos = best;
    const double step = w / kSide;
    for (int i = -kSide; i <= kSide; ++i) {
      const double a = std::clamp(best.triple.a + i * step, box_lo, box_hi);
      for (int j = -kSide; j <= kSide; ++j) {
        const double b = std::clamp(best.triple.b + j * step, box_lo, box_hi);
        visit_column(a, b, env, min_cos, max_cos);
      }
    }
    best = minimize ? min_cos : max_cos;
  }
  return best;
}

// Upper bound on |d cos / d(a or b)| along a moving window endpoint, over the
// whole box. Direct partials are each at most 1/(2(1-delta)); the endpoint
// itself shifts with slope at most max(2, 1 + sqrt((1+d)/(1-d))).
double cos_lipschitz_per_axis(double delta) {
  const double lo = 1.0 - delta;
  const double hi = 1.0 + delta;
  const double endpoint_slope = std::max(2.0, 1.0 + std::sqrt(hi / lo));
  return 1.0 / lo + endpoint_slope / (2.0 * lo);
}

// The search can only have missed a smaller cos on the minimizing side (and
// a larger one on the maximizing side), so the angle uncertainty is
// one-sided: push the achieved cos by the grid slack in that direction.
double angle_slack(double cos_hat, double delta_cos) {
  const double alpha = std::acos(std::clamp(cos_hat, -1.0, 1.0));
  const double pushed = std::acos(std::clamp(cos_hat - delta_cos, -1.0, 1.0));
  return std::fabs(pushed - alpha);
}

}  // namespace

OracleResult oracle_extremes(const RipScenario& scenario, int grid_per_axis) {
  if (grid_per_axis < 16) {
    throw std::domain_error("grid_per_axis must be at least 16");
  }
  const DistanceEnvelope env = compute_envelope(scenario);
  const double box_lo = 1.0 - scenario.delta;
  const double box_hi = 1.0 + scenario.delta;
  const int n = grid_per_axis;
  const double step = (box_hi - box_lo) / (n - 1);

  // Coarse pass. Keep a handful of well-separated runner-up columns per
  // objective so refinement cannot get trapped in a secondary basin.
  struct Candidate {
    double cos_value;
    FeasibleTriple triple;
  };
  std::vector<Candidate> low_cols;
  std::vector<Candidate> high_cols;
  low_cols.reserve(static_cast<std::size_t>(n) * n);
  high_cols.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double a = box_lo + i * step;
    for (int j = 0; j < n; ++j) {
      const double b = box_lo + j * step;
      const Window w = window_for(a, b, env);
      if (!w.feasible) continue;
      low_cols.push_back({cos_of(a, b, w.hi), {a, b, w.hi}});
      high_cols.push_back({cos_of(a, b, w.lo), {a, b, w.lo}});
    }
  }
  if (low_cols.empty()) {
    throw std::logic_error("feasible grid is empty for a valid scenario");
  }

  auto pick_seeds = [&](std::vector<Candidate>& cols, bool ascending) {
    std::sort(cols.begin(), cols.end(), [&](const Candidate& x, const Candidate& y) {
      return ascending ? x.cos_value < y.cos_value : x.cos_value > y.cos_value;
    });
    std::vector<Candidate> seeds;
    for (const Candidate& c : cols) {
      bool near = false;
      for (const Candidate& s : seeds) {
        if (std::fabs(c.triple.a - s.triple.a) <= 2.0 * step &&
            std::fabs(c.triple.b - s.triple.b) <= 2.0 * step) {
          near = true;
          break;
        }
      }
      if (!near) seeds.push_back(c);
      if (seeds.size() >= 5) break;
    }
    return seeds;
  };

  const auto min_seeds = pick_seeds(low_cols, /*ascending=*/true);
  const auto max_seeds = pick_seeds(high_cols, /*ascending=*/false);

  Extremum best_min;  // smallest cos -> alpha_max
  for (const Candidate& s : min_seeds) {
    Extremum r = refine({s.cos_value, s.triple, true}, step, box_lo, box_hi,
                        env, /*minimize=*/true);
    if (!best_min.found || r.cos_value < best_min.cos_value) best_min = r;
  }
  Extremum best_max;  // largest cos -> alpha_min
  for (const Candidate& s : max_seeds) {
    Extremum r = refine({s.cos_value, s.triple, true}, step, box_lo, box_hi,
                        env, /*minimize=*/false);
    if (!best_max.found || r.cos_value > best_max.cos_value) best_max = r;
  }

  // Last refinement pass samples at a step below kRefineStop/4; when the
  // coarse grid is already finer than that no refinement runs and the coarse
  // step is the governing cell size.
  const double final_cell = std::min(step, kRefineStop / 4.0);
  const double delta_cos =
      2.0 * cos_lipschitz_per_axis(scenario.delta) * (2.0 * final_cell);

  OracleResult out;
  out.alpha_max = std::acos(std::clamp(best_min.cos_value, -1.0, 1.0));
  out.alpha_min = std::acos(std::clamp(best_max.cos_value, -1.0, 1.0));
  out.argmax_triple = best_min.triple;
  out.argmin_triple = best_max.triple;
  // The 1e-12 pad absorbs arithmetic noise between exactly-hit boundary
  // values and the closed forms evaluated through a different expression.
  out.resolution_bound = std::max(angle_slack(best_min.cos_value, delta_cos),
                                  angle_slack(-best_max.cos_value, delta_cos)) +
                         1e-12;
  return out;
}

ArcPoint constrained_sum_extremum(double c, double lo, double hi, bool maximize) {
  if (!(lo >= 0.0) || hi < lo) {
    throw std::domain_error("bounds must satisfy 0 <= lo <= hi");
  }
  constexpr double tol = 1e-12;
  if (c < 2.0 * lo * lo - tol || c > 2.0 * hi * hi + tol) {
    throw std::domain_error("empty feasible arc: need 2*lo^2 <= c <= 2*hi^2");
  }
  if (maximize) {
    const double s = std::clamp(std::sqrt(c / 2.0), lo, hi);
    // The arc precondition keeps sqrt(c/2) inside [lo, hi], so the symmetric
    // tangency point is always the maximizer.
    return {s, s};
  }
  const double y_sq_at_lo = c - lo * lo;
  if (y_sq_at_lo <= hi * hi + tol) {
    return {lo, std::sqrt(std::max(y_sq_at_lo, 0.0))};
  }
  return {std::sqrt(std::max(c - hi * hi, 0.0)), hi};
}

}  // namespace ripangles
