#pragma once

#include <cstdint>

namespace ripangles {

/// RIC of the projection-filtered sensing operator: min{1, d + d^2/(1+d)}.
double projected_ric(double delta);

/// The polarization-identity competitor: min{1, d/(1-d)}.
double algebraic_projected_ric(double delta);

/// l2 reconstruction-error bound 4(1+ric)*eps / (1 - (sqrt(2)-1)*ric).
/// Valid only while ric < sqrt(2)-1; throws std::domain_error otherwise.
double reconstruction_error_bound(double ric, double eps);

/// Positive root of 2d^2 + (1-tau)d - tau = 0, inverting projected_ric.
double invert_projected_ric(double tau);

/// Inverse of the algebraic competitor: tau/(tau+1).
double invert_algebraic_ric(double tau);

/// Fractional measurement saving at target tau, using m proportional to
/// 1/delta^2: 1 - (invert_algebraic_ric(tau)/invert_projected_ric(tau))^2.
double measurement_reduction(double tau);

/// Sufficient RIC level for exact K-step greedy recovery: the positive root
/// of 4*sqrt(K)*d^2 + (2*sqrt(K)-1)*d - 1 = 0.
double omp_ric_threshold(std::int64_t K);

/// Previously reported sufficient level: 1/(1 + sqrt(2K)).
double omp_ric_threshold_prior(std::int64_t K);

}  // namespace ripangles
