#include "ripangles/ric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ripangles {

namespace {

void require_open_unit(double x, const char* name) {
  if (!(x > 0.0) || !(x < 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in (0, 1)");
  }
}

}  // namespace

double projected_ric(double delta) {
  require_open_unit(delta, "delta");
  return std::min(1.0, delta + delta * delta / (1.0 + delta));
}

double algebraic_projected_ric(double delta) {
  require_open_unit(delta, "delta");
  return std::min(1.0, delta / (1.0 - delta));
}

double reconstruction_error_bound(double ric, double eps) {
  if (ric < 0.0 || eps < 0.0) {
    throw std::domain_error("ric and eps must be nonnegative");
  }
  const double limit = std::numbers::sqrt2 - 1.0;
  if (ric >= limit) {
    throw std::domain_error("ric must be below sqrt(2)-1 for a stable bound");
  }
  return 4.0 * (1.0 + ric) * eps / (1.0 - limit * ric);
}

double invert_projected_ric(double tau) {
  require_open_unit(tau, "tau");
  return (tau - 1.0 + std::sqrt(tau * tau + 6.0 * tau + 1.0)) / 4.0;
}

double invert_algebraic_ric(double tau) {
  if (!(tau > 0.0) || !(tau <= 1.0)) {
    throw std::domain_error("tau must lie in (0, 1]");
  }
  return tau / (tau + 1.0);
}

double measurement_reduction(double tau) {
  require_open_unit(tau, "tau");
  const double proposed = invert_projected_ric(tau);
  const double algebraic = invert_algebraic_ric(tau);
  const double ratio = algebraic / proposed;
  return 1.0 - ratio * ratio;
}

double omp_ric_threshold(std::int64_t K) {
  if (K < 1) throw std::domain_error("K must be at least 1");
  const double rk = std::sqrt(static_cast<double>(K));
  return (1.0 - 2.0 * rk + std::sqrt(4.0 * static_cast<double>(K) + 12.0 * rk + 1.0)) /
         (8.0 * rk);
}

double omp_ric_threshold_prior(std::int64_t K) {
  if (K < 1) throw std::domain_error("K must be at least 1");
  return 1.0 / (1.0 + std::sqrt(2.0 * static_cast<double>(K)));
}

}  // namespace ripangles
