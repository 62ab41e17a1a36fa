#include "ripangles/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ripangles/angle_bounds.hpp"
#include "ripangles/ric.hpp"

namespace ripangles {

namespace {

constexpr double kContainmentTol = 1e-8;
constexpr double kProjectedTol = 1e-8;
constexpr double kResidualFloor = 1e-12;

std::vector<int> draw_support(int p, int K, RandomStream& stream) {
  std::vector<int> idx(p);
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < K; ++i) {
    const int j = i + static_cast<int>(stream.below(static_cast<std::uint64_t>(p - i)));
    std::swap(idx[i], idx[j]);
  }
  std::vector<int> support(idx.begin(), idx.begin() + K);
  std::sort(support.begin(), support.end());
  return support;
}

Eigen::VectorXd random_unit(int K, RandomStream& stream) {
  Eigen::VectorXd v(K);
  double norm = 0.0;
  do {
    for (int i = 0; i < K; ++i) v[i] = stream.normal();
    norm = v.norm();
  } while (norm < 1e-14);
  return v / norm;
}

Eigen::MatrixXd gather_columns(const Eigen::MatrixXd& matrix,
                               const std::vector<int>& indices) {
  Eigen::MatrixXd sub(matrix.rows(), static_cast<Eigen::Index>(indices.size()));
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const int j = indices[k];
    if (j < 0 || j >= matrix.cols()) {
      throw std::domain_error("support index out of range");
    }
    sub.col(static_cast<Eigen::Index>(k)) = matrix.col(j);
  }
  return sub;
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t limit = UINT64_MAX / static_cast<std::uint64_t>(n - k + i);
    if (result > limit) return UINT64_MAX;
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
    if (result > cap * 16) return result;  // already far past the cap
  }
  return result;
}

}  // namespace

void SensingConfig::validate() const {
  if (K < 1 || m < K || p <= m) {
    throw std::domain_error("config must satisfy 1 <= K <= m < p");
  }
  if (trials < 1) throw std::domain_error("trials must be at least 1");
}

Eigen::MatrixXd gaussian_sensing_matrix(int m, int p, RandomStream& stream) {
  if (m < 1 || p < 1) throw std::domain_error("matrix shape must be positive");
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  Eigen::MatrixXd out(m, p);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) out(i, j) = stream.normal() * scale;
  }
  return out;
}

Eigen::MatrixXd gaussian_sensing_matrix(const SensingConfig& config,
                                        RandomStream& stream) {
  config.validate();
  return gaussian_sensing_matrix(config.m, config.p, stream);
}

SparsePairSample sparse_pair(int p, int K, double theta, RandomStream& stream) {
  if (K < 2 || K > p) throw std::domain_error("need 2 <= K <= p");
  if (!(theta > 0.0) || !(theta < kPi)) {
    throw std::domain_error("theta must lie in (0, pi)");
  }
  const std::vector<int> support = draw_support(p, K, stream);
  const Eigen::VectorXd v_local = random_unit(K, stream);

  Eigen::VectorXd w_local(K);
  bool ok = false;
  for (int attempt = 0; attempt < 16 && !ok; ++attempt) {
    Eigen::VectorXd g = random_unit(K, stream);
    w_local = g - g.dot(v_local) * v_local;
    const double norm = w_local.norm();
    if (norm > 1e-12) {
      w_local /= norm;
      ok = true;
    }
  }
  if (!ok) {
    throw std::runtime_error("orthogonal draw degenerated 16 times");
  }

  const Eigen::VectorXd u_local =
      std::cos(theta) * v_local + std::sin(theta) * w_local;

  SparsePairSample sample;
  sample.u = Eigen::VectorXd::Zero(p);
  sample.v = Eigen::VectorXd::Zero(p);
  for (int k = 0; k < K; ++k) {
    sample.u[support[k]] = u_local[k];
    sample.v[support[k]] = v_local[k];
  }
  sample.support_u = support;
  sample.support_v = support;
  sample.theta = theta;
  return sample;
}

double angle_between(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const double nx = x.norm();
  const double ny = y.norm();
  if (nx == 0.0 || ny == 0.0) {
    throw std::domain_error("angle_between requires nonzero vectors");
  }
  return std::acos(std::clamp(x.dot(y) / (nx * ny), -1.0, 1.0));
}

double support_ric(const Eigen::MatrixXd& matrix,
                   const std::vector<int>& support) {
  if (static_cast<Eigen::Index>(support.size()) > matrix.rows()) {
    throw std::domain_error("support larger than the measurement count");
  }
  if (support.empty()) return 0.0;
  const Eigen::MatrixXd sub = gather_columns(matrix, support);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(sub);
  const auto& sigma = svd.singularValues();
  const double hi = sigma(0) * sigma(0);
  const double lo = sigma(sigma.size() - 1) * sigma(sigma.size() - 1);
  return std::max(hi - 1.0, 1.0 - lo);
}

double exhaustive_ric(const Eigen::MatrixXd& matrix, int order,
                      std::uint64_t cap) {
  const int p = static_cast<int>(matrix.cols());
  if (order < 1 || order > p) throw std::domain_error("order out of range");
  const std::uint64_t count = binomial_capped(p, order, cap);
  if (count > cap) {
    throw std::domain_error("subset count " + std::to_string(count) +
                            " exceeds the enumeration cap of " +
                            std::to_string(cap));
  }
  std::vector<int> combo(order);
  std::iota(combo.begin(), combo.end(), 0);
  double worst = 0.0;
  while (true) {
    worst = std::max(worst, support_ric(matrix, combo));
    int i = order - 1;
    while (i >= 0 && combo[i] == p - order + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < order; ++j) combo[j] = combo[j - 1] + 1;
  }
  return worst;
}

Eigen::MatrixXd projection_complement(const Eigen::MatrixXd& matrix,
                                      const std::vector<int>& indices) {
  const Eigen::Index m = matrix.rows();
  if (indices.empty()) return Eigen::MatrixXd::Identity(m, m);
  const Eigen::MatrixXd sub = gather_columns(matrix, indices);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sub);
  if (qr.rank() < sub.cols()) {
    throw std::domain_error("indexed columns are rank deficient");
  }
  const Eigen::MatrixXd q_thin =
      qr.householderQ() * Eigen::MatrixXd::Identity(m, sub.cols());
  return Eigen::MatrixXd::Identity(m, m) - q_thin * q_thin.transpose();
}

ContainmentReport containment_experiment(const SensingConfig& config,
                                         const std::vector<double>& theta_list,
                                         bool reuse_matrix,
                                         std::optional<double> design_delta) {
  config.validate();
  if (theta_list.empty()) throw std::domain_error("theta_list is empty");

  ContainmentReport report;
  report.rows.reserve(static_cast<std::size_t>(config.trials));

  Eigen::MatrixXd shared;
  if (reuse_matrix) {
    RandomStream stream = RandomStream::for_trial(config.seed, 0);
    shared = gaussian_sensing_matrix(config.m, config.p, stream);
  }

  for (int t = 0; t < config.trials; ++t) {
    RandomStream stream = RandomStream::for_trial(config.seed, t + 1);
    const Eigen::MatrixXd fresh =
        reuse_matrix ? Eigen::MatrixXd()
                     : gaussian_sensing_matrix(config.m, config.p, stream);
    const Eigen::MatrixXd& phi = reuse_matrix ? shared : fresh;
    const double theta = theta_list[t % theta_list.size()];
    SparsePairSample pair = sparse_pair(config.p, config.K, theta, stream);

    ContainmentRow row;
    row.trial = t;
    row.theta = theta;
    row.measured_alpha = angle_between(phi * pair.u, phi * pair.v);
    row.support_ric_value = support_ric(phi, pair.support_u);

    if (row.support_ric_value >= 1.0) {
      row.excluded = true;
      ++report.excluded;
    } else {
      const AngleInterval iv = angle_interval(row.support_ric_value, theta);
      row.alpha_lo = iv.alpha_min;
      row.alpha_hi = iv.alpha_max;
      row.violation = row.measured_alpha < iv.alpha_min - kContainmentTol ||
                      row.measured_alpha > iv.alpha_max + kContainmentTol;
      if (row.violation) ++report.violations;
    }
    if (design_delta) {
      const AngleInterval dv = angle_interval(*design_delta, theta);
      row.design_alpha_lo = dv.alpha_min;
      row.design_alpha_hi = dv.alpha_max;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ProjectedRicReport projected_ric_experiment(const SensingConfig& config,
                                            int k_I, int trials) {
  config.validate();
  if (k_I < 1 || k_I >= config.K) {
    throw std::domain_error("need 1 <= kI < K");
  }
  if (trials < 1) throw std::domain_error("trials must be at least 1");

  ProjectedRicReport report;
  report.rows.reserve(static_cast<std::size_t>(trials));
  double slack_sum = 0.0;
  double slack_max = 0.0;

  for (int t = 0; t < trials; ++t) {
    RandomStream stream = RandomStream::for_trial(config.seed, t + 1);
    const Eigen::MatrixXd phi =
        gaussian_sensing_matrix(config.m, config.p, stream);

    const std::vector<int> joint = draw_support(config.p, config.K, stream);
    std::vector<int> shuffled = joint;
    for (std::size_t i = 0; i + 1 < shuffled.size(); ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(stream.below(shuffled.size() - i));
      std::swap(shuffled[i], shuffled[j]);
    }
    std::vector<int> interference(shuffled.begin(), shuffled.begin() + k_I);
    std::vector<int> signal(shuffled.begin() + k_I, shuffled.end());
    std::sort(interference.begin(), interference.end());
    std::sort(signal.begin(), signal.end());

    Eigen::VectorXd x = Eigen::VectorXd::Zero(config.p);
    const Eigen::VectorXd coeffs =
        random_unit(static_cast<int>(signal.size()), stream);
    for (std::size_t k = 0; k < signal.size(); ++k) x[signal[k]] = coeffs[k];

    const Eigen::MatrixXd proj = projection_complement(phi, interference);
    const Eigen::VectorXd compressed = phi * x;
    const Eigen::VectorXd filtered = proj * compressed;

    ProjectedRicRow row;
    row.trial = t;
    row.ratio = filtered.squaredNorm() / x.squaredNorm();
    row.support_ric_value = support_ric(phi, joint);
    row.lower = 1.0 - (row.support_ric_value < 1.0
                           ? projected_ric(row.support_ric_value)
                           : 1.0);
    row.upper = 1.0 + row.support_ric_value;
    row.violation = row.ratio < row.lower - kProjectedTol ||
                    row.ratio > row.upper + kProjectedTol;
    row.slack = std::min(row.ratio - row.lower, row.upper - row.ratio);
    if (row.violation) ++report.violations;
    slack_sum += row.slack;
    slack_max = std::max(slack_max, row.slack);

    // Angle form of the projection identity: the filtered energy equals the
    // compressed energy scaled by sin^2 of the angle to the projected-out
    // component.
    const Eigen::MatrixXd sub = gather_columns(phi, interference);
    const Eigen::VectorXd coeff_i =
        sub.colPivHouseholderQr().solve(compressed);
    const Eigen::VectorXd in_span = sub * coeff_i;
    if (in_span.norm() > 1e-12 * compressed.norm()) {
      const double cos_part = compressed.dot(in_span) /
                              (compressed.norm() * in_span.norm());
      const double expected =
          compressed.squaredNorm() * (1.0 - cos_part * cos_part);
      const double rel = std::fabs(filtered.squaredNorm() - expected) /
                         compressed.squaredNorm();
      report.max_projection_identity_residual =
          std::max(report.max_projection_identity_residual, rel);
    }
    report.rows.push_back(row);
  }

  report.mean_slack = slack_sum / trials;
  report.slack_histogram.assign(16, 0);
  report.slack_bin_width = slack_max > 0.0 ? slack_max / 16.0 : 0.0;
  for (const ProjectedRicRow& row : report.rows) {
    int bin = report.slack_bin_width > 0.0
                  ? static_cast<int>(row.slack / report.slack_bin_width)
                  : 0;
    bin = std::clamp(bin, 0, 15);
    ++report.slack_histogram[static_cast<std::size_t>(bin)];
  }
  return report;
}

OmpReport omp(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& y, int K) {
  const int p = static_cast<int>(matrix.cols());
  if (K < 0 || K > matrix.rows()) {
    throw std::domain_error("need 0 <= K <= m");
  }
  OmpReport report;
  report.coefficients = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd residual = y;
  report.residual_norms.push_back(residual.norm());

  std::vector<int> selected;
  std::vector<char> used(static_cast<std::size_t>(p), 0);
  Eigen::VectorXd solution;

  for (int it = 0; it < K; ++it) {
    if (residual.norm() < kResidualFloor) break;
    const Eigen::VectorXd corr = matrix.transpose() * residual;
    int best = -1;
    double best_abs = -1.0;
    for (int j = 0; j < p; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double a = std::fabs(corr[j]);
      if (a > best_abs) {
        best_abs = a;
        best = j;
      }
    }
    if (best < 0) break;
    selected.push_back(best);
    used[static_cast<std::size_t>(best)] = 1;

    const Eigen::MatrixXd sub = gather_columns(matrix, selected);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sub);
    if (qr.rank() < sub.cols()) {
      report.aborted = true;
      selected.pop_back();
      break;
    }
    solution = qr.solve(y);
    residual = y - sub * solution;
    report.residual_norms.push_back(residual.norm());
  }

  report.iterations = static_cast<int>(selected.size());
  for (std::size_t k = 0; k < selected.size(); ++k) {
    report.coefficients[selected[k]] = solution[static_cast<Eigen::Index>(k)];
  }
  report.recovered_support = selected;
  std::sort(report.recovered_support.begin(), report.recovered_support.end());
  return report;
}

bool is_exact_recovery(const OmpReport& report, const Eigen::VectorXd& x_true,
                       double tol) {
  if (report.aborted) return false;
  std::vector<int> truth;
  for (int j = 0; j < x_true.size(); ++j) {
    if (x_true[j] != 0.0) truth.push_back(j);
  }
  if (truth != report.recovered_support) return false;
  return (report.coefficients - x_true).norm() < tol;
}

std::vector<OmpRecoveryRow> omp_recovery_experiment(
    const SensingConfig& base, const std::vector<int>& K_range, int trials,
    double sizing_constant) {
  if (base.p < 4) throw std::domain_error("p too small");
  if (trials < 1) throw std::domain_error("trials must be at least 1");
  std::vector<OmpRecoveryRow> rows;

  for (const int K : K_range) {
    if (K < 1 || K >= base.p) throw std::domain_error("K out of range");
    const double delta_prior = omp_ric_threshold_prior(K);
    const double delta_proposed = omp_ric_threshold(K);
    const double reduction =
        1.0 - (delta_prior / delta_proposed) * (delta_prior / delta_proposed);

    const struct {
      const char* name;
      double delta;
      std::uint64_t tag;
    } formulas[] = {{"prior", delta_prior, 1}, {"proposed", delta_proposed, 2}};

    for (const auto& f : formulas) {
      const double raw = sizing_constant * K *
                         std::log(static_cast<double>(base.p) / K) /
                         (f.delta * f.delta);
      int m = static_cast<int>(std::ceil(raw));
      OmpRecoveryRow row;
      row.K = K;
      row.formula = f.name;
      row.delta = f.delta;
      row.capped = m > base.p - 1;
      m = std::clamp(m, K, base.p - 1);
      row.m = m;
      row.trials = trials;
      row.reduction = reduction;

      for (int t = 0; t < trials; ++t) {
        RandomStream stream = RandomStream::for_trial(
            base.seed ^ (static_cast<std::uint64_t>(K) << 32) ^ f.tag, t + 1);
        const Eigen::MatrixXd phi = gaussian_sensing_matrix(m, base.p, stream);
        const std::vector<int> support = draw_support(base.p, K, stream);
        Eigen::VectorXd x = Eigen::VectorXd::Zero(base.p);
        for (const int j : support) {
          double value = stream.normal();
          while (std::fabs(value) < 1e-6) value = stream.normal();
          x[j] = value;
        }
        const OmpReport report = omp(phi, phi * x, K);
        if (is_exact_recovery(report, x)) ++row.exact_count;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Eigen::MatrixXd designed_low_coherence_matrix(int m, int p) {
  const int extras = p - m;
  if (extras < 1 || (extras & (extras - 1)) != 0 || extras > 8 ||
      m % extras != 0) {
    throw std::domain_error(
        "designed matrix needs p - m in {1, 2, 4, 8} dividing m");
  }
  // Sylvester construction for the small Hadamard block.
  Eigen::MatrixXd hadamard = Eigen::MatrixXd::Ones(1, 1);
  while (hadamard.rows() < extras) {
    const Eigen::Index n = hadamard.rows();
    Eigen::MatrixXd next(2 * n, 2 * n);
    next.topLeftCorner(n, n) = hadamard;
    next.topRightCorner(n, n) = hadamard;
    next.bottomLeftCorner(n, n) = hadamard;
    next.bottomRightCorner(n, n) = -hadamard;
    hadamard = next;
  }

  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, p);
  out.leftCols(m) = Eigen::MatrixXd::Identity(m, m);
  const int block = m / extras;
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (int k = 0; k < extras; ++k) {
    for (int b = 0; b < extras; ++b) {
      for (int r = 0; r < block; ++r) {
        out(b * block + r, m + k) = hadamard(k, b) * scale;
      }
    }
  }
  return out;
}

}  // namespace ripangles
