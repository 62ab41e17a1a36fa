#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ripangles/rng.hpp"

namespace ripangles {

/// Shape and reproducibility parameters of one Monte Carlo experiment.
struct SensingConfig {
  int p = 0;                 ///< ambient dimension
  int m = 0;                 ///< measurement count
  int K = 0;                 ///< sparsity budget for the union support
  std::uint64_t seed = 0;    ///< reproducibility seed
  int trials = 1;

  void validate() const;     ///< throws std::domain_error on bad shapes
};

/// A controlled-angle unit pair supported on a common index set.
struct SparsePairSample {
  Eigen::VectorXd u;
  Eigen::VectorXd v;
  std::vector<int> support_u;
  std::vector<int> support_v;
  double theta = 0.0;
  double measured_alpha = 0.0;   ///< filled by experiments after compression
  double support_ric_value = 0.0;
};

/// m x p matrix with i.i.d. N(0, 1/m) entries, deterministic in the stream.
Eigen::MatrixXd gaussian_sensing_matrix(int m, int p, RandomStream& stream);
Eigen::MatrixXd gaussian_sensing_matrix(const SensingConfig& config,
                                        RandomStream& stream);

/// Draws a support of size K, a unit vector v on it, and u at exact angle
/// theta from v inside the same support (rotate toward an orthogonalized
/// second draw). Throws if the orthogonal draw degenerates 16 times.
SparsePairSample sparse_pair(int p, int K, double theta, RandomStream& stream);

/// Angle in [0, pi] between two nonzero vectors.
double angle_between(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Exact isometry distortion of the column submatrix on one support:
/// max(sigma_max^2 - 1, 1 - sigma_min^2). Requires |support| <= m.
double support_ric(const Eigen::MatrixXd& matrix,
                   const std::vector<int>& support);

/// Maximum of support_ric over every support of the given size. Refuses when
/// the subset count exceeds the cap, reporting the count in the message.
double exhaustive_ric(const Eigen::MatrixXd& matrix, int order,
                      std::uint64_t cap = 2'000'000);

/// Orthogonal projector onto the complement of the span of the indexed
/// columns. Empty index set gives the identity; rank deficiency throws.
Eigen::MatrixXd projection_complement(const Eigen::MatrixXd& matrix,
                                      const std::vector<int>& indices);

struct ContainmentRow {
  int trial = 0;
  double theta = 0.0;
  double measured_alpha = 0.0;
  double support_ric_value = 0.0;
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  bool violation = false;
  bool excluded = false;  ///< support RIC >= 1, bounds undefined
  double design_alpha_lo = 0.0;
  double design_alpha_hi = 0.0;
};

struct ContainmentReport {
  std::vector<ContainmentRow> rows;
  int violations = 0;
  int excluded = 0;
};

/// One compressed pair per trial, with the achievable interval evaluated at
/// the exact per-support RIC; counts tolerance-1e-8 violations (expected 0).
ContainmentReport containment_experiment(
    const SensingConfig& config, const std::vector<double>& theta_list,
    bool reuse_matrix = false, std::optional<double> design_delta = {});

struct ProjectedRicRow {
  int trial = 0;
  double ratio = 0.0;       ///< |P A x|^2 / |x|^2
  double support_ric_value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double slack = 0.0;
  bool violation = false;
};

struct ProjectedRicReport {
  std::vector<ProjectedRicRow> rows;
  int violations = 0;
  double mean_slack = 0.0;
  std::vector<int> slack_histogram;   ///< 16 bins over [0, max slack]
  double slack_bin_width = 0.0;
  double max_projection_identity_residual = 0.0;  ///< relative, per trial
};

/// Projects out a known k_I-column subspace and checks the filtered energy
/// ratio against [1 - projected_ric(ric_T), 1 + ric_T] per trial.
ProjectedRicReport projected_ric_experiment(const SensingConfig& config,
                                            int k_I, int trials);

struct OmpReport {
  std::vector<int> recovered_support;  ///< sorted
  Eigen::VectorXd coefficients;        ///< length p, solved on the support
  int iterations = 0;
  bool exact = false;    ///< set by callers that know the ground truth
  bool aborted = false;  ///< rank-deficient selection, partial result
  std::vector<double> residual_norms;  ///< length iterations + 1
};

/// Orthogonal matching pursuit: K greedy selections by absolute correlation
/// (ties to the lowest column index) with full least-squares refits.
/// Selection stops early once the residual norm falls below 1e-12.
OmpReport omp(const Eigen::MatrixXd& matrix, const Eigen::VectorXd& y, int K);

/// True iff the report's support equals the true support and the coefficient
/// error is below tol in l2.
bool is_exact_recovery(const OmpReport& report, const Eigen::VectorXd& x_true,
                       double tol = 1e-8);

struct OmpRecoveryRow {
  int K = 0;
  std::string formula;   ///< "prior" or "proposed"
  double delta = 0.0;
  int m = 0;
  bool capped = false;   ///< sizing rule wanted more than p-1 measurements
  int exact_count = 0;
  int trials = 0;
  double reduction = 0.0;  ///< 1 - (delta_prior/delta_proposed)^2
};

/// Sizes m from ceil(c * K * log(p/K) / delta^2) for both threshold formulas
/// and measures the empirical exact-recovery fraction.
std::vector<OmpRecoveryRow> omp_recovery_experiment(
    const SensingConfig& base, const std::vector<int>& K_range, int trials,
    double sizing_constant = 0.5);

/// Deterministic m x p design used to exercise certified recovery at tiny
/// scale: an identity block plus (p - m) mutually orthogonal flat columns.
/// Requires p - m to be 1, 2, 4 or 8 and (p - m) to divide m.
Eigen::MatrixXd designed_low_coherence_matrix(int m, int p);

}  // namespace ripangles
