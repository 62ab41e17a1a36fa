#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ripangles/report.hpp"

namespace ripangles {

/// Outcome of one CLI command: the CSV body, a human summary, the manifest
/// parameters, and the process exit code (0 ok, 1 soundness violation).
struct CommandResult {
  std::string csv;
  std::string summary;
  RunManifest manifest;
  int exit_code = 0;
};

CommandResult run_bounds(double delta, double theta_rad);

CommandResult run_sweep(const std::vector<double>& deltas,
                        const std::vector<double>& thetas_rad,
                        bool with_oracle, int grid_per_axis);

CommandResult run_ric_delta(double delta);
CommandResult run_ric_tau(double tau);
CommandResult run_ric_omp(int K_max);

CommandResult run_containment(int p, int K, int m, int trials,
                              std::uint64_t seed,
                              const std::vector<double>& theta_list,
                              bool reuse_matrix,
                              std::optional<double> design_delta);

CommandResult run_projric(int p, int K, int m, int k_I, int trials,
                          std::uint64_t seed);

CommandResult run_omp_recovery(int p, int K_max, int trials,
                               std::uint64_t seed, double sizing_constant);

CommandResult run_omp_certify(int p, int m, int K, int trials,
                              std::uint64_t seed);

/// Default theta grid for containment runs: 5 deg steps over (0, 90].
std::vector<double> default_theta_grid();

}  // namespace ripangles
