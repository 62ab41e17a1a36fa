#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ripangles/commands.hpp"
#include "ripangles/report.hpp"

namespace {

using ripangles::CommandResult;

struct OutputSink {
  std::string path;  // empty -> stdout

  int deliver(const CommandResult& result) const {
    if (path.empty()) {
      std::cout << result.csv;
      std::cerr << result.summary << "\n";
    } else {
      ripangles::write_csv_with_manifest(path, result.csv, [&] {
        ripangles::RunManifest manifest = result.manifest;
        manifest.output_path = path;
        return manifest;
      }());
      std::cout << result.summary << "\n";
    }
    return result.exit_code;
  }
};

std::vector<double> degrees_to_radians(const std::vector<double>& degs) {
  std::vector<double> out;
  out.reserve(degs.size());
  for (const double d : degs) out.push_back(ripangles::to_radians(d));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Achievable-angle analysis for isometry-constrained compressed sparse vectors"};
  app.require_subcommand(1);

  std::string out_path;
  const auto add_out = [&out_path](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the CSV here plus a .manifest sidecar");
  };

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form angle interval at one (delta, theta)");
  double b_delta = 0.0, b_theta_deg = 0.0, b_theta_rad = 0.0;
  auto* b_delta_opt = bounds->add_option("--delta", b_delta, "Isometry constant in (0,1)")->required();
  auto* b_deg = bounds->add_option("--theta-deg", b_theta_deg, "Ambient angle, degrees");
  auto* b_rad = bounds->add_option("--theta-rad", b_theta_rad, "Ambient angle, radians");
  b_deg->excludes(b_rad);
  add_out(bounds);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Interval + comparison bound over a (delta, theta) grid");
  std::vector<double> s_deltas;
  std::vector<double> s_thetas_deg;
  bool s_oracle = false;
  int s_grid_n = 96;
  sweep->add_option("--delta", s_deltas, "Delta grid values (repeatable)");
  sweep->add_option("--theta-deg", s_thetas_deg, "Theta grid values, degrees (repeatable)");
  sweep->add_flag("--oracle", s_oracle, "Also run the brute-force search per point");
  sweep->add_option("--grid-n", s_grid_n, "Oracle grid points per axis")->capture_default_str();
  add_out(sweep);

  // ric
  auto* ric = app.add_subcommand("ric", "Projected-RIC calculus and recovery thresholds");
  double r_delta = 0.0, r_tau = 0.0;
  int r_omp_k = 0;
  auto* r_delta_opt = ric->add_option("--delta", r_delta, "Emit RIC curves; summary at this delta");
  auto* r_tau_opt = ric->add_option("--tau", r_tau, "Invert the projected RIC at this target");
  auto* r_omp_opt = ric->add_option("--omp-K", r_omp_k, "Emit recovery-threshold table up to this K");
  r_delta_opt->excludes(r_tau_opt)->excludes(r_omp_opt);
  r_tau_opt->excludes(r_omp_opt);
  add_out(ric);

  // containment
  auto* containment = app.add_subcommand("containment", "Monte Carlo containment of measured angles");
  int c_p = 256, c_K = 8, c_m = 128, c_trials = 2000;
  std::uint64_t c_seed = 0;
  bool c_reuse = false;
  double c_design_delta = 0.0;
  std::vector<double> c_thetas_deg;
  containment->add_option("--p", c_p, "Ambient dimension")->capture_default_str();
  containment->add_option("--K", c_K, "Sparsity budget")->capture_default_str();
  containment->add_option("--m", c_m, "Measurement count")->capture_default_str();
  containment->add_option("--trials", c_trials, "Sample pairs")->capture_default_str();
  containment->add_option("--seed", c_seed, "Seed")->capture_default_str();
  containment->add_flag("--reuse-matrix", c_reuse, "One matrix per run instead of per sample");
  auto* c_design = containment->add_option("--design-delta", c_design_delta,
                                           "Also emit bounds at this fixed delta");
  containment->add_option("--theta-deg", c_thetas_deg, "Theta list, degrees (repeatable)");
  add_out(containment);

  // projric
  auto* projric = app.add_subcommand("projric", "Projected-isometry bound check per trial");
  int pr_p = 128, pr_K = 10, pr_m = 96, pr_kI = 4, pr_trials = 500;
  std::uint64_t pr_seed = 0;
  projric->add_option("--p", pr_p, "Ambient dimension")->capture_default_str();
  projric->add_option("--K", pr_K, "Union sparsity")->capture_default_str();
  projric->add_option("--m", pr_m, "Measurement count")->capture_default_str();
  projric->add_option("--kI", pr_kI, "Projected-out support size")->capture_default_str();
  projric->add_option("--trials", pr_trials, "Trials")->capture_default_str();
  projric->add_option("--seed", pr_seed, "Seed")->capture_default_str();
  add_out(projric);

  // omp
  auto* omp_cmd = app.add_subcommand("omp", "Greedy recovery experiments");
  int o_p = 256, o_K = 8, o_m = 0, o_trials = 100;
  std::uint64_t o_seed = 0;
  bool o_certify = false;
  double o_sizing = 0.5;
  omp_cmd->add_option("--p", o_p, "Ambient dimension")->capture_default_str();
  omp_cmd->add_option("--K", o_K, "Sparsity (certify) or max sparsity (recovery)")
      ->capture_default_str();
  auto* o_m_opt = omp_cmd->add_option("--m", o_m, "Measurement count (certify mode)");
  omp_cmd->add_option("--trials", o_trials, "Trials per row")->capture_default_str();
  omp_cmd->add_option("--seed", o_seed, "Seed")->capture_default_str();
  omp_cmd->add_flag("--certify", o_certify, "Exhaustively certify the instance first");
  omp_cmd->add_option("--sizing-constant", o_sizing, "Constant in m ~ c*K*log(p/K)/delta^2")
      ->capture_default_str();
  add_out(omp_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const OutputSink sink{out_path};
  try {
    if (*bounds) {
      if (!*b_deg && !*b_rad) {
        std::cerr << "bounds requires --theta-deg or --theta-rad\n";
        return 2;
      }
      (void)b_delta_opt;
      const double theta = *b_deg ? ripangles::to_radians(b_theta_deg) : b_theta_rad;
      return sink.deliver(ripangles::run_bounds(b_delta, theta));
    }
    if (*sweep) {
      if (s_deltas.empty()) {
        for (int i = 1; i <= 18; ++i) s_deltas.push_back(0.05 * i);
      }
      std::vector<double> thetas = degrees_to_radians(s_thetas_deg);
      if (thetas.empty()) thetas = ripangles::default_theta_grid();
      return sink.deliver(ripangles::run_sweep(s_deltas, thetas, s_oracle, s_grid_n));
    }
    if (*ric) {
      if (*r_delta_opt) return sink.deliver(ripangles::run_ric_delta(r_delta));
      if (*r_tau_opt) return sink.deliver(ripangles::run_ric_tau(r_tau));
      if (*r_omp_opt) return sink.deliver(ripangles::run_ric_omp(r_omp_k));
      std::cerr << "ric requires one of --delta, --tau, --omp-K\n";
      return 2;
    }
    if (*containment) {
      std::vector<double> thetas = degrees_to_radians(c_thetas_deg);
      if (thetas.empty()) thetas = ripangles::default_theta_grid();
      std::optional<double> design;
      if (*c_design) design = c_design_delta;
      return sink.deliver(ripangles::run_containment(c_p, c_K, c_m, c_trials,
                                                     c_seed, thetas, c_reuse,
                                                     design));
    }
    if (*projric) {
      return sink.deliver(ripangles::run_projric(pr_p, pr_K, pr_m, pr_kI,
                                                 pr_trials, pr_seed));
    }
    if (*omp_cmd) {
      if (o_certify) {
        if (!*o_m_opt) {
          std::cerr << "omp --certify requires --m\n";
          return 2;
        }
        return sink.deliver(ripangles::run_omp_certify(o_p, o_m, o_K, o_trials, o_seed));
      }
      return sink.deliver(ripangles::run_omp_recovery(o_p, o_K, o_trials, o_seed, o_sizing));
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
