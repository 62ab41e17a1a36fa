// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path is argv[1]; criteria that pin the external
// interface run the real binary, the rest call the library directly.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ripangles/angle_bounds.hpp"
#include "ripangles/commands.hpp"
#include "ripangles/envelope.hpp"
#include "ripangles/oracle.hpp"
#include "ripangles/report.hpp"
#include "ripangles/ric.hpp"
#include "ripangles/sensing.hpp"

using namespace ripangles;

namespace {

std::string g_cli;
int g_failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << name << " - " << detail << "\n";
  if (!pass) ++g_failures;
}

int run_cli(const std::string& args) {
  const int status = std::system(("'" + g_cli + "' " + args).c_str());
  return status < 0 ? -1 : WEXITSTATUS(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<double> delta_grid_18() {
  std::vector<double> out;
  for (int i = 1; i <= 18; ++i) out.push_back(0.05 * i);
  return out;
}

std::vector<double> theta_grid_18() {
  std::vector<double> out;
  for (int i = 1; i <= 18; ++i) out.push_back(to_radians(5.0 * i));
  return out;
}

// Criterion 1: closed forms against the brute-force search, 0.01 degrees.
void criterion_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const double tol = to_radians(0.01);
  double worst_dev = 0.0;
  double worst_res = 0.0;
  int points = 0;
  bool pass = true;
  for (const double delta : delta_grid_18()) {
    for (const double theta : theta_grid_18()) {
      const RipScenario sc = normalize_scenario(delta, theta);
      const OracleResult oracle = oracle_extremes(sc, 96);
      const double dev_max = std::fabs(oracle.alpha_max - alpha_max(sc));
      const double dev_min = std::fabs(oracle.alpha_min - alpha_min(sc));
      worst_dev = std::max({worst_dev, dev_max, dev_min});
      worst_res = std::max(worst_res, oracle.resolution_bound);
      if (dev_max > tol || dev_min > tol) pass = false;
      ++points;
    }
  }
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::ostringstream detail;
  detail << points << " grid points, max |closed-oracle| = "
         << fmt_num(to_degrees(worst_dev)) << " deg (tol 0.01 deg), max "
         << "resolution bound = " << fmt_num(to_degrees(worst_res))
         << " deg, " << fmt_num(elapsed) << " s";
  report(1, "oracle equivalence", pass, detail.str());
}

// Criterion 2: the orthogonal special case is an exact reduction.
void criterion_orthogonal_reduction() {
  double worst = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double delta = i / 1001.0;
    const AngleInterval direct = orthogonal_interval(delta);
    const AngleInterval general = angle_interval(delta, kPi / 2.0);
    worst = std::max(worst, std::fabs(direct.alpha_min - general.alpha_min));
    worst = std::max(worst, std::fabs(direct.alpha_max - general.alpha_max));
  }
  report(2, "orthogonal-case reduction", worst <= 1e-12,
         "1000 deltas, max endpoint gap = " + fmt_num(worst) + " rad (tol 1e-12)");
}

// Criterion 3: the interval bound never exceeds the polarization bound, and
// the two comparison curves are emitted as CSV through the CLI.
void criterion_tightness() {
  double worst_excess = -1.0;
  for (const double delta : delta_grid_18()) {
    for (const double theta : theta_grid_18()) {
      const CosRange range = achievable_cos_range(delta, theta);
      const double bound = polarization_cos_bound(delta, theta);
      worst_excess = std::max(worst_excess, range.hi - bound);
    }
  }
  bool pass = worst_excess <= 1e-12;

  const std::string out = "acceptance_out/figure6_delta_02_03.csv";
  const int code =
      run_cli("sweep --delta 0.2 --delta 0.3 --out " + out + " >/dev/null 2>&1");
  const std::string body = read_file(out);
  const bool emitted = code == 0 && body.find("cos_lo") != std::string::npos &&
                       body.find("pol_bound") != std::string::npos &&
                       std::count(body.begin(), body.end(), '\n') == 37;
  pass = pass && emitted;
  report(3, "tightness vs polarization bound", pass,
         "max(range.hi - bound) = " + fmt_num(worst_excess) +
             " (tol 1e-12); curve CSV rows emitted: " +
             (emitted ? "yes" : "no"));
}

// Criterion 4: Monte Carlo containment at desk scale, ten seeds.
void criterion_containment() {
  const auto start = std::chrono::steady_clock::now();
  int violations = 0;
  int excluded = 0;
  long total = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SensingConfig config{256, 128, 8, seed, 2000};
    const ContainmentReport rep =
        containment_experiment(config, theta_grid_18());
    violations += rep.violations;
    excluded += rep.excluded;
    total += static_cast<long>(rep.rows.size());
  }
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::ostringstream detail;
  detail << total << " pairs over 10 seeds, violations = " << violations
         << " (tol 1e-8 rad), excluded = " << excluded << ", "
         << fmt_num(elapsed) << " s";
  report(4, "Monte Carlo containment", violations == 0 && total == 20000,
         detail.str());
}

// Criterion 5: projected-RIC dominance, empirical bound, worked example.
void criterion_projected_ric() {
  bool dominance = true;
  for (int i = 1; i < 1000; ++i) {
    const double delta = i / 1000.0;
    const double bar = projected_ric(delta);
    const double bar_a = algebraic_projected_ric(delta);
    if (bar_a < 1.0 && !(bar < bar_a)) dominance = false;
  }
  SensingConfig config{128, 96, 10, 2024, 1};
  const ProjectedRicReport rep = projected_ric_experiment(config, 4, 500);
  const double example = projected_ric(0.3217);
  const double example_printed = projected_ric(0.3208);
  const bool example_ok = std::fabs(example - 0.4) <= 1e-3 &&
                          std::fabs(example_printed - 0.4) <= 2e-3;
  const bool pass = dominance && rep.violations == 0 && example_ok;
  std::ostringstream detail;
  detail << "dominance on 999 grid points: " << (dominance ? "yes" : "no")
         << "; 500 trials, violations = " << rep.violations
         << ", mean slack = " << fmt_num(rep.mean_slack)
         << "; ric(0.3217) = " << fmt_num(example) << " (0.4 +- 1e-3)";
  report(5, "projected RIC", pass, detail.str());
}

// Criterion 6: the threshold root solves its quadratic and round-trips.
void criterion_threshold_identity() {
  double worst_residual = 0.0;
  double worst_round = 0.0;
  for (int K = 1; K <= 100; ++K) {
    const double d = omp_ric_threshold(K);
    const double rk = std::sqrt(static_cast<double>(K));
    worst_residual = std::max(
        worst_residual,
        std::fabs(4.0 * rk * d * d + (2.0 * rk - 1.0) * d - 1.0));
    worst_round =
        std::max(worst_round, std::fabs(2.0 * projected_ric(d) * rk - 1.0));
  }
  report(6, "recovery-threshold identity",
         worst_residual <= 1e-10 && worst_round <= 1e-10,
         "K in 1..100, max quadratic residual = " + fmt_num(worst_residual) +
             ", max round-trip gap = " + fmt_num(worst_round) + " (tol 1e-10)");
}

// Criterion 7: certified tiny-scale exact recovery, 100/100.
void criterion_certified_recovery() {
  const auto start = std::chrono::steady_clock::now();
  const CommandResult result = run_omp_certify(32, 28, 2, 100, 7);
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  report(7, "certified greedy recovery", result.exit_code == 0,
         result.summary + ", " + fmt_num(elapsed) + " s");
}

// Criterion 8: the threshold table reports the computed ordering explicitly
// instead of asserting any expected direction.
void criterion_ordering_note() {
  const std::string out = "acceptance_out/ric_omp.csv";
  const int code = run_cli("ric --omp-K 10 --out " + out + " >/dev/null 2>&1");
  const std::string body = read_file(out);
  bool pass = code == 0;
  std::istringstream lines(body);
  std::string line;
  std::getline(lines, line);
  pass = pass && line == "K,delta_prior,delta_proposed,ordering,reduction_vs_prior";
  int rows = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cell_stream(line);
    std::string cell;
    while (std::getline(cell_stream, cell, ',')) cells.push_back(cell);
    if (cells.size() != 5) {
      pass = false;
      continue;
    }
    const double prior = std::stod(cells[1]);
    const double proposed = std::stod(cells[2]);
    const std::string expected =
        proposed < prior ? "proposed_lt_prior" : "proposed_ge_prior";
    if (cells[3] != expected) pass = false;
    ++rows;
  }
  pass = pass && rows == 10;
  report(8, "threshold-ordering note", pass,
         "10 rows, note column matches the computed ordering of the two curves");
}

// Criterion 9: byte-identical CSV bodies on rerun for every experiment command.
void criterion_determinism() {
  const struct {
    const char* name;
    std::string args;
  } cases[] = {
      {"sweep", "sweep --delta 0.2 --delta 0.3 --oracle --grid-n 32"},
      {"containment", "containment --p 64 --K 4 --m 32 --trials 50 --seed 11"},
      {"projric", "projric --p 64 --K 6 --m 48 --kI 2 --trials 40 --seed 11"},
      {"omp-recovery", "omp --p 64 --K 2 --trials 10 --seed 11"},
      {"omp-certify", "omp --p 32 --m 28 --K 2 --certify --trials 20 --seed 11"},
      {"ric", "ric --omp-K 8"},
  };
  bool pass = true;
  std::string failed;
  for (const auto& c : cases) {
    const std::string a = "acceptance_out/det_a.csv";
    const std::string b = "acceptance_out/det_b.csv";
    const int code_a = run_cli(c.args + " --out " + a + " >/dev/null 2>&1");
    const int code_b = run_cli(c.args + " --out " + b + " >/dev/null 2>&1");
    const std::string body_a = read_file(a);
    if (code_a != code_b || body_a.empty() || body_a != read_file(b)) {
      pass = false;
      failed += std::string(" ") + c.name;
    }
  }
  report(9, "determinism", pass,
         pass ? "6 commands rerun byte-identically" : ("mismatch:" + failed));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];
  std::system("mkdir -p acceptance_out");

  criterion_oracle_equivalence();
  criterion_orthogonal_reduction();
  criterion_tightness();
  criterion_containment();
  criterion_projected_ric();
  criterion_threshold_identity();
  criterion_certified_recovery();
  criterion_ordering_note();
  criterion_determinism();

  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed\n";
  return 1;
}
