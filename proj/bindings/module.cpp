#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ripangles/angle_bounds.hpp"
#include "ripangles/envelope.hpp"
#include "ripangles/oracle.hpp"
#include "ripangles/report.hpp"
#include "ripangles/ric.hpp"
#include "ripangles/rng.hpp"
#include "ripangles/sensing.hpp"

namespace py = pybind11;
using namespace ripangles;

PYBIND11_MODULE(_ripangles, m) {
  m.doc() = "Achievable angles between compressed sparse vectors under "
            "isometry-constant constraints, plus the downstream RIC calculus.";
  m.attr("__version__") = kArtifactVersion;

  py::class_<RipScenario>(m, "RipScenario")
      .def_readonly("delta", &RipScenario::delta)
      .def_readonly("theta_input", &RipScenario::theta_input)
      .def_readonly("theta", &RipScenario::theta)
      .def_readonly("flipped", &RipScenario::flipped);

  py::class_<DistanceEnvelope>(m, "DistanceEnvelope")
      .def_readonly("d_min_sq", &DistanceEnvelope::d_min_sq)
      .def_readonly("d_max_sq", &DistanceEnvelope::d_max_sq)
      .def_readonly("dt_min_sq", &DistanceEnvelope::dt_min_sq)
      .def_readonly("dt_max_sq", &DistanceEnvelope::dt_max_sq);

  py::class_<FeasibleTriple>(m, "FeasibleTriple")
      .def(py::init([](double a, double b, double d_sq) {
             return FeasibleTriple{a, b, d_sq};
           }),
           py::arg("a"), py::arg("b"), py::arg("d_sq"))
      .def_readonly("a", &FeasibleTriple::a)
      .def_readonly("b", &FeasibleTriple::b)
      .def_readonly("d_sq", &FeasibleTriple::d_sq)
      .def("s_sq", &FeasibleTriple::s_sq);

  py::class_<AngleInterval>(m, "AngleInterval")
      .def_readonly("alpha_min", &AngleInterval::alpha_min)
      .def_readonly("alpha_max", &AngleInterval::alpha_max);

  py::class_<CosRange>(m, "CosRange")
      .def_readonly("lo", &CosRange::lo)
      .def_readonly("hi", &CosRange::hi);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("alpha_min", &OracleResult::alpha_min)
      .def_readonly("alpha_max", &OracleResult::alpha_max)
      .def_readonly("argmin_triple", &OracleResult::argmin_triple)
      .def_readonly("argmax_triple", &OracleResult::argmax_triple)
      .def_readonly("resolution_bound", &OracleResult::resolution_bound);

  py::class_<OmpReport>(m, "OmpReport")
      .def_readonly("recovered_support", &OmpReport::recovered_support)
      .def_readonly("coefficients", &OmpReport::coefficients)
      .def_readonly("iterations", &OmpReport::iterations)
      .def_readonly("exact", &OmpReport::exact)
      .def_readonly("aborted", &OmpReport::aborted)
      .def_readonly("residual_norms", &OmpReport::residual_norms);

  m.def("normalize_scenario", &normalize_scenario, py::arg("delta"),
        py::arg("theta_input"));
  m.def("compute_envelope", &compute_envelope, py::arg("scenario"));
  m.def("is_feasible", &is_feasible, py::arg("triple"), py::arg("envelope"),
        py::arg("delta"), py::arg("tol") = kFeasibilityTol);

  m.def("angle_interval", &angle_interval, py::arg("delta"), py::arg("theta"));
  m.def("orthogonal_interval", &orthogonal_interval, py::arg("delta"));
  m.def("polarization_cos_bound",
        py::overload_cast<double, double>(&polarization_cos_bound),
        py::arg("delta"), py::arg("theta"));
  m.def("achievable_cos_range", &achievable_cos_range, py::arg("delta"),
        py::arg("theta"));

  m.def(
      "oracle_extremes",
      [](double delta, double theta, int grid_per_axis) {
        return oracle_extremes(normalize_scenario(delta, theta), grid_per_axis);
      },
      py::arg("delta"), py::arg("theta"), py::arg("grid_per_axis") = 96);
  m.def(
      "constrained_sum_extremum",
      [](double c, double lo, double hi, bool maximize) {
        const ArcPoint pt = constrained_sum_extremum(c, lo, hi, maximize);
        return py::make_tuple(pt.x, pt.y);
      },
      py::arg("c"), py::arg("lo"), py::arg("hi"), py::arg("maximize"));

  m.def("projected_ric", &projected_ric, py::arg("delta"));
  m.def("algebraic_projected_ric", &algebraic_projected_ric, py::arg("delta"));
  m.def("reconstruction_error_bound", &reconstruction_error_bound,
        py::arg("ric"), py::arg("eps"));
  m.def("invert_projected_ric", &invert_projected_ric, py::arg("tau"));
  m.def("invert_algebraic_ric", &invert_algebraic_ric, py::arg("tau"));
  m.def("measurement_reduction", &measurement_reduction, py::arg("tau"));
  m.def("omp_ric_threshold", &omp_ric_threshold, py::arg("K"));
  m.def("omp_ric_threshold_prior", &omp_ric_threshold_prior, py::arg("K"));

  m.def(
      "gaussian_sensing_matrix",
      [](int m_rows, int p, std::uint64_t seed) {
        RandomStream stream(seed);
        return gaussian_sensing_matrix(m_rows, p, stream);
      },
      py::arg("m"), py::arg("p"), py::arg("seed"));
  m.def(
      "sparse_pair",
      [](int p, int K, double theta, std::uint64_t seed) {
        RandomStream stream(seed);
        const SparsePairSample s = sparse_pair(p, K, theta, stream);
        return py::make_tuple(s.u, s.v, s.support_u);
      },
      py::arg("p"), py::arg("K"), py::arg("theta"), py::arg("seed"));
  m.def("angle_between", &angle_between, py::arg("x"), py::arg("y"));
  m.def("support_ric", &support_ric, py::arg("matrix"), py::arg("support"));
  m.def("exhaustive_ric", &exhaustive_ric, py::arg("matrix"), py::arg("order"),
        py::arg("cap") = 2'000'000);
  m.def("projection_complement", &projection_complement, py::arg("matrix"),
        py::arg("indices"));
  m.def("omp", &omp, py::arg("matrix"), py::arg("y"), py::arg("K"));
  m.def("is_exact_recovery", &is_exact_recovery, py::arg("report"),
        py::arg("x_true"), py::arg("tol") = 1e-8);
  m.def("designed_low_coherence_matrix", &designed_low_coherence_matrix,
        py::arg("m"), py::arg("p"));
}
