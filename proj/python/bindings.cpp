// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the main operations. Randomized functions take an
// explicit 64-bit seed instead of a generator handle.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gaa/analytic.hpp"
#include "gaa/array.hpp"
#include "gaa/detector.hpp"
#include "gaa/estimator.hpp"
#include "gaa/experiments.hpp"
#include "gaa/montecarlo.hpp"
#include "gaa/scenario.hpp"
#include "gaa/signal.hpp"
#include "gaa/version.hpp"

namespace py = pybind11;
using namespace gaa;

namespace {

std::string run_command(const Scenario& sc, const std::string& command,
                        const std::string& sweep_var) {
  std::ostringstream out;
  if (command == "threshold") {
    run_threshold(sc, out);
  } else if (command == "roc") {
    run_roc(sc, out);
  } else if (command == "sweep") {
    run_sweep(sc, sweep_var, out);
  } else if (command == "estimate-demo") {
    run_estimate_demo(sc, out);
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_gaa, m) {
  m.doc() = "Physical-layer authentication of UAV control packets";
  m.attr("__version__") = kVersion;

  py::class_<ArrayGeometry>(m, "ArrayGeometry")
      .def(py::init<int, int>(), py::arg("m_half") = 6, py::arg("n_y") = 12)
      .def_readwrite("m_half", &ArrayGeometry::m_half)
      .def_readwrite("n_y", &ArrayGeometry::n_y)
      .def_property_readonly("total", &ArrayGeometry::total);

  py::class_<DirectionCosines>(m, "DirectionCosines")
      .def(py::init<double, double>(), py::arg("omega") = 0.0, py::arg("mu") = 0.0)
      .def_readwrite("omega", &DirectionCosines::omega)
      .def_readwrite("mu", &DirectionCosines::mu);

  py::class_<AnglePair>(m, "AnglePair")
      .def(py::init<double, double>(), py::arg("theta") = 0.0, py::arg("phi") = 0.0)
      .def_readwrite("theta", &AnglePair::theta)
      .def_readwrite("phi", &AnglePair::phi);

  py::class_<TerminalProfile>(m, "TerminalProfile")
      .def(py::init<>())
      .def_readwrite("power_mw", &TerminalProfile::power_mw)
      .def_readwrite("distance_m", &TerminalProfile::distance_m)
      .def_readwrite("rician_lambda_sq", &TerminalProfile::rician_lambda_sq)
      .def_readwrite("direction", &TerminalProfile::direction)
      .def_readwrite("path_loss_exp", &TerminalProfile::path_loss_exp)
      .def_property_readonly("delta_sq", &TerminalProfile::delta_sq)
      .def_property_readonly("kappa", &TerminalProfile::kappa);

  py::class_<LinkConstants>(m, "LinkConstants")
      .def_readonly("los_amp", &LinkConstants::los_amp)
      .def_readonly("eps_sq", &LinkConstants::eps_sq)
      .def_readonly("x_amp", &LinkConstants::x_amp);

  py::enum_<Hypothesis>(m, "Hypothesis").value("H0", Hypothesis::H0).value("H1", Hypothesis::H1);

  py::class_<NoiseParams>(m, "NoiseParams")
      .def(py::init<double>(), py::arg("sigma_sq") = 0.01)
      .def_readwrite("sigma_sq", &NoiseParams::sigma_sq);

  py::class_<ReceivedVector>(m, "ReceivedVector")
      .def(py::init<>())
      .def_readwrite("y_bar", &ReceivedVector::y_bar)
      .def_readwrite("sigma_sq", &ReceivedVector::sigma_sq);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<double, bool>(), py::arg("step") = 0.005, py::arg("refine") = false)
      .def_readwrite("step", &GridSpec::step)
      .def_readwrite("refine", &GridSpec::refine);

  py::class_<EstimateSet>(m, "EstimateSet")
      .def_readonly("dir_hat", &EstimateSet::dir_hat)
      .def_readonly("x_sq_hat", &EstimateSet::x_sq_hat)
      .def_readonly("lambda_sq_hat", &EstimateSet::lambda_sq_hat)
      .def_readonly("psi_hat", &EstimateSet::psi_hat)
      .def_readonly("xi_star", &EstimateSet::xi_star)
      .def_readonly("peak", &EstimateSet::peak)
      .def_readonly("low_confidence", &EstimateSet::low_confidence);

  py::class_<GcsKnowledge>(m, "GcsKnowledge")
      .def_readonly("profile", &GcsKnowledge::profile)
      .def_readonly("consts", &GcsKnowledge::consts)
      .def_readonly("a0_bar", &GcsKnowledge::a0_bar);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("statistic", &Verdict::statistic)
      .def_readonly("threshold", &Verdict::threshold)
      .def_readonly("decision", &Verdict::decision);

  py::class_<AuthReport>(m, "AuthReport")
      .def_readonly("verdict", &AuthReport::verdict)
      .def_readonly("estimate", &AuthReport::estimate)
      .def_readonly("floored", &AuthReport::floored);

  py::class_<FarModel>(m, "FarModel")
      .def(py::init<int, int>(), py::arg("l_ant") = 25, py::arg("k_split") = 2)
      .def_readwrite("l_ant", &FarModel::l_ant)
      .def_readwrite("k_split", &FarModel::k_split);

  py::class_<SdrModel>(m, "SdrModel")
      .def(py::init<>())
      .def_readwrite("l_ant", &SdrModel::l_ant)
      .def_readwrite("rho_factor", &SdrModel::rho_factor)
      .def_readwrite("beta_norm_sq", &SdrModel::beta_norm_sq)
      .def_readwrite("beta1", &SdrModel::beta1)
      .def_readwrite("rho_tail", &SdrModel::rho_tail);

  py::class_<RootPair>(m, "RootPair")
      .def_readonly("q_lo", &RootPair::q_lo)
      .def_readonly("q_hi", &RootPair::q_hi);

  py::class_<SdrCcdf>(m, "SdrCcdf")
      .def_readonly("value", &SdrCcdf::value)
      .def_readonly("converged", &SdrCcdf::converged)
      .def_readonly("terms", &SdrCcdf::terms);

  py::class_<RateEstimate>(m, "RateEstimate")
      .def_readonly("rate", &RateEstimate::rate)
      .def_readonly("std_err", &RateEstimate::std_err)
      .def_readonly("n", &RateEstimate::n);

  m.def("angles_to_cosines", &angles_to_cosines, py::arg("angles"));
  m.def("distance_from_height", &distance_from_height, py::arg("height_m"), py::arg("theta"));
  m.def("steering_vector", &steering_vector, py::arg("geom"), py::arg("dir"));
  m.def("link_constants", &link_constants, py::arg("profile"), py::arg("sigma_sq"));
  m.def(
      "synth_channel",
      [](const TerminalProfile& p, const ArrayGeometry& g, std::uint64_t seed) {
        Rng rng(seed);
        const ChannelRealization ch = synth_channel(p, g, rng);
        return py::make_tuple(ch.f, ch.h);
      },
      py::arg("profile"), py::arg("geom"), py::arg("seed"),
      "Returns (f, h) for one seeded channel draw");
  m.def("unitary_completion", &unitary_completion, py::arg("u"));

  m.def(
      "transmit",
      [](Hypothesis hyp, const TerminalProfile& p, double psi, const NoiseParams& noise,
         const ArrayGeometry& geom, std::uint64_t seed) {
        Rng rng(seed);
        return transmit(hyp, p, psi, noise, geom, rng);
      },
      py::arg("hyp"), py::arg("profile"), py::arg("psi"), py::arg("noise"), py::arg("geom"),
      py::arg("seed"));

  m.def(
      "grid_search_direction",
      [](const ReceivedVector& rv, const ArrayGeometry& geom, const GridSpec& grid) {
        const GridSearchResult r = grid_search_direction(rv, geom, grid);
        return py::make_tuple(r.dir, r.peak);
      },
      py::arg("received"), py::arg("geom"), py::arg("grid"));
  m.def(
      "estimate_all",
      [](const ReceivedVector& rv, const ArrayGeometry& geom, const GridSpec& grid) {
        return estimate_all(rv, geom, grid);
      },
      py::arg("received"), py::arg("geom"), py::arg("grid"));
  m.def("nll_objective", &nll_objective, py::arg("received"), py::arg("x"), py::arg("lam"),
        py::arg("dir"), py::arg("psi"), py::arg("geom"), py::arg("sigma_sq"));

  m.def("make_gcs_knowledge", &make_gcs_knowledge, py::arg("profile"), py::arg("sigma_sq"),
        py::arg("geom"));
  m.def("glr_statistic", &glr_statistic, py::arg("received"), py::arg("knowledge"),
        py::arg("geom"), py::arg("grid"));
  m.def("decide", &decide, py::arg("statistic"), py::arg("threshold"));
  m.def("authenticate", &authenticate, py::arg("received"), py::arg("knowledge"), py::arg("geom"),
        py::arg("grid"), py::arg("threshold"));

  m.def("gamma_segment", &gamma_segment, py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("fixed_points", &fixed_points, py::arg("tau"));
  m.def("far_cdf", &far_cdf, py::arg("tau"), py::arg("model"));
  m.def("far_threshold", &far_threshold, py::arg("eta"), py::arg("model"));
  m.def("build_sdr_model", &build_sdr_model, py::arg("gcs"), py::arg("ma_profile"),
        py::arg("psi"), py::arg("sigma_sq"), py::arg("geom"));
  m.def("noncentral_pdf", &noncentral_pdf, py::arg("x"), py::arg("model"));
  m.def("sdr_ccdf", &sdr_ccdf, py::arg("tau"), py::arg("model"));

  py::class_<TrialConfig>(m, "TrialConfig")
      .def(py::init<>())
      .def_readwrite("n_trials", &TrialConfig::n_trials)
      .def_readwrite("master_seed", &TrialConfig::master_seed)
      .def_readwrite("hypothesis", &TrialConfig::hypothesis)
      .def_readwrite("geom", &TrialConfig::geom)
      .def_readwrite("gcs", &TrialConfig::gcs)
      .def_readwrite("ma_profile", &TrialConfig::ma_profile)
      .def_readwrite("psi", &TrialConfig::psi)
      .def_readwrite("grid", &TrialConfig::grid)
      .def_readwrite("noise", &TrialConfig::noise)
      .def_readwrite("n_threads", &TrialConfig::n_threads);

  m.def(
      "trial_statistics",
      [](const TrialConfig& cfg) {
        const TrialStats stats = trial_statistics(cfg);
        return py::make_tuple(stats.statistic, stats.floored);
      },
      py::arg("config"), "Returns (statistics, floored_count)");
  m.def("run_trials", &run_trials, py::arg("config"), py::arg("threshold"));
  m.def("roc_curve", &roc_curve, py::arg("config_h0"), py::arg("config_h1"),
        py::arg("thresholds"));

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("trials", &Scenario::trials)
      .def_readwrite("seed", &Scenario::seed)
      .def_readwrite("threads", &Scenario::threads)
      .def_readwrite("grid_step", &Scenario::grid_step)
      .def_readwrite("eta_list", &Scenario::eta_list)
      .def("geometry", &Scenario::geometry)
      .def("gcs_profile", &Scenario::gcs_profile)
      .def("ma_profile", &Scenario::ma_profile)
      .def("far_model", &Scenario::far_model);
  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def("run_command", &run_command, py::arg("scenario"), py::arg("command"),
        py::arg("sweep_var") = "",
        "Runs one CLI experiment and returns its CSV/JSON text");
  m.def("dbm_to_mw", &dbm_to_mw, py::arg("dbm"));
  m.def("mw_to_dbm", &mw_to_dbm, py::arg("mw"));
}
