#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "tomqkd/oracle.hpp"
#include "tomqkd/privacy_amplification.hpp"

namespace py = pybind11;
using namespace tomqkd;

PYBIND11_MODULE(_tomqkd, m) {
  m.doc() = "two-way vs BB84 weak-coherent QKD key-rate toolkit";
  m.attr("__version__") = "0.1.0";

  py::enum_<Protocol>(m, "Protocol")
      .value("bb84", Protocol::bb84)
      .value("tom", Protocol::tom);
  py::enum_<RateMode>(m, "RateMode")
      .value("pessimistic", RateMode::pessimistic)
      .value("photon_resolved", RateMode::photon_resolved);

  py::class_<SourceModel>(m, "SourceModel")
      .def(py::init<double>(), py::arg("mu"))
      .def_readonly("mu", &SourceModel::mu);
  m.def("pulse_probability", &pulse_probability, py::arg("source"), py::arg("n"));
  m.def(
      "pulse_probability",
      [](double mu, int n) { return pulse_probability(SourceModel(mu), n); },
      py::arg("mu"), py::arg("n"));
  m.def("multiphoton_tail", &multiphoton_tail, py::arg("source"),
        py::arg("threshold"));
  m.def(
      "multiphoton_tail",
      [](double mu, int threshold) {
        return multiphoton_tail(SourceModel(mu), threshold);
      },
      py::arg("mu"), py::arg("threshold"));

  py::class_<AttackAngles>(m, "AttackAngles")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
      .def_readonly("alpha", &AttackAngles::alpha)
      .def_readonly("beta", &AttackAngles::beta);
  py::class_<PathFidelities>(m, "PathFidelities")
      .def_readonly("bob_fidelity", &PathFidelities::bob_fidelity)
      .def_readonly("eve_fidelity", &PathFidelities::eve_fidelity);
  m.def("path_fidelities", &path_fidelities, py::arg("theta"));
  m.def(
      "eve_fidelity_two_way",
      [](double alpha, double beta) {
        return eve_fidelity_two_way(AttackAngles(alpha, beta));
      },
      py::arg("alpha"), py::arg("beta"));
  m.def(
      "ab_fidelity_two_way",
      [](double alpha, double beta) {
        return ab_fidelity_two_way(AttackAngles(alpha, beta));
      },
      py::arg("alpha"), py::arg("beta"));
  m.def("binary_entropy", &binary_entropy, py::arg("p"));

  py::class_<InfoCurves>(m, "InfoCurves")
      .def_readonly("i_ab", &InfoCurves::i_ab)
      .def_readonly("i_tom", &InfoCurves::i_tom)
      .def_readonly("i_ir", &InfoCurves::i_ir)
      .def_readonly("i_bb84", &InfoCurves::i_bb84);
  m.def("mutual_info_curves", &mutual_info_curves, py::arg("disturbance"));

  py::class_<EqualAngleReport>(m, "EqualAngleReport")
      .def_readonly("phi", &EqualAngleReport::phi)
      .def_readonly("resolution", &EqualAngleReport::resolution)
      .def_readonly("grid_step", &EqualAngleReport::grid_step)
      .def_readonly("max_fidelity", &EqualAngleReport::max_fidelity)
      .def_readonly("alpha_at_max", &EqualAngleReport::alpha_at_max)
      .def_readonly("beta_at_max", &EqualAngleReport::beta_at_max)
      .def_readonly("equal_angle_fidelity",
                    &EqualAngleReport::equal_angle_fidelity);
  m.def("verify_equal_angle_optimality", &verify_equal_angle_optimality,
        py::arg("phi"), py::arg("resolution") = 1000);

  m.def("tau_lutkenhaus", &tau_lutkenhaus, py::arg("e"));
  m.def("tau_tom", &tau_tom, py::arg("e"));
  m.def(
      "renyi_entropy_order2",
      [](const std::vector<double>& p) {
        return renyi_entropy_order2(std::span<const double>(p));
      },
      py::arg("probabilities"));
  m.def("two_photon_renyi_gain", &two_photon_renyi_gain, py::arg("alpha"));

  py::class_<ChannelParams>(m, "ChannelParams")
      .def(py::init<>())
      .def_readwrite("gamma_db_per_km", &ChannelParams::gamma_db_per_km)
      .def_readwrite("distance_km", &ChannelParams::distance_km)
      .def_readwrite("eta_bob", &ChannelParams::eta_bob)
      .def_readwrite("eta_alice", &ChannelParams::eta_alice)
      .def_readwrite("p_dark", &ChannelParams::p_dark)
      .def_readwrite("e_det", &ChannelParams::e_det)
      .def_readwrite("e0", &ChannelParams::e0)
      .def_readwrite("f_ec", &ChannelParams::f_ec)
      .def("validate", &ChannelParams::validate)
      .def("with_distance", &ChannelParams::with_distance, py::arg("km"))
      .def("with_eta_alice", &ChannelParams::with_eta_alice, py::arg("value"));
  m.def("transmittance", &transmittance, py::arg("params"),
        py::arg("path_length_km"));
  m.def("effective_transmission", &effective_transmission, py::arg("params"),
        py::arg("protocol"));

  py::class_<GainAndError>(m, "GainAndError")
      .def_readonly("gain", &GainAndError::gain)
      .def_readonly("qber", &GainAndError::qber);
  m.def("gain_and_qber", &gain_and_qber, py::arg("params"), py::arg("mu"),
        py::arg("protocol"));

  py::class_<PhotonYield>(m, "PhotonYield")
      .def_readonly("yield_", &PhotonYield::yield)
      .def_readonly("error_rate", &PhotonYield::error_rate);
  m.def("photon_number_yield", &photon_number_yield, py::arg("params"),
        py::arg("photons"), py::arg("protocol"));

  py::register_exception<PresetError>(m, "PresetError");
  m.def("parse_preset", &parse_preset, py::arg("text"));
  m.def("load_preset", &load_preset, py::arg("file"));

  py::class_<RatePoint>(m, "RatePoint")
      .def_readonly("distance_km", &RatePoint::distance_km)
      .def_readonly("mu", &RatePoint::mu)
      .def_readonly("gain", &RatePoint::gain)
      .def_readonly("qber", &RatePoint::qber)
      .def_readonly("beta", &RatePoint::beta)
      .def_readonly("rate", &RatePoint::rate);
  m.def("beta_fraction", &beta_fraction, py::arg("gain"), py::arg("source"),
        py::arg("protocol"));
  m.def("key_rate_pessimistic", &key_rate_pessimistic, py::arg("params"),
        py::arg("mu"), py::arg("protocol"));
  m.def("key_rate_photon_resolved", &key_rate_photon_resolved,
        py::arg("params"), py::arg("mu"), py::arg("protocol"));
  m.def("key_rate", &key_rate, py::arg("params"), py::arg("mu"),
        py::arg("protocol"), py::arg("mode"));

  py::class_<OptimizeResult>(m, "OptimizeResult")
      .def_readonly("mu_opt", &OptimizeResult::mu_opt)
      .def_readonly("rate_opt", &OptimizeResult::rate_opt)
      .def_readonly("positive_rate", &OptimizeResult::positive_rate)
      .def_readonly("point", &OptimizeResult::point);
  m.def("optimize_mu", &optimize_mu, py::arg("params"), py::arg("distance_km"),
        py::arg("protocol"), py::arg("mode") = RateMode::pessimistic,
        py::call_guard<py::gil_scoped_release>());

  py::class_<DistanceGrid>(m, "DistanceGrid")
      .def(py::init([](double start, double stop, double step) {
             return DistanceGrid{start, stop, step};
           }),
           py::arg("start_km"), py::arg("stop_km"), py::arg("step_km"))
      .def_readonly("start_km", &DistanceGrid::start_km)
      .def_readonly("stop_km", &DistanceGrid::stop_km)
      .def_readonly("step_km", &DistanceGrid::step_km)
      .def("points", &DistanceGrid::points);

  py::class_<SweepSeries>(m, "SweepSeries")
      .def_readonly("protocol", &SweepSeries::protocol)
      .def_readonly("points", &SweepSeries::points)
      .def_readonly("max_distance_km", &SweepSeries::max_distance_km);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("mode", &SweepResult::mode)
      .def_readonly("distances_km", &SweepResult::distances_km)
      .def_readonly("series", &SweepResult::series)
      .def_readonly("ratio_k", &SweepResult::ratio_k)
      .def_readonly("crossover_km", &SweepResult::crossover_km);
  m.def(
      "sweep",
      [](const ChannelParams& params, const DistanceGrid& grid,
         const std::vector<Protocol>& protocols, RateMode mode) {
        return sweep(params, grid, std::span<const Protocol>(protocols), mode);
      },
      py::arg("params"), py::arg("grid"),
      py::arg("protocols") =
          std::vector<Protocol>{Protocol::bb84, Protocol::tom},
      py::arg("mode") = RateMode::pessimistic,
      py::call_guard<py::gil_scoped_release>());

  py::class_<ConditionCheck>(m, "ConditionCheck")
      .def_readonly("threshold", &ConditionCheck::threshold)
      .def_readonly("holds", &ConditionCheck::holds);
  m.def("check_sufficient_condition", &check_sufficient_condition,
        py::arg("params"), py::arg("distance_km"), py::arg("intensity_ratio"));

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("check", &OracleReport::check)
      .def_readonly("analytic", &OracleReport::analytic)
      .def_readonly("oracle_value", &OracleReport::oracle_value)
      .def_readonly("deviation", &OracleReport::deviation)
      .def_readonly("tolerance", &OracleReport::tolerance)
      .def_readonly("pass_", &OracleReport::pass)
      .def_readonly("samples", &OracleReport::samples)
      .def_readonly("std_error", &OracleReport::std_error);
  m.def("enumerate_eve_fidelity", &enumerate_eve_fidelity, py::arg("angles"));
  m.def("enumerate_ab_fidelity", &enumerate_ab_fidelity, py::arg("angles"));
  m.def("monte_carlo_ir", &monte_carlo_ir, py::arg("attacked_fraction"),
        py::arg("samples"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());
  m.def("dense_grid_mu_check", &dense_grid_mu_check, py::arg("params"),
        py::arg("distance_km"), py::arg("protocol"), py::arg("mode"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_oracle_suite", &run_oracle_suite, py::arg("params"),
        py::arg("seed") = 42, py::arg("samples") = 1000000,
        py::call_guard<py::gil_scoped_release>());
}
