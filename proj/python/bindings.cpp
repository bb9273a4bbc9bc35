#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tadgame/errors.hpp"
#include "tadgame/game.hpp"
#include "tadgame/numerical.hpp"
#include "tadgame/orbit.hpp"
#include "tadgame/riccati.hpp"
#include "tadgame/scenario.hpp"
#include "tadgame/winning.hpp"

namespace py = pybind11;

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

RowMatrix stack_states(const tad::Trajectory& t) {
  RowMatrix out(t.size(), 12);
  for (std::size_t k = 0; k < t.size(); ++k) out.row(k) = t.states[k].stacked();
  return out;
}

RowMatrix stack_costates(const tad::Trajectory& t) {
  RowMatrix out(t.costates.size(), 12);
  for (std::size_t k = 0; k < t.costates.size(); ++k) {
    out.row(k) = t.costates[k].stacked();
  }
  return out;
}

RowMatrix stack_controls(const tad::Trajectory& t) {
  RowMatrix out(t.size(), 6);
  for (std::size_t k = 0; k < t.size(); ++k) {
    out.row(k).head<3>() = t.controls[k].u_a;
    out.row(k).tail<3>() = t.controls[k].u_d;
  }
  return out;
}

RowMatrix stack_distances(const tad::Trajectory& t) {
  RowMatrix out(t.size(), 2);
  for (std::size_t k = 0; k < t.size(); ++k) {
    out(k, 0) = t.distances[k].attacker_target;
    out(k, 1) = t.distances[k].defender_attacker;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_tadgame, m) {
  m.doc() = "Analytical LQ target-attacker-defender game on elliptic orbits";

  auto base = py::register_exception<tad::Error>(m, "TadError", PyExc_RuntimeError);
  py::register_exception<tad::ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<tad::InitialStateError>(m, "InitialStateError", base.ptr());
  auto anomaly = py::register_exception<tad::AnomalyError>(m, "AnomalyError", base.ptr());
  py::register_exception<tad::SingularFactor>(m, "SingularFactor", anomaly.ptr());
  py::register_exception<tad::NumericalBlowup>(m, "NumericalBlowup", anomaly.ptr());
  py::register_exception<tad::SingularBlock>(m, "SingularBlock", anomaly.ptr());

  py::class_<tad::ReferenceOrbit>(m, "ReferenceOrbit")
      .def(py::init<double, double, double>(), py::arg("mu"), py::arg("p"),
           py::arg("e"))
      .def_property_readonly("mu", &tad::ReferenceOrbit::mu)
      .def_property_readonly("p", &tad::ReferenceOrbit::p)
      .def_property_readonly("e", &tad::ReferenceOrbit::e)
      .def_property_readonly("n", &tad::ReferenceOrbit::n)
      .def_property_readonly("beta", &tad::ReferenceOrbit::beta);

  py::class_<tad::WeightSet>(m, "WeightSet")
      .def(py::init<>())
      .def(py::init([](double r_a, double r_d, double s_ar, double s_av,
                       double s_dar, double s_dav) {
             return tad::WeightSet{r_a, r_d, s_ar, s_av, s_dar, s_dav};
           }),
           py::arg("r_a"), py::arg("r_d"), py::arg("s_ar"), py::arg("s_av"),
           py::arg("s_dar"), py::arg("s_dav"))
      .def_readwrite("r_a", &tad::WeightSet::r_a)
      .def_readwrite("r_d", &tad::WeightSet::r_d)
      .def_readwrite("s_ar", &tad::WeightSet::s_ar)
      .def_readwrite("s_av", &tad::WeightSet::s_av)
      .def_readwrite("s_dar", &tad::WeightSet::s_dar)
      .def_readwrite("s_dav", &tad::WeightSet::s_dav)
      .def("terminal", &tad::WeightSet::terminal);

  py::class_<tad::GameConfig>(m, "GameConfig")
      .def(py::init<tad::ReferenceOrbit>(), py::arg("orbit"))
      .def_readwrite("orbit", &tad::GameConfig::orbit)
      .def_readwrite("weights", &tad::GameConfig::weights)
      .def_readwrite("f0", &tad::GameConfig::f0)
      .def_readwrite("ff", &tad::GameConfig::ff)
      .def_readwrite("h_f", &tad::GameConfig::h_f)
      .def_readwrite("R1", &tad::GameConfig::r1)
      .def_readwrite("R2", &tad::GameConfig::r2)
      .def_readwrite("xa0", &tad::GameConfig::x_a0)
      .def_readwrite("xda0", &tad::GameConfig::x_da0)
      .def("validate", &tad::GameConfig::validate)
      .def("steps", &tad::GameConfig::steps)
      .def("anomaly", &tad::GameConfig::anomaly, py::arg("k"))
      .def("hovering", &tad::GameConfig::hovering)
      .def("with_defender_position", &tad::GameConfig::with_defender_position,
           py::arg("rd0"))
      .def("with_eccentricity", &tad::GameConfig::with_eccentricity, py::arg("e"))
      .def("with_step", &tad::GameConfig::with_step, py::arg("h_f"))
      .def("__repr__", [](const tad::GameConfig& c) {
        return "<GameConfig e=" + std::to_string(c.orbit.e()) +
               " steps=" + std::to_string(c.steps()) + ">";
      });

  py::class_<tad::Trajectory>(m, "Trajectory")
      .def_property_readonly("grid", [](const tad::Trajectory& t) { return t.grid; })
      .def_property_readonly("states", &stack_states)
      .def_property_readonly("costates", &stack_costates)
      .def_property_readonly("controls", &stack_controls)
      .def_property_readonly("distances", &stack_distances)
      .def_readonly("cost", &tad::Trajectory::cost)
      .def("__len__", &tad::Trajectory::size);

  py::class_<tad::WinVerdict>(m, "WinVerdict")
      .def_readonly("attacker_wins", &tad::WinVerdict::attacker_wins)
      .def_readonly("f_a", &tad::WinVerdict::f_a)
      .def_readonly("index", &tad::WinVerdict::index);

  py::class_<tad::Ellipsoid>(m, "Ellipsoid")
      .def_readonly("G", &tad::Ellipsoid::g)
      .def_readonly("center_offset", &tad::Ellipsoid::center_offset)
      .def_readonly("radius", &tad::Ellipsoid::radius)
      .def("q", &tad::Ellipsoid::q, py::arg("r"))
      .def("contains", &tad::Ellipsoid::contains, py::arg("r"));

  py::class_<tad::Outcome>(m, "Outcome")
      .def_property_readonly("tag",
                             [](const tad::Outcome& o) { return tad::to_string(o.tag); })
      .def_readonly("f_capture", &tad::Outcome::f_capture)
      .def_readonly("f_intercept", &tad::Outcome::f_intercept);

  m.def("reference_config", &tad::reference_config);
  m.def("parse_scenario", &tad::parse_scenario, py::arg("text"));
  m.def("load_scenario", &tad::load_scenario, py::arg("path"));
  m.def("format_scenario", &tad::format_scenario, py::arg("config"));

  m.def("phi", &tad::phi, py::arg("orbit"), py::arg("f"));
  m.def("phi_inv", &tad::phi_inv, py::arg("orbit"), py::arg("f"));
  m.def("true_to_eccentric", &tad::true_to_eccentric, py::arg("orbit"), py::arg("f"));
  m.def("eccentric_to_true", &tad::eccentric_to_true, py::arg("orbit"), py::arg("E"));
  m.def("c_hat", &tad::c_hat, py::arg("orbit"), py::arg("E"));

  m.def(
      "riccati_p",
      [](const tad::ReferenceOrbit& orbit, const tad::WeightSet& w, double f,
         double ff) { return tad::riccati_p(orbit, w, f, ff).p.value; },
      py::arg("orbit"), py::arg("weights"), py::arg("f"), py::arg("ff"));
  m.def(
      "d_matrix",
      [](const tad::GameConfig& c, double f) { return tad::d_matrix(c, f).d.value; },
      py::arg("config"), py::arg("f"));

  m.def(
      "propagate_analytical",
      [](const tad::GameConfig& c, bool feedback) {
        py::gil_scoped_release release;
        return tad::propagate_analytical(c, {feedback});
      },
      py::arg("config"), py::arg("feedback_from_riccati") = false);
  m.def(
      "simulate_numerical",
      [](const tad::GameConfig& c, int substeps) {
        py::gil_scoped_release release;
        tad::NumericalOptions opts;
        opts.riccati_substeps = substeps;
        return tad::simulate_numerical(c, opts);
      },
      py::arg("config"), py::arg("riccati_substeps") = 10);

  m.def(
      "classify_outcome",
      [](const tad::GameConfig& c, const tad::Trajectory& t) {
        return tad::classify_outcome(t, tad::terminal_sets(c));
      },
      py::arg("config"), py::arg("trajectory"));
  m.def("attacker_wins", py::overload_cast<const tad::GameConfig&>(&tad::attacker_wins),
        py::arg("config"));
  m.def("winning_set_membership", &tad::winning_set_membership, py::arg("config"),
        py::arg("rd0"));
  m.def("g1", py::overload_cast<const tad::GameConfig&, double, const tad::Vec3&>(&tad::g1),
        py::arg("config"), py::arg("f"), py::arg("rd0"));
  m.def("g2", py::overload_cast<const tad::GameConfig&, double, const tad::Vec3&>(&tad::g2),
        py::arg("config"), py::arg("f"), py::arg("rd0"));
  m.def(
      "ellipsoid_at",
      [](const tad::GameConfig& c, double f, const std::string& which) {
        if (which != "S1" && which != "S2") {
          throw py::value_error("which must be 'S1' or 'S2'");
        }
        return tad::ellipsoid_at(c, f, which == "S1" ? tad::WhichSet::kS1
                                                     : tad::WhichSet::kS2);
      },
      py::arg("config"), py::arg("f"), py::arg("which"));
}
