// Copyright (c) 2026 The qwire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwire/errors.hpp"
#include "qwire/model.hpp"
#include "qwire/runner.hpp"
#include "qwire/special_functions.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace qwire;

namespace {

  template <class F> py::tuple eval_pair(F f, int order, double x) {
    const auto e = f(order, x);
    return py::make_tuple(e.value, e.derivative);
  }

  py::dict spectrum_dict(const Spectrum &s) {
    py::dict d;
    d["photon_energy"] = s.photon_energy;
    d["values"]        = s.values;
    d["peak_energy"]   = s.peak_energy();
    d["peak_value"]    = s.peak_value();
    d["fwhm"]          = s.fwhm();
    return d;
  }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc()            = "qwire core bindings";
  m.attr("__version__") = library_version();

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error &e) {
      py::set_error(error, (e.kind() + ": " + e.what()).c_str());
    }
  });

  py::enum_<Matching>(m, "Matching").value("mass_weighted", Matching::mass_weighted).value("plain", Matching::plain);
  py::enum_<Shape>(m, "Shape").value("cylinder", Shape::cylinder).value("sphere", Shape::sphere);
  py::enum_<LineshapeMode>(m, "LineshapeMode")
     .value("amplitude", LineshapeMode::amplitude)
     .value("detuning", LineshapeMode::detuning);

  py::class_<MaterialParams>(m, "MaterialParams")
     .def_readonly("band_gap", &MaterialParams::band_gap)
     .def_readonly("effective_mass", &MaterialParams::effective_mass)
     .def_readonly("eps_static", &MaterialParams::eps_static)
     .def_readonly("eps_infinity", &MaterialParams::eps_infinity);

  py::class_<Geometry>(m, "Geometry")
     .def(py::init([](double r, std::string well, std::string barrier, double q, Shape shape) {
            return Geometry{r, std::move(well), std::move(barrier), q, shape};
          }),
          py::arg("core_radius") = 4.0, py::arg("well") = "GaN", py::arg("barrier") = "AlN",
          py::arg("offset_ratio") = 0.76, py::arg("shape") = Shape::cylinder)
     .def_readwrite("core_radius", &Geometry::core_radius)
     .def_readwrite("well", &Geometry::well)
     .def_readwrite("barrier", &Geometry::barrier)
     .def_readwrite("offset_ratio", &Geometry::offset_ratio)
     .def_readwrite("shape", &Geometry::shape);

  py::class_<WellProfile>(m, "WellProfile")
     .def_readonly("core_radius", &WellProfile::core_radius)
     .def_readonly("barrier_height", &WellProfile::barrier_height)
     .def_readonly("well_mass", &WellProfile::well_mass)
     .def_readonly("barrier_mass", &WellProfile::barrier_mass)
     .def_readonly("eps_well", &WellProfile::eps_well)
     .def_readonly("shape", &WellProfile::shape);

  py::class_<SubbandState>(m, "SubbandState")
     .def_readonly("n", &SubbandState::n)
     .def_readonly("l", &SubbandState::l)
     .def_readonly("energy", &SubbandState::energy)
     .def_readonly("kappa_w", &SubbandState::kappa_w)
     .def_readonly("kappa_b", &SubbandState::kappa_b);

  py::class_<QdState>(m, "QdState")
     .def_readonly("n", &QdState::n)
     .def_readonly("l", &QdState::l)
     .def_readonly("energy", &QdState::energy);

  py::class_<DonorState>(m, "DonorState")
     .def_readonly("base", &DonorState::base)
     .def_readonly("a_opt", &DonorState::a_opt)
     .def_readonly("energy", &DonorState::energy)
     .def_readonly("binding_energy", &DonorState::binding_energy)
     .def_readonly("at_boundary", &DonorState::at_boundary);

  py::class_<TransitionData>(m, "TransitionData")
     .def_readonly("dipole_moment", &TransitionData::dipole_moment)
     .def_readonly("energy_gap", &TransitionData::energy_gap)
     .def_readonly("delta_diag", &TransitionData::delta_diag);

  py::class_<ThermalConfig>(m, "ThermalConfig")
     .def(py::init<>())
     .def_readwrite("temperature", &ThermalConfig::temperature)
     .def_readwrite("fermi_offset", &ThermalConfig::fermi_offset)
     .def_readwrite("area", &ThermalConfig::area);

  py::class_<ModelOptions>(m, "ModelOptions")
     .def(py::init<>())
     .def_readwrite("matching", &ModelOptions::matching)
     .def_readwrite("doped", &ModelOptions::doped)
     .def_readwrite("thermal", &ModelOptions::thermal)
     .def_readwrite("gamma", &ModelOptions::gamma)
     .def_readwrite("field", &ModelOptions::field)
     .def_readwrite("background_eps", &ModelOptions::background_eps)
     .def_readwrite("wire_volume_scale", &ModelOptions::wire_volume_scale)
     .def_readwrite("dot_volume_scale", &ModelOptions::dot_volume_scale)
     .def_readwrite("volume_override", &ModelOptions::volume_override)
     .def_readwrite("mode", &ModelOptions::mode);

  py::class_<LineModel>(m, "LineModel")
     .def_readonly("transition", &LineModel::transition)
     .def_readonly("derived_volume", &LineModel::derived_volume)
     .def_readonly("volume_norm", &LineModel::volume_norm)
     .def_readonly("mass_ratio", &LineModel::mass_ratio)
     .def_property_readonly("sheet_density", [](const LineModel &l) { return l.sheet.value; })
     .def_property_readonly("background_eps", [](const LineModel &l) { return l.response.background_eps; });

  m.def("material_lookup", [](const std::string &name) { return material_lookup(name); }, py::arg("name"));
  m.def("resolve", [](const Geometry &g) { return resolve(g); }, py::arg("geometry"));
  m.def("conduction_offset", [](const Geometry &g) { return conduction_offset(g); }, py::arg("geometry"));
  m.def("find_levels", &find_levels, py::arg("l"), py::arg("well"), py::arg("max_n"),
        py::arg("matching") = Matching::mass_weighted);
  m.def("qd_find_levels", &qd_find_levels, py::arg("l"), py::arg("well"), py::arg("max_n"),
        py::arg("matching") = Matching::mass_weighted);
  m.def("radial_wavefunction", &radial_wavefunction, py::arg("state"), py::arg("r"));
  m.def("minimize_energy", [](const SubbandState &s) { return minimize_energy(s); }, py::arg("state"));
  m.def("dipole_element", [](const SubbandState &i, const SubbandState &f) { return dipole_element(i, f); },
        py::arg("initial"), py::arg("final"));
  m.def("qd_dipole", &qd_dipole, py::arg("initial"), py::arg("final"));

  m.def("wire_line", [](const Geometry &g, const ModelOptions &o) { return wire_line(g, MaterialRegistry{}, o); },
        py::arg("geometry"), py::arg("options") = ModelOptions{});
  m.def("dot_line", [](const Geometry &g, const ModelOptions &o) { return dot_line(g, MaterialRegistry{}, o); },
        py::arg("geometry"), py::arg("options") = ModelOptions{});
  m.def(
     "dielectric_function",
     [](const std::vector<double> &grid, const LineModel &line) {
       return dielectric_function(grid, line.transition, line.response).eps;
     },
     py::arg("grid"), py::arg("line"));
  m.def(
     "qd_absorption",
     [](const std::vector<double> &grid, const LineModel &line, double gamma) {
       return spectrum_dict(qd_absorption(grid, line.transition, gamma));
     },
     py::arg("grid"), py::arg("line"), py::arg("gamma") = 10.0);
  m.def(
     "qwr_absorption",
     [](const std::vector<double> &grid, const LineModel &line, const ModelOptions &o) {
       return spectrum_dict(qwr_absorption(grid, line.transition, o.gamma, o.thermal, o.mode, line.mass_ratio));
     },
     py::arg("grid"), py::arg("line"), py::arg("options") = ModelOptions{});

  m.def("bessel_j", [](int n, double x) { return eval_pair(bessel_j, n, x); }, py::arg("order"), py::arg("x"));
  m.def("bessel_k", [](int n, double x) { return eval_pair(bessel_k_mod, n, x); }, py::arg("order"), py::arg("x"));
  m.def("spherical_bessel_j", [](int n, double x) { return eval_pair(spherical_bessel_j, n, x); }, py::arg("order"),
        py::arg("x"));
  m.def("spherical_k", [](int n, double x) { return eval_pair(spherical_k_mod, n, x); }, py::arg("order"),
        py::arg("x"));

  m.def(
     "run_config",
     [](const std::string &text, const std::string &command, const std::string &out_dir) {
       auto cfg       = parse_config(text);
       cfg.command    = parse_command(command);
       cfg.output_dir = out_dir;
       py::gil_scoped_release release;
       const auto res = run(cfg);
       std::vector<std::string> files;
       for (const auto &f : res.files) files.push_back(f.string());
       return std::make_pair(files, res.warnings);
     },
     py::arg("config_text"), py::arg("command"), py::arg("out_dir"),
     "Parse INI text, run one command and return (written files, warnings).");
}
