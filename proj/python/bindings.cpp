#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "chemo/config.hpp"
#include "chemo/diffusion.hpp"
#include "chemo/elliptic.hpp"
#include "chemo/functionals.hpp"
#include "chemo/runner.hpp"
#include "chemo/stepper.hpp"
#include "chemo/verify.hpp"

namespace py = pybind11;
using namespace chemo;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Field to_field(const Array& a) {
  if (a.ndim() != 1) throw py::value_error("expected a 1-D array");
  return Field(std::vector<double>(a.data(), a.data() + a.size()));
}

Array to_array(const Field& f) { return Array(static_cast<py::ssize_t>(f.size()), f.values().data()); }

Grid grid_for(const Field& u) { return Grid(static_cast<int>(u.size())); }

py::dict record_dict(const MonitorRecord& r) {
  py::dict d;
  d["t"] = r.t;
  d["mass"] = r.mass;
  d["F"] = r.F;
  d["D"] = r.D;
  d["source"] = r.source;
  d["F0"] = r.F0;
  d["D0"] = r.D0;
  d["entropy"] = r.entropy;
  d["grad_seminorm"] = r.grad_seminorm;
  d["u_linf"] = r.u_linf;
  d["u_l3"] = r.u_l3;
  d["v_lp"] = r.v_lp;
  d["energy_residual"] = r.energy_residual;
  d["regest1_slack"] = r.regest1_slack;
  d["regest2_slack"] = r.regest2_slack;
  return d;
}

py::dict simulate(const RunManifest& m) {
  m.validate();
  std::vector<MonitorRecord> collected;
  SimState s;
  {
    py::gil_scoped_release release;
    s = run(m.problem, m.solver, Grid(m.n_cells), [&](const MonitorRecord& r) { collected.push_back(r); });
  }
  py::list records;
  for (const auto& r : collected) records.append(record_dict(r));
  const Grid g(m.n_cells);
  py::dict out;
  out["status"] = to_string(s.status);
  out["t"] = s.t;
  out["steps"] = s.step;
  out["x"] = to_array(sample(g, [](double x) { return x; }));
  out["u"] = to_array(s.u);
  out["v"] = to_array(s.v);
  out["records"] = records;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "1D finite-volume Keller-Segel solver with critical diffusion";

  py::enum_<Variant>(m, "Variant")
      .value("Standard", Variant::Standard)
      .value("JaegerLuckhaus", Variant::JaegerLuckhaus);

  py::enum_<Criticality>(m, "Criticality")
      .value("Subcritical", Criticality::Subcritical)
      .value("Critical", Criticality::Critical)
      .value("Supercritical", Criticality::Supercritical);

  py::class_<DiffusionSpec>(m, "DiffusionSpec")
      .def_static("inverse_u", &DiffusionSpec::inverse_u)
      .def_static("inverse_one_plus_u", &DiffusionSpec::inverse_one_plus_u)
      .def_static("power_one_plus_u", &DiffusionSpec::power_one_plus_u, py::arg("p"))
      .def_static("power_u", &DiffusionSpec::power_u, py::arg("p"))
      .def_property_readonly("name", &DiffusionSpec::kind_name)
      .def_property_readonly("exponent", &DiffusionSpec::exponent)
      .def_property_readonly("criticality", &DiffusionSpec::criticality)
      .def("a", [](const DiffusionSpec& s, double u) { return a(s, u); })
      .def("A", [](const DiffusionSpec& s, double u) { return A(s, u); })
      .def("A_tilde", [](const DiffusionSpec& s, double u) { return A_tilde(s, u); })
      .def("b", [](const DiffusionSpec& s, double u) { return b(s, u); })
      .def("__repr__", [](const DiffusionSpec& s) {
        return "DiffusionSpec(" + s.kind_name() + ", p=" + std::to_string(s.exponent()) + ")";
      });

  m.def(
      "solve_elliptic",
      [](Variant variant, const Array& u, double mass) {
        const Field f = to_field(u);
        return to_array(solve_elliptic(variant, f, grid_for(f), mass));
      },
      py::arg("variant"), py::arg("u"), py::arg("mass"),
      "v for cell values u on a uniform grid of len(u) cells.");

  m.def("eval_F", [](const Array& u, const DiffusionSpec& s) {
    const Field f = to_field(u);
    return eval_F(f, s, grid_for(f));
  });
  m.def("eval_D", [](const Array& u, const Array& v, const DiffusionSpec& s) {
    const Field f = to_field(u);
    return eval_D(f, to_field(v), s, grid_for(f));
  });
  m.def("eval_source", [](const Array& u, const Array& v, const DiffusionSpec& s) {
    const Field f = to_field(u);
    return eval_source(f, to_field(v), s, grid_for(f));
  });
  m.def("eval_F0", [](const Array& u, const DiffusionSpec& s, double mass) {
    const Field f = to_field(u);
    return eval_F0(f, s, grid_for(f), mass);
  });
  m.def("eval_D0", [](const Array& u, const Array& v, const DiffusionSpec& s) {
    const Field f = to_field(u);
    return eval_D0(f, to_field(v), s, grid_for(f));
  });
  m.def("check_regest", [](const Array& u, const DiffusionSpec& s, double mass) {
    const Field f = to_field(u);
    const RegularitySlacks r = check_regest(f, s, grid_for(f), mass);
    return py::make_tuple(r.slack1, r.slack2);
  });
  m.def(
      "key_identity_residual",
      [](const std::function<double(double)>& phi, const DiffusionSpec& s, int n_cells) {
        return key_identity_residual(phi, s, Grid(n_cells));
      },
      py::arg("phi"), py::arg("spec"), py::arg("n_cells"));

  py::class_<RunManifest>(m, "RunManifest")
      .def_readwrite("scenario", &RunManifest::scenario)
      .def_readwrite("n_cells", &RunManifest::n_cells)
      .def_readwrite("output_dir", &RunManifest::output_dir)
      .def_property(
          "t_end", [](const RunManifest& r) { return r.problem.t_end; },
          [](RunManifest& r, double t) { r.problem.t_end = t; })
      .def_property_readonly("mass", [](const RunManifest& r) { return r.problem.mass(); })
      .def_property_readonly("variant", [](const RunManifest& r) { return r.problem.variant; })
      .def_property_readonly("diffusion", [](const RunManifest& r) { return r.problem.diffusion; });

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<CompatibilityError>(m, "CompatibilityError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("parse_config", &parse_config, py::arg("text"));
  m.def("load_config", &load_config, py::arg("path"));
  m.def("simulate", &simulate, py::arg("manifest"),
        "Run in memory; returns status, t, steps, x, u, v and the monitor records.");
  m.def(
      "run_scenario",
      [](const RunManifest& manifest) {
        RunSummary s;
        {
          py::gil_scoped_release release;
          s = run_scenario(manifest);
        }
        return py::module_::import("json").attr("loads")(summary_json(s));
      },
      py::arg("manifest"), "Run and write outputs to manifest.output_dir; returns summary.json as a dict.");

  m.def("self_checks", [] {
    py::list out;
    for (const auto& c : run_self_checks()) {
      out.append(py::make_tuple(c.name, c.passed, c.value, c.threshold));
    }
    return out;
  });
}
