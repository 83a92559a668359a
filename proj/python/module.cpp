#include "hopfgen/io.hpp"
#include "hopfgen/jobs.hpp"
#include "hopfgen/pq.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace hopfgen;
namespace fs = std::filesystem;

namespace {

std::string validate(const fs::path& path) {
  auto h = load_hopf(path);
  auto rep = validate_hopf(h);
  json axioms = json::array();
  for (const auto& a : rep.axioms) {
    json e{{"axiom", a.axiom}, {"passed", a.passed}};
    if (!a.passed) {
      json at = json::array();
      for (auto i : a.witness) at.push_back(h.name(i));
      e["witness"] = at;
      e["lhs"] = a.lhs;
      e["rhs"] = a.rhs;
    }
    axioms.push_back(e);
  }
  return json{{"ok", rep.ok()}, {"dim", h.dim()}, {"axioms", axioms}}.dump();
}

std::string verify(const fs::path& algebra, const std::vector<std::string>& checks,
                   const std::optional<fs::path>& cocycle, const std::optional<fs::path>& lambda,
                   std::optional<std::size_t> budget, std::optional<double> timeout, bool strict,
                   const std::optional<fs::path>& cache_dir) {
  JobSpec job;
  job.algebra = algebra;
  job.cocycle = cocycle;
  job.lambda = lambda;
  job.checks = checks;
  if (budget) job.budget.max_pairs = *budget;
  if (timeout) job.budget.max_seconds = *timeout;
  job.strict = strict;
  auto inputs = load_inputs(job);
  std::optional<GroebnerCache> cache;
  if (cache_dir) cache.emplace(*cache_dir);
  Report report;
  {
    py::gil_scoped_release release;
    report = run_job(job, inputs, cache ? &*cache : nullptr);
  }
  json j = report.to_json();
  json seconds = json::object();
  double setup = 0;
  for (const auto& c : report.checks) {
    if (c.id == "(setup)")
      setup = c.seconds;
    else
      seconds[c.id] = c.seconds;
  }
  j["seconds"] = seconds;
  j["setup_seconds"] = setup;
  return j.dump();
}

std::string export_algebra(const std::string& name) {
  auto names = catalog_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw InputError("unknown catalog entry '" + name + "'");
  return hopf_to_json(catalog(name)).dump();
}

std::string cyclic_determinant(std::size_t order) {
  if (order == 0 || order > 8) throw InputError("order must be between 1 and 8");
  auto d = group_determinant(cyclic_group(order));
  return d.ring->format(d.det);
}

}  // namespace

PYBIND11_MODULE(_hopfgen, m) {
  m.doc() = "Exact verification of Hopf algebra cocycles and generic base algebras";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);

  m.def("catalog_names", &catalog_names);
  m.def("check_ids", &check_ids);
  m.def("validate_json", &validate, py::arg("path"));
  m.def("verify_json", &verify, py::arg("algebra"), py::arg("checks"), py::arg("cocycle") = std::nullopt,
        py::arg("lam") = std::nullopt, py::arg("budget") = std::nullopt, py::arg("timeout") = std::nullopt,
        py::arg("strict") = false, py::arg("cache_dir") = std::nullopt);
  m.def("export_json", &export_algebra, py::arg("name"));
  m.def("cyclic_determinant", &cyclic_determinant, py::arg("order"));
}
