#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "faithrep/cli.hpp"
#include "faithrep/error.hpp"
#include "faithrep/families.hpp"
#include "faithrep/mackey_irreps.hpp"
#include "faithrep/minfaith_solver.hpp"
#include "faithrep/oracle.hpp"

namespace py = pybind11;
using namespace faithrep;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

RingParams params(int p, int f, std::optional<int> e, int n) { return RingParams{p, f, e, n}; }

FiniteGroup group(const std::string& spec) { return build_group(parse_group_spec(spec)); }

}  // namespace

PYBIND11_MODULE(_faithrep, m) {
  m.doc() = "Minimal faithful representations of groups over finite chain rings";
  py::register_exception<Error>(m, "FaithrepError", PyExc_ValueError);

  m.def(
      "heisenberg_formula", [](int p, int f, std::optional<int> e, int n, int k) { return formula_heisenberg(params(p, f, e, n), k); },
      py::arg("p"), py::arg("f") = 1, py::arg("e") = 1, py::arg("n") = 1, py::arg("k") = 1);
  m.def(
      "unitriangular_formula",
      [](int p, int f, std::optional<int> e, int n, int size) { return formula_unitriangular(params(p, f, e, n), size); },
      py::arg("p"), py::arg("f") = 1, py::arg("e") = 1, py::arg("n") = 1, py::arg("size") = 4);
  m.def(
      "affine_formula", [](int p, int f, std::optional<int> e, int n) {
        return formula_affine(ChainRing::make(params(p, f, e, n)).q(), n);
      },
      py::arg("p"), py::arg("f") = 1, py::arg("e") = 1, py::arg("n") = 1);
  m.def(
      "two_step_formula", [](const std::string& spec) {
        const auto r = formula_two_step(group(spec));
        return py::dict(py::arg("sqrt_index") = r.sqrt_index, py::arg("center_rank") = r.center_rank,
                        py::arg("value") = r.value);
      },
      py::arg("group"));

  m.def(
      "describe_ring", [](int p, int f, std::optional<int> e, int n) {
        const auto r = ChainRing::make(params(p, f, e, n));
        return py::dict(py::arg("description") = r.describe(), py::arg("size") = r.size(), py::arg("q") = r.q(),
                        py::arg("xi") = r.xi(), py::arg("units") = r.units().size(),
                        py::arg("unramified_poly") = r.unramified_poly());
      },
      py::arg("p"), py::arg("f") = 1, py::arg("e") = 1, py::arg("n") = 1);

  m.def(
      "catalog_summary", [](int p, int f, std::optional<int> e, int n, int k) {
        const MackeyCatalog cat(HeisenbergGroup(ChainRing::make(params(p, f, e, n)), k));
        py::list out;
        for (const auto& s : cat.summary()) {
          out.append(py::dict(py::arg("level") = s.level, py::arg("central_values") = s.central_values,
                              py::arg("orbits_per_value") = s.orbits_per_value,
                              py::arg("lambdas_per_orbit") = s.lambdas_per_orbit, py::arg("dim") = s.dim,
                              py::arg("irreps") = s.irreps()));
        }
        return out;
      },
      py::arg("p"), py::arg("f") = 1, py::arg("e") = 1, py::arg("n") = 1, py::arg("k") = 1);

  m.def(
      "solve_heisenberg", [](int p, int f, std::optional<int> e, int n, int k) {
        return to_python(solve_heisenberg(HeisenbergGroup(ChainRing::make(params(p, f, e, n)), k)).to_json());
      },
      py::arg("p"), py::arg("f") = 1, py::arg("e") = 1, py::arg("n") = 1, py::arg("k") = 1);
  m.def(
      "construct_heisenberg", [](int p, int f, std::optional<int> e, int n, int k) {
        const auto sol = construct_faithful_heisenberg(HeisenbergGroup(ChainRing::make(params(p, f, e, n)), k));
        auto j = sol.to_json();
        j["faithful"] = sol.faithful();
        return to_python(j);
      },
      py::arg("p"), py::arg("f") = 1, py::arg("e") = 1, py::arg("n") = 1, py::arg("k") = 1);
  m.def(
      "construct_affine", [](int p, int f, std::optional<int> e, int n) {
        const auto sol = construct_faithful_affine(AffineGroup(ChainRing::make(params(p, f, e, n))));
        auto j = sol.to_json();
        j["faithful"] = sol.faithful();
        return to_python(j);
      },
      py::arg("p"), py::arg("f") = 1, py::arg("e") = 1, py::arg("n") = 1);
  m.def(
      "construct_two_step", [](const std::string& spec) {
        const auto sol = construct_faithful_two_step(group(spec));
        auto j = sol.to_json();
        j["faithful"] = sol.faithful();
        return to_python(j);
      },
      py::arg("group"));

  m.def(
      "oracle_minfaith", [](const std::string& spec) {
        const auto g = group(spec);
        return min_faithful_exhaustive(g, character_table(g)).min_dim;
      },
      py::arg("group"));
  m.def(
      "character_table", [](const std::string& spec) { return to_python(character_table(group(spec)).to_json()); },
      py::arg("group"));

  m.def(
      "verify", [](std::optional<std::string> suite_json) {
        const auto suite = suite_json ? nlohmann::json::parse(*suite_json) : default_suite();
        return to_python(cross_validate(suite).to_json());
      },
      py::arg("suite_json") = py::none());

  m.def(
      "run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
