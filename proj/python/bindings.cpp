#include "filippov/cli.hpp"
#include "filippov/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace filippov;
using io::Json;

namespace {

// JSON documents cross the boundary as text; the package wraps them as dicts.
Json parse(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

ThreeLieAlgebra algebra_arg(const std::string& text) { return io::algebra_from_json(parse(text, "algebra"), "algebra"); }

ExtensionSpec spec_arg(const std::string& text) { return io::spec_from_json(parse(text, "spec"), ".", "spec"); }

std::string maps_json(const std::vector<LinearMap>& maps) {
  Json out = Json::array();
  for (const auto& m : maps) out.push_back(io::matrix_to_json(m.matrix()));
  return out.dump();
}

std::pair<int, std::string> run(const std::string& command, const std::vector<std::string>& inputs,
                                const std::string& report, std::uint64_t seed, std::size_t trials,
                                std::size_t witness_cap, unsigned jobs) {
  auto parsed = cli::parse_command(command);
  if (!parsed || *parsed == cli::Command::make) throw InputError("unknown command " + command);
  cli::RunConfig c;
  c.command = *parsed;
  c.inputs.assign(inputs.begin(), inputs.end());
  c.format = report == "text" ? cli::ReportFormat::text : cli::ReportFormat::json;
  c.seed = seed;
  c.trials = trials;
  c.witness_cap = witness_cap;
  c.jobs = jobs;
  py::gil_scoped_release release;
  cli::RunResult r = cli::run(c);
  return {r.exit_code, r.report};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact 3-Lie algebra checks";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("run", &run, py::arg("command"), py::arg("inputs"), py::arg("report") = "json", py::arg("seed") = 0,
        py::arg("trials") = 200, py::arg("witness_cap") = 16, py::arg("jobs") = 1,
        "Run a filippov_lab command on files; returns (exit code, report).");

  m.def("fixture", [](const std::string& name, std::size_t dim) {
    cli::RunConfig c;
    c.command = cli::Command::make;
    c.fixture = name;
    c.fixture_dim = dim;
    cli::RunResult r = cli::run(c);
    if (r.exit_code != 0) throw InputError(r.report);
    return r.report;
  }, py::arg("name"), py::arg("dim") = 0);

  m.def("check_fundamental_identity", [](const std::string& algebra, std::size_t witness_cap, unsigned jobs) {
    ThreeLieAlgebra a = algebra_arg(algebra);
    py::gil_scoped_release release;
    return io::report_to_json(check_fundamental_identity(a, {.witness_cap = witness_cap, .jobs = jobs})).dump();
  }, py::arg("algebra"), py::arg("witness_cap") = 16, py::arg("jobs") = 1);

  m.def("derivation_basis", [](const std::string& algebra) { return maps_json(derivation_algebra(algebra_arg(algebra))); });

  m.def("assemble", [](const std::string& spec) { return io::algebra_to_json(assemble(spec_arg(spec))).dump(); });

  m.def("check_extension_conditions", [](const std::string& spec) {
    ConditionLedger ledger = check_extension_conditions(spec_arg(spec));
    Json out{{"passed", ledger.passed}, {"conditions", Json::array()}};
    for (const auto& r : ledger.conditions) out["conditions"].push_back(io::report_to_json(r));
    return out.dump();
  });

  m.def("solve_extendability", [](const std::string& spec_text, const std::string& pair_text) {
    ExtensionSpec spec = spec_arg(spec_text);
    DerivationPair pair = io::pair_from_json(parse(pair_text, "pair"), spec, "pair");
    GammaSolution sol = solve_extendability(spec, pair);
    Json out{{"solvable", sol.solvable}};
    if (sol.solvable) {
      out["gamma"] = io::matrix_to_json(sol.particular.matrix());
      out["delta"] = io::matrix_to_json(build_delta(pair, sol.particular).matrix());
      out["solution_family_dim"] = sol.homogeneous.dim();
    }
    return out.dump();
  });

  m.def("cube", [](const std::string& algebra) { return io::algebra_to_json(cube(algebra_arg(algebra)).carrier()).dump(); });
}
