#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hpp"
#include "filippov/cli.hpp"
#include "filippov/io.hpp"

#include <cstdlib>

using namespace filippov::cli;
namespace fs = std::filesystem;
using filippov::io::Json;

namespace {

const fs::path fixtures = FILIPPOV_FIXTURES;

RunResult run_on(Command command, std::vector<std::string> files, ReportFormat format = ReportFormat::text,
                 unsigned jobs = 1) {
  RunConfig c;
  c.command = command;
  for (const auto& f : files) c.inputs.push_back(fixtures / f);
  c.format = format;
  c.jobs = jobs;
  return run(c);
}

bool mentions(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

fs::path scratch_file(const std::string& name) {
  return fs::temp_directory_path() / ("filippov_cli_" + std::to_string(std::random_device{}()) + "_" + name);
}

}  // namespace

TEST_CASE("command names") {
  for (Command c : {Command::make, Command::validate, Command::derivations, Command::check_extension, Command::extend,
                    Command::cube, Command::rep_check})
    CHECK(parse_command(command_name(c)) == c);
  CHECK_FALSE(parse_command("nope").has_value());
  CHECK(command_name(Command::check_extension) == "check-extension");
}

TEST_CASE("validate") {
  RunResult ok = run_on(Command::validate, {"simple4.json"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.report == "fundamental_identity: pass (24 tuples)\n");
  RunResult bad = run_on(Command::validate, {"simple4_corrupted.json"});
  CHECK(bad.exit_code == 1);
  CHECK(mentions(bad.report, "fail (24 tuples"));
  CHECK(mentions(bad.report, "at (0, 1, 2, 1, 3)"));
  RunResult both = run_on(Command::validate, {"simple4.json", "simple4_corrupted.json"});
  CHECK(both.exit_code == 1);
  CHECK(mentions(both.report, "== "));
}

TEST_CASE("input errors exit 2") {
  CHECK(run_on(Command::validate, {"missing.json"}).exit_code == 2);
  fs::path p = scratch_file("bad.json");
  std::ofstream(p) << R"({"dim": 2, "basis": ["a", "b"], "brackets": [{"args": [0, 1, 2], "value": []}]})";
  RunConfig c;
  c.inputs = {p};
  RunResult r = run(c);
  fs::remove(p);
  CHECK(r.exit_code == 2);
  CHECK(mentions(r.report, "brackets[0].args"));
  CHECK(run_on(Command::extend, {"heisenberg_like_spec.json"}).exit_code == 2);
  CHECK(run_on(Command::extend, {"heisenberg_like_spec.json", "zero_pair_2_4.json"}).exit_code == 2);
}

TEST_CASE("derivations") {
  RunResult r = run_on(Command::derivations, {"simple4.json"}, ReportFormat::json);
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.report);
  CHECK(doc["command"] == "derivations");
  CHECK(doc["sections"][0]["facts"]["dimension"] == 6);
  CHECK(doc["sections"][0]["facts"]["basis"].size() == 6);
}

TEST_CASE("check-extension") {
  RunResult r = run_on(Command::check_extension, {"heisenberg_like_spec.json"}, ReportFormat::json);
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.report);
  std::vector<std::string> names;
  for (const auto& c : doc["sections"][0]["checks"]) names.push_back(c["name"]);
  for (const char* expected : {"rho_quadratic", "mu_cocycle", "fundamental_identity", "conditions_match_identity",
                               "exact_sequence", "cube_sequence", "module_criterion"})
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  CHECK(run_on(Command::check_extension, {"direct_sum_spec.json"}).exit_code == 0);
}

TEST_CASE("extend") {
  RunResult zero = run_on(Command::extend, {"direct_sum_spec.json", "zero_pair_2_4.json"}, ReportFormat::json);
  CHECK(zero.exit_code == 0);
  Json doc = Json::parse(zero.report);
  Json facts = doc["sections"][0]["facts"];
  CHECK(facts["solvable"] == true);
  for (const auto& row : facts["gamma"])
    for (const auto& x : row) CHECK(x == "0");
  RunResult none = run_on(Command::extend, {"heisenberg_like_spec.json", "heisenberg_like_pair.json"});
  CHECK(none.exit_code == 1);
  CHECK(mentions(none.report, "extendable: fail"));
  CHECK(mentions(none.report, "triple_system_agrees: pass"));
}

TEST_CASE("cube") {
  RunResult flat = run_on(Command::cube, {"abelian2.json"});
  CHECK(flat.exit_code == 0);
  CHECK(mentions(flat.report, "f_delta_biconditional: pass"));
  // the Z block of a nonabelian base brackets like the base
  RunResult s = run_on(Command::cube, {"simple4.json"}, ReportFormat::json);
  CHECK(s.exit_code == 1);
  Json doc = Json::parse(s.report);
  for (const auto& c : doc["sections"][0]["checks"]) CHECK(c["passed"] == (c["name"] != "z_block_abelian_ideal"));
  CHECK(run_on(Command::cube, {"simple4_corrupted.json"}).exit_code == 1);

  fs::path out = scratch_file("cube.json");
  RunConfig c;
  c.command = Command::cube;
  c.inputs = {fixtures / "abelian2.json"};
  c.output = out;
  CHECK(run(c).exit_code == 0);
  CHECK(filippov::io::read_algebra(out).dim() == 6);
  fs::remove(out);
}

TEST_CASE("rep-check") {
  CHECK(run_on(Command::rep_check, {"simple4.json"}).exit_code == 0);
  fs::path p = scratch_file("action.json");
  std::ofstream(p) << R"({"pairs": [{"args": [0, 1], "matrix": [["1"]]}, {"args": [2, 3], "matrix": [["1"]]}]})";
  RunConfig c;
  c.command = Command::rep_check;
  c.inputs = {fixtures / "simple4.json", p};
  RunResult r = run(c);
  fs::remove(p);
  CHECK(r.exit_code == 1);
  CHECK(mentions(r.report, "representation: fail"));
}

TEST_CASE("make writes loadable fixtures") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    fs::path out = scratch_file(name + ".json");
    RunConfig c;
    c.command = Command::make;
    c.fixture = name;
    c.fixture_dim = name == "abelian" ? 3 : 2;
    c.output = out;
    REQUIRE(run(c).exit_code == 0);
    Json doc = filippov::io::read_json(out);
    if (doc.contains("M")) {
      CHECK(filippov::io::read_spec(out).m_dim() > 0);
    } else {
      c.command = Command::validate;
      c.inputs = {out};
      c.output.reset();
      CHECK(run(c).exit_code == 0);
    }
    fs::remove(out);
  }
}

TEST_CASE("reports are deterministic") {
  for (unsigned jobs : {1u, 4u}) {
    CHECK(run_on(Command::cube, {"lie_functional_so3.json"}, ReportFormat::json, jobs).report ==
          run_on(Command::cube, {"lie_functional_so3.json"}, ReportFormat::json, 1).report);
    CHECK(run_on(Command::validate, {"simple4_corrupted.json"}, ReportFormat::text, jobs).report ==
          run_on(Command::validate, {"simple4_corrupted.json"}, ReportFormat::text, 1).report);
  }
}

TEST_CASE("jobs default from the environment") {
  ::setenv("FILIPPOV_LAB_JOBS", "3", 1);
  CHECK(default_jobs() == 3);
  ::setenv("FILIPPOV_LAB_JOBS", "zero", 1);
  CHECK(default_jobs() == 1);
  ::unsetenv("FILIPPOV_LAB_JOBS");
  CHECK(default_jobs() == 1);
}
