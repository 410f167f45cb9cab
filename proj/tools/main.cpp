#include "filippov/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace filippov::cli;
  CLI::App app{"Exact checks for 3-Lie algebras, their extensions and derivations"};
  app.require_subcommand(1);

  RunConfig config;
  config.jobs = default_jobs();
  std::string format = "text";
  std::vector<std::string> inputs;
  std::string output;

  const char* commands[] = {"make", "validate", "derivations", "check-extension", "extend", "cube", "rep-check"};
  const char* help[] = {
      "write a fixture algebra or spec as JSON",
      "check the fundamental identity",
      "compute the derivation algebra",
      "run every extension condition on a spec",
      "solve for an extension of a derivation pair (inputs: spec, pair)",
      "build the cube algebra and check its blocks and f_delta",
      "check a representation (inputs: algebra, optional pair action; default adjoint)",
  };
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i], help[i]);
    if (std::string_view(commands[i]) == "make") {
      sub->add_option("fixture", config.fixture, "fixture name")->required()->check(CLI::IsMember(fixture_names()));
      sub->add_option("--dim", config.fixture_dim, "dimension for abelian, matrix size for gl-trace");
    } else {
      sub->add_option("--input", inputs, "input file (repeatable)")->required();
      sub->add_option("--report", format, "report format")->check(CLI::IsMember({"text", "json"}));
      sub->add_option("--seed", config.seed, "seed for randomized trials");
      sub->add_option("--trials", config.trials, "randomized trials");
      sub->add_option("--witness-cap", config.witness_cap, "witnesses kept per check");
      sub->add_option("--jobs", config.jobs, "parallel sweep workers (default from FILIPPOV_LAB_JOBS, else 1)");
    }
    sub->add_option("--output", output, "output file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  config.command = *parse_command(app.get_subcommands().front()->get_name());
  config.format = format == "json" ? ReportFormat::json : ReportFormat::text;
  config.inputs.assign(inputs.begin(), inputs.end());
  if (!output.empty()) config.output = output;

  RunResult result = run(config);
  (result.exit_code == 2 ? std::cerr : std::cout) << result.report;
  return result.exit_code;
}
